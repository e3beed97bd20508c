#include "qct/measurement.hpp"

#include "qct/kernels.hpp"

#include <cmath>
#include <numbers>

namespace qct {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_index(int v, int d, const char* what) {
  if (v < 0 || v >= d) throw DimensionError(std::string(what) + ": index out of range");
}

} // namespace

BellVector bell_state(int d, int n, int m) {
  if (d < 2) throw DimensionError("bell_state: dimension must be >= 2");
  require_index(n, d, "bell_state n");
  require_index(m, d, "bell_state m");
  std::vector<Cx> v(static_cast<std::size_t>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    v[static_cast<std::size_t>(j) * d + mod_add(j, m, d)] = std::polar(amp, two_pi * j * n / d);
  return {d, n, m, std::move(v)};
}

ComplexMatrix bell_projector(const BellVector& v) {
  const int dd = v.d * v.d;
  ComplexMatrix out(dd, dd);
  for (int r = 0; r < dd; ++r) {
    if (v.vec[r] == Cx{}) continue;
    for (int c = 0; c < dd; ++c) out(r, c) = v.vec[r] * std::conj(v.vec[c]);
  }
  return out;
}

std::vector<PovmElement> povm_set(int d, int x) {
  if (d < 2) throw DimensionError("povm_set: dimension must be >= 2");
  require_index(x, d, "povm_set x");
  std::vector<PovmElement> out;
  out.reserve(d);
  for (int y = 0; y < d; ++y) {
    ComplexMatrix op(d * d, d * d);
    for (int l = 0; l < d; ++l)
      op += bell_projector(bell_state(d, mod_add(x * l, y, d), l));
    out.push_back({d, x, y, std::move(op)});
  }
  return out;
}

WOperator w_operator(int d, int n, int m) {
  if (d < 2) throw DimensionError("w_operator: dimension must be >= 2");
  require_index(n, d, "w_operator n");
  require_index(m, d, "w_operator m");
  ComplexMatrix op(d, d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    op(mod_add(j, m, d), j) = std::polar(amp, -two_pi * j * n / d);
  return {d, n, m, std::move(op)};
}

std::vector<ComplexMatrix> w_family(int d, int x, int y) {
  require_index(x, d, "w_family x");
  require_index(y, d, "w_family y");
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (int l = 0; l < d; ++l)
    ops.push_back(w_operator(d, mod_add(x * l, y, d), l).op);
  return ops;
}

ComplexMatrix measurement_map(int d, int x, int y, const ComplexMatrix& rho) {
  if (rho.rows() != d || rho.cols() != d)
    throw DimensionError("measurement_map: state dimension mismatch");
  const auto ops = w_family(d, x, y);
  return kernels::kraus_apply(ops, rho);
}

} // namespace qct
