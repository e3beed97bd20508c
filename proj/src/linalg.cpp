#include "qct/linalg.hpp"

#include "qct/kernels.hpp"
#include "qct/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace qct {

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch");
}

} // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  check_same_shape(*this, o, "operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  check_same_shape(*this, o, "operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Cx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long work = static_cast<long>(a.rows()) * a.cols() * b.cols();
  if (parallel::enabled() && work >= parallel::grain) return kernels::matmul_parallel(a, b);
  return kernels::matmul_serial(a, b);
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

Cx trace(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("trace: matrix not square");
  Cx t = 0.0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& x : m.data()) v = std::max(v, std::abs(x));
  return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double v = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) v = std::max(v, std::abs(da[i] - db[i]));
  return v;
}

bool all_finite(const ComplexMatrix& m) {
  for (const auto& x : m.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long work = static_cast<long>(a.rows()) * a.cols() * b.rows() * b.cols();
  if (parallel::enabled() && work >= parallel::grain) return kernels::kron_parallel(a, b);
  return kernels::kron_serial(a, b);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  if (!m.square()) throw DimensionError("partial_trace: matrix not square");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("partial_trace: subsystem dimension < 1");
    total *= d;
  }
  if (total != m.rows()) throw DimensionError("partial_trace: dims do not factor the matrix");
  if (keep.empty()) throw DimensionError("partial_trace: keep set must be nonempty");

  const int ns = static_cast<int>(dims.size());
  std::vector<bool> kept(ns, false);
  for (int k : keep) {
    if (k < 0 || k >= ns) throw DimensionError("partial_trace: keep index out of range");
    kept[k] = true;
  }

  // Row-major strides: subsystem 0 is slowest.
  std::vector<long> stride(ns, 1);
  for (int s = ns - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  long dk = 1, dt = 1;
  std::vector<int> keep_idx, tr_idx;
  for (int s = 0; s < ns; ++s) {
    if (kept[s]) {
      keep_idx.push_back(s);
      dk *= dims[s];
    } else {
      tr_idx.push_back(s);
      dt *= dims[s];
    }
  }

  // Offset of each kept (resp. traced) multi-index into the full space.
  auto offsets = [&](const std::vector<int>& subs) {
    long count = 1;
    for (int s : subs) count *= dims[s];
    std::vector<long> off(count, 0);
    for (long c = 0; c < count; ++c) {
      long rem = c;
      for (int si = static_cast<int>(subs.size()) - 1; si >= 0; --si) {
        const int s = subs[si];
        off[c] += (rem % dims[s]) * stride[s];
        rem /= dims[s];
      }
    }
    return off;
  };
  const std::vector<long> koff = offsets(keep_idx);
  const std::vector<long> toff = offsets(tr_idx);

  ComplexMatrix out(static_cast<int>(dk), static_cast<int>(dk));
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Cx sum = 0.0;
      for (long t = 0; t < dt; ++t)
        sum += m(static_cast<int>(koff[r] + toff[t]), static_cast<int>(koff[c] + toff[t]));
      out(static_cast<int>(r), static_cast<int>(c)) = sum;
    }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("hermitian_eigenvalues: matrix not square");
  const int n = m.rows();
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).front();
}

std::string DensityViolation::describe() const {
  switch (kind) {
    case Kind::NotSquare: return "matrix is not square";
    case Kind::NonFinite: return "matrix has non-finite entries";
    case Kind::Hermiticity: return "hermiticity violation " + std::to_string(deviation);
    case Kind::Trace: return "trace violation " + std::to_string(deviation);
    case Kind::Positivity: return "positivity violation " + std::to_string(deviation);
  }
  return "unknown violation";
}

DensityCheckResult check_density(const ComplexMatrix& m, double tol) {
  using K = DensityViolation::Kind;
  if (!m.square()) return {.state = {}, .violation = DensityViolation{K::NotSquare, 0.0}};
  if (!all_finite(m)) return {.state = {}, .violation = DensityViolation{K::NonFinite, 0.0}};

  double herm = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
  if (herm > tol) return {.state = {}, .violation = DensityViolation{K::Hermiticity, herm}};

  const double tr_dev = std::abs(trace(m) - Cx{1.0, 0.0});
  if (tr_dev > tol) return {.state = {}, .violation = DensityViolation{K::Trace, tr_dev}};

  const double min_eig = min_hermitian_eigenvalue(m);
  if (min_eig < -tol) return {.state = {}, .violation = DensityViolation{K::Positivity, -min_eig}};

  return {.state = DensityMatrix::unchecked(m), .violation = {}};
}

DensityMatrix DensityMatrix::checked(ComplexMatrix m, double tol) {
  auto result = check_density(m, tol);
  if (!result.ok()) throw InvalidStateError("density matrix: " + result.violation->describe());
  return std::move(*result.state);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

} // namespace qct
