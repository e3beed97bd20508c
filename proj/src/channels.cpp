#include "qct/channels.hpp"

#include "qct/kernels.hpp"
#include "qct/measurement.hpp"
#include "qct/states.hpp"

#include <cmath>
#include <numbers>

namespace qct {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_channel_args(int d, double p) {
  if (d < 2) throw DimensionError("channel: dimension must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("channel: p must be in [0,1]");
}

Cx omega_pow(int d, long k) { return std::polar(1.0, two_pi * k / d); }

} // namespace

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::AD: return "ad";
    case NoiseKind::PF: return "pf";
    case NoiseKind::DP: return "dp";
    case NoiseKind::DF: return "df";
    case NoiseKind::Custom: return "custom";
  }
  return "?";
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "ad") return NoiseKind::AD;
  if (name == "pf") return NoiseKind::PF;
  if (name == "dp") return NoiseKind::DP;
  if (name == "df") return NoiseKind::DF;
  if (name == "custom") return NoiseKind::Custom;
  throw std::invalid_argument("unknown noise kind: " + name);
}

KrausChannel kraus_ad(int d, double p) {
  require_channel_args(d, p);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  ComplexMatrix e0(d, d);
  e0(0, 0) = 1.0;
  const double keep = std::sqrt(1.0 - p);
  for (int j = 1; j < d; ++j) e0(j, j) = keep;
  ops.push_back(std::move(e0));
  const double decay = std::sqrt(p);
  for (int j = 1; j < d; ++j) {
    ComplexMatrix e(d, d);
    e(0, j) = decay;
    ops.push_back(std::move(e));
  }
  return {d, NoiseKind::AD, p, std::move(ops)};
}

KrausChannel kraus_pf(int d, double p) {
  require_channel_args(d, p);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  ComplexMatrix e0(d, d);
  const double a0 = std::sqrt(1.0 - p);
  for (int j = 0; j < d; ++j) e0(j, j) = a0;
  ops.push_back(std::move(e0));
  const double am = std::sqrt(p / (d - 1));
  for (int m = 1; m < d; ++m) {
    ComplexMatrix e(d, d);
    for (int j = 0; j < d; ++j) e(j, j) = am * omega_pow(d, static_cast<long>(j) * m);
    ops.push_back(std::move(e));
  }
  return {d, NoiseKind::PF, p, std::move(ops)};
}

KrausChannel kraus_dp(int d, double p) {
  require_channel_args(d, p);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  ComplexMatrix e00(d, d);
  const double a00 = std::sqrt(1.0 - (static_cast<double>(d) * d - 1.0) * p / (d * d));
  for (int j = 0; j < d; ++j) e00(j, j) = a00;
  ops.push_back(std::move(e00));
  const double amn = std::sqrt(p) / d;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      if (m == 0 && n == 0) continue;
      ComplexMatrix e(d, d);
      for (int j = 0; j < d; ++j)
        e(j, mod_add(j, n, d)) = amn * omega_pow(d, static_cast<long>(j) * m);
      ops.push_back(std::move(e));
    }
  return {d, NoiseKind::DP, p, std::move(ops)};
}

KrausChannel kraus_df(int d, double p) {
  require_channel_args(d, p);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  ComplexMatrix e0(d, d);
  const double a0 = std::sqrt(1.0 - p);
  for (int j = 0; j < d; ++j) e0(j, j) = a0;
  ops.push_back(std::move(e0));
  const double am = std::sqrt(p / (d - 1));
  for (int m = 1; m < d; ++m) {
    ComplexMatrix e(d, d);
    for (int j = 0; j < d; ++j) e(j, mod_add(j, m, d)) = am;
    ops.push_back(std::move(e));
  }
  return {d, NoiseKind::DF, p, std::move(ops)};
}

KrausChannel identity_channel(int d) {
  if (d < 2) throw DimensionError("channel: dimension must be >= 2");
  std::vector<ComplexMatrix> ops;
  ops.push_back(ComplexMatrix::identity(d));
  return {d, NoiseKind::Custom, 0.0, std::move(ops)};
}

KrausChannel custom_channel(int d, std::vector<ComplexMatrix> ops, double completeness_tol) {
  if (d < 2) throw DimensionError("channel: dimension must be >= 2");
  if (ops.empty()) throw InvalidStateError("custom channel: no operators");
  for (const auto& e : ops)
    if (e.rows() != d || e.cols() != d)
      throw DimensionError("custom channel: operator dimension mismatch");
  KrausChannel chan{d, NoiseKind::Custom, 0.0, std::move(ops)};
  const double dev = completeness_deviation(chan);
  if (dev > completeness_tol)
    throw InvalidStateError("custom channel: completeness deviation " + std::to_string(dev));
  return chan;
}

KrausChannel make_channel(NoiseKind kind, int d, double p) {
  switch (kind) {
    case NoiseKind::AD: return kraus_ad(d, p);
    case NoiseKind::PF: return kraus_pf(d, p);
    case NoiseKind::DP: return kraus_dp(d, p);
    case NoiseKind::DF: return kraus_df(d, p);
    case NoiseKind::Custom: break;
  }
  throw std::invalid_argument("make_channel: custom channels come from files");
}

ComplexMatrix apply_channel(const KrausChannel& chan, const ComplexMatrix& rho) {
  if (rho.rows() != chan.d || rho.cols() != chan.d)
    throw DimensionError("apply_channel: state dimension mismatch");
  return kernels::kraus_apply(chan.ops, rho);
}

double completeness_deviation(const KrausChannel& chan) {
  ComplexMatrix sum(chan.d, chan.d);
  for (const auto& e : chan.ops) sum += adjoint(e) * e;
  return max_abs_diff(sum, ComplexMatrix::identity(chan.d));
}

ComposedNoise compose_f(const KrausChannel& bob, const KrausChannel& alice) {
  if (bob.d != alice.d) throw DimensionError("compose_f: channel dimensions differ");
  std::vector<ComplexMatrix> ops;
  ops.reserve(bob.ops.size() * alice.ops.size());
  for (const auto& ea : bob.ops) {
    for (const auto& eb : alice.ops) ops.push_back(ea * transpose(eb));
  }
  return {bob.d, bob.kind, alice.kind, bob.p, alice.p, std::move(ops)};
}

ComposedNoise composed_identity(int d) {
  return compose_f(identity_channel(d), identity_channel(d));
}

ComposedNoise compose_symmetric(NoiseKind kind, int d, double p) {
  const KrausChannel chan = make_channel(kind, d, p);
  return compose_f(chan, chan);
}

ComplexMatrix cjks_g(const ComposedNoise& noise, const ComplexMatrix& rho) {
  if (rho.rows() != noise.d || rho.cols() != noise.d)
    throw DimensionError("cjks_g: state dimension mismatch");
  ComplexMatrix out = kernels::kraus_apply(noise.ops, rho);
  out *= 1.0 / noise.d;
  return out;
}

double verify_transpose_identity(const KrausChannel& chan) {
  const int d = chan.d;
  const ComplexMatrix phi = max_entangled(d).rho_ab.matrix();
  const ComplexMatrix eye = ComplexMatrix::identity(d);

  std::vector<ComplexMatrix> left, right;
  left.reserve(chan.ops.size());
  right.reserve(chan.ops.size());
  for (const auto& e : chan.ops) {
    left.push_back(tensor(e, eye));
    right.push_back(tensor(eye, transpose(e)));
  }
  const ComplexMatrix lhs = kernels::kraus_apply(left, phi);
  const ComplexMatrix rhs = kernels::kraus_apply(right, phi);
  return max_abs_diff(lhs, rhs);
}

} // namespace qct
