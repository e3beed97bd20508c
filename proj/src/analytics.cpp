#include "qct/analytics.hpp"

#include "qct/measurement.hpp"

#include <cmath>

namespace qct {

double eta_classical(int d) {
  if (d < 2) throw DimensionError("eta_classical: dimension must be >= 2");
  return 1.0 / (d + 1);
}

double eta_closed_form(NoiseKind kind, int d, double p, int x) {
  if (d < 2) throw DimensionError("eta_closed_form: dimension must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("eta_closed_form: p must be in [0,1]");
  const double q = 1.0 - p;
  const double pf = [&] {
    const double f = 1.0 - p * d / (d - 1.0);
    return f * f;
  }();
  switch (kind) {
    case NoiseKind::AD: return (2.0 * q + (d - 2.0) * q * q) / d;
    case NoiseKind::PF: return pf;
    case NoiseKind::DP: return q * q;
    case NoiseKind::DF: return x == 0 ? 1.0 : pf;
    case NoiseKind::Custom: break;
  }
  throw std::invalid_argument("eta_closed_form: no closed form for custom channels");
}

ThresholdResult threshold(NoiseKind kind, int d, int x) {
  if (d < 2) throw DimensionError("threshold: dimension must be >= 2");
  const double bound = eta_classical(d);
  switch (kind) {
    case NoiseKind::AD: {
      if (d == 2)
        throw DimensionError("threshold: AD closed form needs d >= 3");
      const double dd = d;
      const double p = (dd * dd - 1.0 - std::sqrt(dd * dd * dd + 1.0)) / (dd * dd - dd - 2.0);
      return {kind, d, p, bound};
    }
    case NoiseKind::PF: {
      const double p = (d - 1.0) / d * (1.0 - 1.0 / std::sqrt(d + 1.0));
      return {kind, d, p, bound};
    }
    case NoiseKind::DP: {
      const double p = 1.0 - 1.0 / std::sqrt(d + 1.0);
      return {kind, d, p, bound};
    }
    case NoiseKind::DF: {
      if (x == 0) return {kind, d, 1.0, bound};
      auto pf = threshold(NoiseKind::PF, d);
      return {kind, d, pf.p_th, bound};
    }
    case NoiseKind::Custom: break;
  }
  throw std::invalid_argument("threshold: no closed form for custom channels");
}

double eta_deviation(const ComplexMatrix& magnitudes, double delta_phi) {
  if (!magnitudes.square()) throw DimensionError("eta_deviation: matrix not square");
  const int d = magnitudes.rows();

  double coherence_in = 0.0;
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      if (u != v) coherence_in += std::abs(magnitudes(u, v));
  if (coherence_in == 0.0)
    throw std::invalid_argument("eta_deviation: input coherence is zero");

  double coherence_out = 0.0;
  for (int j1 = 0; j1 < d; ++j1)
    for (int j1p = 0; j1p < d; ++j1p) {
      if (j1 == j1p) continue;
      Cx sum = 0.0;
      for (int l = 0; l < d; ++l) {
        const int a = mod_sub(j1, l, d);
        const int b = mod_sub(j1p, l, d);
        // a and b are canonical representatives and never equal, so the sign
        // is always ±1.
        const double sign = b > a ? 1.0 : -1.0;
        sum += std::abs(magnitudes(a, b)) * std::polar(1.0, delta_phi * sign);
      }
      coherence_out += std::abs(sum) / d;
    }
  return coherence_out / coherence_in;
}

bool advantage_window(NoiseKind kind, int d, double p, int x) {
  return eta_closed_form(kind, d, p, x) > eta_classical(d);
}

ResourceSummary resource_summary(int d) {
  if (d < 2) throw DimensionError("resource_summary: dimension must be >= 2");
  const double lg = std::log2(static_cast<double>(d));
  return {d, static_cast<long>(d) * d, static_cast<long>(d), 2.0 * lg,
          static_cast<int>(std::ceil(lg))};
}

} // namespace qct
