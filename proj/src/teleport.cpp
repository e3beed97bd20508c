#include "qct/teleport.hpp"

#include "qct/kernels.hpp"

#include <cmath>

namespace qct {

namespace {

constexpr double degenerate_prob = 1e-14;

TeleportOutcome make_outcome(int d, int x, int y, double prob, ComplexMatrix bob,
                             double coherence_in) {
  const double coherence_out = coherence_l1(bob);
  std::optional<double> eta;
  if (coherence_in > 0.0) eta = coherence_out / coherence_in;
  return {d, x, y, prob, DensityMatrix::unchecked(std::move(bob)), coherence_in,
          coherence_out, eta};
}

} // namespace

double coherence_l1(const ComplexMatrix& rho) {
  if (!rho.square()) throw DimensionError("coherence_l1: matrix not square");
  double sum = 0.0;
  for (int u = 0; u < rho.rows(); ++u)
    for (int v = 0; v < rho.cols(); ++v)
      if (u != v) sum += std::abs(rho(u, v));
  return sum;
}

double efficiency(const TeleportOutcome& outcome) {
  if (!outcome.efficiency)
    throw UndefinedEfficiencyError("efficiency undefined: input coherence is zero");
  return *outcome.efficiency;
}

TeleportOutcome teleport_brute(const TargetState& target, const DensityMatrix& pair,
                               const KrausChannel* chan_a, const KrausChannel* chan_b,
                               int x, int y) {
  const int d = target.d;
  if (d > brute_dim_cap)
    throw DimensionError("teleport_brute: supported only up to d = " +
                         std::to_string(brute_dim_cap));
  if (pair.dim() != d * d) throw DimensionError("teleport_brute: pair is not two-qudit");
  if (x < 0 || x >= d || y < 0 || y >= d)
    throw DimensionError("teleport_brute: measurement indices out of range");

  ComplexMatrix pair_state = pair.matrix();
  if (chan_a || chan_b) {
    const KrausChannel ident = identity_channel(d);
    const KrausChannel& ca = chan_a ? *chan_a : ident;
    const KrausChannel& cb = chan_b ? *chan_b : ident;
    if (ca.d != d || cb.d != d) throw DimensionError("teleport_brute: channel dimension mismatch");
    std::vector<ComplexMatrix> pair_ops;
    pair_ops.reserve(ca.ops.size() * cb.ops.size());
    for (const auto& ea : ca.ops)
      for (const auto& eb : cb.ops) pair_ops.push_back(tensor(ea, eb));
    pair_state = kernels::kraus_apply(pair_ops, pair_state);
  }

  const ComplexMatrix full = tensor(target.rho.matrix(), pair_state);

  ComplexMatrix projector(d * d, d * d);
  for (int l = 0; l < d; ++l)
    projector += bell_projector(bell_state(d, mod_add(x * l, y, d), l));
  const ComplexMatrix extended = tensor(projector, ComplexMatrix::identity(d));

  const ComplexMatrix collapsed = extended * full * adjoint(extended);
  const double prob = trace(collapsed).real();
  if (prob < degenerate_prob)
    throw DegenerateOutcomeError("teleport_brute: outcome probability below 1e-14");

  const int dims[] = {d, d, d};
  const int keep[] = {2};
  ComplexMatrix bob = partial_trace(collapsed, dims, keep);
  bob *= 1.0 / prob;

  return make_outcome(d, x, y, prob, std::move(bob), coherence_l1(target.rho.matrix()));
}

TeleportOutcome teleport_cjks(const TargetState& target, const ComposedNoise* noise,
                              int x, int y) {
  const int d = target.d;
  if (x < 0 || x >= d || y < 0 || y >= d)
    throw DimensionError("teleport_cjks: measurement indices out of range");
  if (noise && noise->d != d) throw DimensionError("teleport_cjks: noise dimension mismatch");

  ComplexMatrix mapped = measurement_map(d, x, y, target.rho.matrix());
  ComplexMatrix evolved = noise ? cjks_g(*noise, mapped) : mapped * (1.0 / d);

  const double prob = trace(evolved).real();
  if (prob < degenerate_prob)
    throw DegenerateOutcomeError("teleport_cjks: outcome probability below 1e-14");
  evolved *= 1.0 / prob;

  return make_outcome(d, x, y, prob, std::move(evolved), coherence_l1(target.rho.matrix()));
}

PerfectBasisReport perfect_basis_check(const ComposedNoise& noise, int x, double tol) {
  const int d = noise.d;
  if (x < 0 || x >= d) throw DimensionError("perfect_basis_check: x out of range");

  double max_dev = 0.0;
  for (int y = 0; y < d; ++y) {
    const auto w_ops = w_family(d, x, y);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        ComplexMatrix unit(d, d);
        unit(i, j) = 1.0;
        const ComplexMatrix mapped = kernels::kraus_apply(w_ops, unit);
        const ComplexMatrix noisy = cjks_g(noise, mapped);
        max_dev = std::max(max_dev, max_abs_diff(noisy, mapped * (1.0 / d)));
      }
  }
  return {max_dev <= tol, max_dev};
}

} // namespace qct
