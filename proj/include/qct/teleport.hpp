#pragma once

#include "qct/channels.hpp"
#include "qct/linalg.hpp"
#include "qct/measurement.hpp"
#include "qct/states.hpp"

#include <optional>

namespace qct {

struct DegenerateOutcomeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndefinedEfficiencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TeleportOutcome {
  int d, x, y;
  double probability;
  DensityMatrix bob_state;
  double coherence_in;
  double coherence_out;
  // Ratio out/in; absent when the input carries no coherence.
  std::optional<double> efficiency;
};

// Σ_{u≠v} |ρ_uv|
double coherence_l1(const ComplexMatrix& rho);

// Throws UndefinedEfficiencyError when the input coherence is zero.
double efficiency(const TeleportOutcome& outcome);

// Hard cap on the three-qudit engine; it exists as an oracle, not a
// workhorse (DP noise alone contributes d⁴ composed terms).
inline constexpr int brute_dim_cap = 6;

// Full tensor route: applies chan_a ⊗ chan_b to the shared pair (identity
// when null), conjugates ρ_T ⊗ ρ_AB' by Π_x^y ⊗ I on the (T, A, B) order,
// traces out (T, A) and normalizes by the measured probability. Accepts any
// two-qudit pair state (ideal, noisy singlet, pre-noised).
TeleportOutcome teleport_brute(const TargetState& target, const DensityMatrix& pair,
                               const KrausChannel* chan_a, const KrausChannel* chan_b,
                               int x, int y);

// Single-qudit route: ρ_B = G(J*(ρ_T)) / Tr[G(J*(ρ_T))]; with no noise G
// defaults to ρ ↦ ρ/d.
TeleportOutcome teleport_cjks(const TargetState& target, const ComposedNoise* noise,
                              int x, int y);

struct PerfectBasisReport {
  bool holds;
  double max_deviation;
};

// Whether noise-then-measure equals measure alone: compares G∘J* against
// J*/d on all d² matrix units and all outcomes y of family x.
PerfectBasisReport perfect_basis_check(const ComposedNoise& noise, int x,
                                       double tol = 1e-10);

} // namespace qct
