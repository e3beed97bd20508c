#pragma once

#include "qct/channels.hpp"
#include "qct/linalg.hpp"

namespace qct {

// Best coherence-transfer ratio without entanglement: 1/(d+1).
double eta_classical(int d);

// Closed-form teleportation efficiency for engineered targets.
//   AD: [2(1−p) + (d−2)(1−p)²]/d
//   PF: (1 − dp/(d−1))²
//   DP: (1−p)²  (dimension-independent)
//   DF: 1 for x = 0, the PF value otherwise
// x is consulted only for DF.
double eta_closed_form(NoiseKind kind, int d, double p, int x = 0);

struct ThresholdResult {
  NoiseKind kind;
  int d;
  double p_th;
  double classical_bound;
};

// Noise strength where the closed-form efficiency meets the classical bound.
//   AD: (d² − 1 − √(d³+1)) / (d² − d − 2), d ≥ 3
//   PF: (d−1)/d · (1 − 1/√(d+1))
//   DP: 1 − 1/√(d+1)
//   DF: 1 for x = 0 (advantage for every p < 1), PF value otherwise
ThresholdResult threshold(NoiseKind kind, int d, int x = 1);

// Coherence ratio of a phase-engineered state carrying a uniform phase error
// delta_phi on the upper triangle, evaluated from magnitudes alone:
//   C_out = Σ_{j1≠j1'} (1/d) |Σ_l |ρ_{j1⊖l, j1'⊖l}| e^{iδ·sgn[(j1'⊖l)−(j1⊖l)]}|
double eta_deviation(const ComplexMatrix& magnitudes, double delta_phi);

// Strict inequality: equality with the bound counts as no advantage.
bool advantage_window(NoiseKind kind, int d, double p, int x = 0);

struct ResourceSummary {
  int d;
  long outcomes_bell; // d² states a full Bell-basis measurement resolves
  long outcomes_povm; // d outcomes of one POVM family
  double cbits_full;  // 2·log₂ d
  int cbits_povm;     // ⌈log₂ d⌉
};

ResourceSummary resource_summary(int d);

} // namespace qct
