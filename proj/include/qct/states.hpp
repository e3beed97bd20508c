#pragma once

#include "qct/linalg.hpp"
#include "qct/rng.hpp"

#include <optional>
#include <vector>

namespace qct {

struct RejectedSampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single-qudit target state. phase_profile carries the per-level phases
// applied by the engineering step (absent for raw samples and perturbed
// states, whose off-diagonal phases are not of difference form).
struct TargetState {
  int d;
  DensityMatrix rho;
  std::optional<std::vector<double>> phase_profile;
};

struct EntangledPair {
  int d;
  DensityMatrix rho_ab; // d²-dimensional, subsystem order (A, B)
};

// r|Φ⟩⟨Φ| + (1-r) I/d²; separable exactly when r ≤ 1/(d+1).
struct NoisySinglet {
  int d;
  double r;
  DensityMatrix rho_r;
  bool separable;
};

struct DeviationConfig {
  double delta_phi; // radians, applied uniformly to the upper triangle
  int basis_x;      // POVM family the phases are engineered for
};

// |Φ⟩ = Σ_k |kk⟩/√d
EntangledPair max_entangled(int d);

// φ_j = π x j (d−j) / d
std::vector<double> engineered_phases(int d, int x);

// U_φ = I + (e^{iφ}−1)|j⟩⟨j|
ComplexMatrix phase_gate(int d, double phi, int j);

// Conjugates the real reference matrix by the product of the d phase gates.
// Off-diagonal magnitudes and eigenvalues are untouched (diagonal unitary).
TargetState engineer_phases(const ComplexMatrix& magnitudes, int x);

// Engineered state with every upper-triangle phase shifted by delta_phi.
// The uniform shift is not a unitary for d ≥ 3 and can push eigenvalues
// below zero; the checked form throws RejectedSampleError in that case,
// the unchecked form returns the state regardless and reports the minimum
// eigenvalue for diagnostics.
TargetState perturbed_state(const ComplexMatrix& magnitudes, const DeviationConfig& dev);
TargetState perturbed_state_unchecked(const ComplexMatrix& magnitudes, const DeviationConfig& dev,
                                      double* min_eigenvalue = nullptr);

NoisySinglet noisy_singlet(int d, double r);

// |ψ⟩ = z/‖z‖, z i.i.d. complex Gaussian (Haar on pure states).
TargetState sample_haar_pure(int d, RngStream& rng);

// ρ = GG†/Tr(GG†), G a complex Ginibre matrix (Hilbert-Schmidt measure).
TargetState sample_hs_mixed(int d, RngStream& rng);

// Entrywise |·| of a state; the real reference matrix fed to the engineering
// step.
ComplexMatrix magnitudes_of(const ComplexMatrix& rho);

// Uniform 1/d magnitudes engineered for family x (coherence d−1, η = 1).
TargetState max_coherent(int d, int x);

} // namespace qct
