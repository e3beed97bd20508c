#pragma once

#include "qct/linalg.hpp"

#include <string>
#include <vector>

namespace qct {

enum class NoiseKind { AD, PF, DP, DF, Custom };

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

struct KrausChannel {
  int d;
  NoiseKind kind;
  double p; // noise strength (0 for Custom)
  std::vector<ComplexMatrix> ops;
};

// All products F_ab = E_a E_b^T with E_a from Bob's channel and E_b from
// Alice's (the transposed side). Flat list, a-major, zero products kept so
// indices line up with the per-channel case tables.
struct ComposedNoise {
  int d;
  NoiseKind bob_kind, alice_kind;
  double p_bob, p_alice;
  std::vector<ComplexMatrix> ops;
};

// d-1 excited levels decaying to |0⟩ with equal probability:
// E_0 = |0⟩⟨0| + √(1−p) Σ_{j≥1}|j⟩⟨j|,  E_j = √p |0⟩⟨j|.
KrausChannel kraus_ad(int d, double p);

// E_0 = √(1−p) I,  E_m = √(p/(d−1)) Z^m,  Z = Σ_j ω_d^j |j⟩⟨j|.
KrausChannel kraus_pf(int d, double p);

// E_00 = √(1−(d²−1)p/d²) I,  E_mn = (√p/d) Σ_j ω_d^{jm} |j⟩⟨j⊕n|, (m,n)≠(0,0).
// Acts as ρ ↦ (1−p)ρ + p I/d on every input.
KrausChannel kraus_dp(int d, double p);

// E_0 = √(1−p) I,  E_m = √(p/(d−1)) Σ_j |j⟩⟨j⊕m|.
KrausChannel kraus_df(int d, double p);

// Single-operator identity channel (the noiseless stand-in).
KrausChannel identity_channel(int d);

KrausChannel custom_channel(int d, std::vector<ComplexMatrix> ops,
                            double completeness_tol = 1e-8);

KrausChannel make_channel(NoiseKind kind, int d, double p);

// Σ E ρ E†
ComplexMatrix apply_channel(const KrausChannel& chan, const ComplexMatrix& rho);

// max |Σ E†E − I|
double completeness_deviation(const KrausChannel& chan);

ComposedNoise compose_f(const KrausChannel& bob, const KrausChannel& alice);
ComposedNoise composed_identity(int d);
ComposedNoise compose_symmetric(NoiseKind kind, int d, double p);

// G(ρ) = (1/d) Σ_ab F_ab ρ F_ab†
ComplexMatrix cjks_g(const ComposedNoise& noise, const ComplexMatrix& rho);

// max entry of (ε⊗I)(|Φ⟩⟨Φ|) − (I⊗ε^T)(|Φ⟩⟨Φ|); ≤ 1e-10 for every shipped
// channel (transpose taken in the computational basis).
double verify_transpose_identity(const KrausChannel& chan);

} // namespace qct
