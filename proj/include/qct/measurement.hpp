#pragma once

#include "qct/linalg.hpp"

#include <vector>

namespace qct {

// |Ψ_nm⟩ = Σ_j e^{i2πjn/d} |j⟩⊗|j⊕m⟩ / √d on the (T, A) pair.
struct BellVector {
  int d, n, m;
  std::vector<Cx> vec; // length d², component order (T slow, A fast)
};

// Π_x^y = Σ_l |Ψ_{xl⊕y, l}⟩⟨Ψ_{xl⊕y, l}|: a rank-d projector grouping d of
// the d² Bell projectors into one outcome.
struct PovmElement {
  int d, x, y;
  ComplexMatrix op; // d²×d²
};

// W_nm = Σ_j e^{-i2πjn/d} |j⊕m⟩⟨j| / √d. Scaled isometry: W†W = I/d.
struct WOperator {
  int d, n, m;
  ComplexMatrix op; // d×d
};

BellVector bell_state(int d, int n, int m);
ComplexMatrix bell_projector(const BellVector& v);

std::vector<PovmElement> povm_set(int d, int x);

WOperator w_operator(int d, int n, int m);

// The d factors W_{xl⊕y, l}, l = 0..d-1, of the measurement map for (x, y).
std::vector<ComplexMatrix> w_family(int d, int x, int y);

// Measurement map restricted to the single-qudit space:
// J*(ρ) = Σ_l W_{xl⊕y,l} ρ W_{xl⊕y,l}†. Trace-preserving, uniform diagonal.
ComplexMatrix measurement_map(int d, int x, int y, const ComplexMatrix& rho);

inline int mod_add(int a, int b, int d) { return ((a + b) % d + d) % d; }
inline int mod_sub(int a, int b, int d) { return ((a - b) % d + d) % d; }

} // namespace qct
