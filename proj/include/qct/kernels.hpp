#pragma once

#include "qct/linalg.hpp"

namespace qct::kernels {

// Each kernel comes in a serial reference form and an OpenMP form. The
// unsuffixed entry points in linalg.hpp/channels.hpp dispatch between them
// based on qct::parallel settings and problem size; tests pin the two
// variants against each other.

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_parallel(const ComplexMatrix& a, const ComplexMatrix& b);

// op * rho * op†
ComplexMatrix conjugate_by(const ComplexMatrix& op, const ComplexMatrix& rho);

// Σ_k ops[k] rho ops[k]†. The parallel form accumulates per-thread partials
// and reduces them in thread-index order; summation-order effects stay below
// 1e-12 for the operator families used here.
ComplexMatrix kraus_apply_serial(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho);
ComplexMatrix kraus_apply_parallel(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho);
ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho);

} // namespace qct::kernels
