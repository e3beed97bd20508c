#include "qct/kernels.hpp"

#include "qct/parallel.hpp"

#ifdef QCT_HAVE_OPENMP
#include <omp.h>
#endif

namespace qct::kernels {

namespace {

void check_mul_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
}

// Row block of c = a*b, ikj order so the inner loop streams b and c rows.
void matmul_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c,
                 int row_begin, int row_end) {
  const int n = a.cols();
  const int cols = b.cols();
  const Cx* bp = b.data().data();
  Cx* cp = c.data().data();
  const Cx* ap = a.data().data();
  for (int i = row_begin; i < row_end; ++i) {
    Cx* crow = cp + static_cast<std::size_t>(i) * cols;
    const Cx* arow = ap + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      const Cx aik = arow[k];
      if (aik == Cx{}) continue;
      const Cx* brow = bp + static_cast<std::size_t>(k) * cols;
      for (int j = 0; j < cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

} // namespace

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_mul_dims(a, b);
  ComplexMatrix c(a.rows(), b.cols());
  matmul_rows(a, b, c, 0, a.rows());
  return c;
}

ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_mul_dims(a, b);
  ComplexMatrix c(a.rows(), b.cols());
  const int rows = a.rows();
#ifdef QCT_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(qct::parallel::max_threads())
#endif
  for (int i = 0; i < rows; ++i) matmul_rows(a, b, c, i, i + 1);
  return c;
}

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ca; ++j) {
      const Cx aij = a(i, j);
      for (int k = 0; k < rb; ++k)
        for (int l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix kron_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
#ifdef QCT_HAVE_OPENMP
#pragma omp parallel for collapse(2) schedule(static) num_threads(qct::parallel::max_threads())
#endif
  for (int i = 0; i < ra; ++i)
    for (int k = 0; k < rb; ++k) {
      for (int j = 0; j < ca; ++j) {
        const Cx aij = a(i, j);
        for (int l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
      }
    }
  return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& op, const ComplexMatrix& rho) {
  return matmul_serial(matmul_serial(op, rho), adjoint(op));
}

ComplexMatrix kraus_apply_serial(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho) {
  if (ops.empty()) throw DimensionError("kraus_apply: empty operator list");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& e : ops) out += conjugate_by(e, rho);
  return out;
}

ComplexMatrix kraus_apply_parallel(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho) {
  if (ops.empty()) throw DimensionError("kraus_apply: empty operator list");
#ifndef QCT_HAVE_OPENMP
  return kraus_apply_serial(ops, rho);
#else
  const int nthreads = qct::parallel::max_threads();
  std::vector<ComplexMatrix> partial(nthreads, ComplexMatrix(rho.rows(), rho.cols()));
  const long nops = static_cast<long>(ops.size());
#pragma omp parallel num_threads(nthreads)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
    for (long k = 0; k < nops; ++k) partial[tid] += conjugate_by(ops[k], rho);
  }
  ComplexMatrix out = std::move(partial[0]);
  for (int t = 1; t < nthreads; ++t) out += partial[t];
  return out;
#endif
}

ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops, const ComplexMatrix& rho) {
  const long work = static_cast<long>(ops.size()) * rho.rows() * rho.rows() * rho.cols() * 2;
  if (qct::parallel::enabled() && work >= qct::parallel::grain && ops.size() > 1)
    return kraus_apply_parallel(ops, rho);
  return kraus_apply_serial(ops, rho);
}

} // namespace qct::kernels
