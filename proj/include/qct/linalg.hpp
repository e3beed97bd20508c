#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qct {

using Cx = std::complex<double>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense complex matrix, row-major. The universal carrier for operators and
// density matrices of every subsystem size in the library.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw DimensionError("ComplexMatrix: dimensions must be >= 1");
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Cx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Cx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<Cx> data() { return a_; }
  std::span<const Cx> data() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Cx s);
  ComplexMatrix& operator*=(double s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Cx s) { return a *= s; }
  friend ComplexMatrix operator*(Cx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cx> a_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
Cx trace(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& m);

// Kronecker product; `a` indexes the slow (leftmost) subsystem:
// out[(i*rb + k), (j*cb + l)] = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduce an operator on a tensor-product space to the subsystems listed in
// `keep` (indices into `dims`, ascending output order). Trace-preserving.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

// Eigenvalues of the Hermitized matrix (m + m†)/2, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
double min_hermitian_eigenvalue(const ComplexMatrix& m);

inline constexpr double density_tol = 1e-10;

// d×d Hermitian, unit-trace, positive-semidefinite matrix. `checked`
// enforces all three invariants (tolerance on entries; states are trace-one
// so absolute == relative here). `unchecked` is the explicit escape hatch
// for diagnostic paths that feed non-physical matrices through the linear
// maps (e.g. phase-perturbed states sitting just below the positivity
// boundary).
class DensityMatrix {
public:
  static DensityMatrix checked(ComplexMatrix m, double tol = density_tol);
  static DensityMatrix unchecked(ComplexMatrix m);

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct DensityViolation {
  enum class Kind { NotSquare, NonFinite, Hermiticity, Trace, Positivity };
  Kind kind;
  double deviation; // how far past the tolerance the failing invariant is
  std::string describe() const;
};

struct DensityCheckResult {
  std::optional<DensityMatrix> state;
  std::optional<DensityViolation> violation;
  bool ok() const { return state.has_value(); }
};

DensityCheckResult check_density(const ComplexMatrix& m, double tol = density_tol);

} // namespace qct
