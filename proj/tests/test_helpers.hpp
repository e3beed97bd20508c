#pragma once

#include "qct/linalg.hpp"
#include "qct/rng.hpp"

#include <cmath>

namespace qct::testing {

inline ComplexMatrix random_matrix(int rows, int cols, RngStream& rng) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

inline ComplexMatrix random_hermitian(int n, RngStream& rng) {
  ComplexMatrix g = random_matrix(n, n, rng);
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

inline ComplexMatrix random_density(int n, RngStream& rng) {
  ComplexMatrix g = random_matrix(n, n, rng);
  ComplexMatrix w = g * adjoint(g);
  w *= 1.0 / trace(w).real();
  return w;
}

} // namespace qct::testing
