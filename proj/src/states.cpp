#include "qct/states.hpp"

#include <cmath>
#include <numbers>

namespace qct {

namespace {

constexpr double pi = std::numbers::pi;

void require_dim(int d) {
  if (d < 2) throw DimensionError("dimension must be >= 2");
}

// The reference matrix must be a real nonnegative density matrix.
void validate_magnitudes(const ComplexMatrix& m) {
  if (!m.square()) throw InvalidStateError("magnitudes: matrix not square");
  for (const auto& v : m.data())
    if (std::abs(v.imag()) > 1e-12 || v.real() < -1e-12)
      throw InvalidStateError("magnitudes: entries must be real and nonnegative");
  auto result = check_density(m);
  if (!result.ok())
    throw InvalidStateError("magnitudes: " + result.violation->describe());
}

ComplexMatrix phased_matrix(const ComplexMatrix& magnitudes, int x, double delta_phi) {
  const int d = magnitudes.rows();
  const auto phi = engineered_phases(d, x);
  ComplexMatrix out(d, d);
  for (int j = 0; j < d; ++j) {
    out(j, j) = magnitudes(j, j).real();
    for (int k = j + 1; k < d; ++k) {
      const double mag = magnitudes(j, k).real();
      const double arg = phi[j] - phi[k] + delta_phi;
      out(j, k) = std::polar(mag, arg);
      out(k, j) = std::conj(out(j, k));
    }
  }
  return out;
}

} // namespace

EntangledPair max_entangled(int d) {
  require_dim(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix rho(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int kp = 0; kp < d; ++kp) rho(k * d + k, kp * d + kp) = amp * amp;
  return {d, DensityMatrix::checked(std::move(rho))};
}

std::vector<double> engineered_phases(int d, int x) {
  require_dim(d);
  if (x < 0 || x >= d) throw DimensionError("engineered_phases: x out of range");
  std::vector<double> phi(d);
  for (int j = 0; j < d; ++j)
    phi[j] = pi * static_cast<double>(x) * j * (d - j) / d;
  return phi;
}

ComplexMatrix phase_gate(int d, double phi, int j) {
  if (j < 0 || j >= d) throw DimensionError("phase_gate: level out of range");
  ComplexMatrix u = ComplexMatrix::identity(d);
  u(j, j) += std::polar(1.0, phi) - 1.0;
  return u;
}

TargetState engineer_phases(const ComplexMatrix& magnitudes, int x) {
  validate_magnitudes(magnitudes);
  const int d = magnitudes.rows();
  const auto phi = engineered_phases(d, x);

  ComplexMatrix u = ComplexMatrix::identity(d);
  for (int j = 0; j < d; ++j) u = u * phase_gate(d, phi[j], j);
  ComplexMatrix rho = u * magnitudes * adjoint(u);

  return {d, DensityMatrix::checked(std::move(rho)), phi};
}

TargetState perturbed_state(const ComplexMatrix& magnitudes, const DeviationConfig& dev) {
  validate_magnitudes(magnitudes);
  ComplexMatrix rho = phased_matrix(magnitudes, dev.basis_x, dev.delta_phi);
  const double min_eig = min_hermitian_eigenvalue(rho);
  if (min_eig < -density_tol)
    throw RejectedSampleError("perturbed state fails positivity by " +
                              std::to_string(-min_eig));
  return {magnitudes.rows(), DensityMatrix::unchecked(std::move(rho)), std::nullopt};
}

TargetState perturbed_state_unchecked(const ComplexMatrix& magnitudes, const DeviationConfig& dev,
                                      double* min_eigenvalue) {
  if (!magnitudes.square()) throw InvalidStateError("magnitudes: matrix not square");
  ComplexMatrix rho = phased_matrix(magnitudes, dev.basis_x, dev.delta_phi);
  if (min_eigenvalue) *min_eigenvalue = min_hermitian_eigenvalue(rho);
  return {magnitudes.rows(), DensityMatrix::unchecked(std::move(rho)), std::nullopt};
}

NoisySinglet noisy_singlet(int d, double r) {
  require_dim(d);
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("noisy_singlet: r must be in [0,1]");
  ComplexMatrix rho = max_entangled(d).rho_ab.matrix();
  rho *= r;
  const double background = (1.0 - r) / (d * d);
  for (int i = 0; i < d * d; ++i) rho(i, i) += background;
  const bool separable = r <= 1.0 / (d + 1);
  return {d, r, DensityMatrix::checked(std::move(rho)), separable};
}

TargetState sample_haar_pure(int d, RngStream& rng) {
  require_dim(d);
  std::vector<Cx> z(d);
  double norm_sq = 0.0;
  for (int i = 0; i < d; ++i) {
    z[i] = rng.complex_gaussian();
    norm_sq += std::norm(z[i]);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  ComplexMatrix rho(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rho(i, j) = z[i] * std::conj(z[j]) * (inv * inv);
  return {d, DensityMatrix::checked(std::move(rho)), std::nullopt};
}

TargetState sample_hs_mixed(int d, RngStream& rng) {
  require_dim(d);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix w = g * adjoint(g);
  const double tr = trace(w).real();
  w *= 1.0 / tr;
  return {d, DensityMatrix::checked(std::move(w)), std::nullopt};
}

ComplexMatrix magnitudes_of(const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = 0; j < rho.cols(); ++j) out(i, j) = std::abs(rho(i, j));
  return out;
}

TargetState max_coherent(int d, int x) {
  require_dim(d);
  ComplexMatrix m(d, d);
  for (auto& v : m.data()) v = 1.0 / d;
  return engineer_phases(m, x);
}

} // namespace qct
