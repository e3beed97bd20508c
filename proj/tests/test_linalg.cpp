#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qct/kernels.hpp"
#include "qct/linalg.hpp"
#include "qct/parallel.hpp"

#include "test_helpers.hpp"

using namespace qct;
using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST_CASE("tensor of identities is the identity") {
  const auto out = tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
  CHECK(max_abs_diff(out, ComplexMatrix::identity(6)) == 0.0);
}

TEST_CASE("tensor of basis projectors lands on the combined basis index") {
  ComplexMatrix p0(2, 2), p1(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const auto out = tensor(p0, p1);
  ComplexMatrix expected(4, 4);
  expected(1, 1) = 1.0; // |0⟩⊗|1⟩ is combined index 1 of 4
  CHECK(max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("tensor entries follow the index formula") {
  RngStream rng(11);
  const auto a = random_matrix(2, 2, rng);
  const auto b = random_matrix(2, 2, rng);
  const auto out = tensor(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(std::abs(out(i * 2 + k, j * 2 + l) - a(i, j) * b(k, l)) == 0.0);
}

TEST_CASE("tensor is associative") {
  RngStream rng(12);
  const auto a = random_matrix(2, 3, rng);
  const auto b = random_matrix(3, 2, rng);
  const auto c = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-15);
}

TEST_CASE("partial trace of a product state factorizes") {
  RngStream rng(13);
  const auto rho = random_density(3, rng);
  const auto sigma = random_density(3, rng);
  const auto joint = tensor(rho, sigma);
  const int dims[] = {3, 3};
  const int keep_b[] = {1};
  const auto reduced = partial_trace(joint, dims, keep_b);
  CHECK(max_abs_diff(reduced, sigma) < 1e-14); // Tr(rho) = 1

  const int keep_a[] = {0};
  CHECK(max_abs_diff(partial_trace(joint, dims, keep_a), rho) < 1e-14);
}

TEST_CASE("partial trace of the maximally entangled projector is maximally mixed") {
  // Independent construction: entry sums over the first subsystem index.
  const int d = 3;
  ComplexMatrix phi(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int kp = 0; kp < d; ++kp) phi(k * d + k, kp * d + kp) = 1.0 / d;

  ComplexMatrix direct(d, d);
  for (int b = 0; b < d; ++b)
    for (int bp = 0; bp < d; ++bp) {
      Cx sum = 0.0;
      for (int a = 0; a < d; ++a) sum += phi(a * d + b, a * d + bp);
      direct(b, bp) = sum;
    }

  const int dims[] = {d, d};
  const int keep[] = {1};
  const auto reduced = partial_trace(phi, dims, keep);
  CHECK(max_abs_diff(reduced, direct) == 0.0);

  auto third = ComplexMatrix::identity(d);
  third *= 1.0 / d;
  CHECK(max_abs_diff(reduced, third) < 1e-15);
}

TEST_CASE("partial trace preserves the trace and reduces to the scalar trace") {
  RngStream rng(14);
  const auto m = random_hermitian(12, rng);
  const int dims[] = {2, 3, 2};
  const int keep[] = {0, 2};
  const auto reduced = partial_trace(m, dims, keep);
  CHECK(std::abs(trace(reduced) - trace(m)) < 1e-12);

  const int keep_all[] = {0, 1, 2};
  CHECK(max_abs_diff(partial_trace(m, dims, keep_all), m) == 0.0);
}

TEST_CASE("partial trace rejects inconsistent dimensions") {
  const auto m = ComplexMatrix::identity(6);
  const int bad_dims[] = {2, 2};
  const int keep[] = {0};
  CHECK_THROWS_AS(partial_trace(m, bad_dims, keep), DimensionError);
  const int dims[] = {2, 3};
  const int bad_keep[] = {2};
  CHECK_THROWS_AS(partial_trace(m, dims, bad_keep), DimensionError);
}

TEST_CASE("check_density accepts the maximally mixed state") {
  auto m = ComplexMatrix::identity(3);
  m *= 1.0 / 3.0;
  CHECK(check_density(m).ok());
}

TEST_CASE("check_density reports the trace violation") {
  auto m = ComplexMatrix::identity(3);
  m *= 0.5;
  const auto result = check_density(m);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation->kind == DensityViolation::Kind::Trace);
  CHECK(result.violation->deviation == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("check_density reports a constructed negative eigenvalue") {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = -1e-9;
  m(2, 2) = 0.0;
  m(3, 3) = 1e-9;
  const auto result = check_density(m, 1e-10);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation->kind == DensityViolation::Kind::Positivity);
  CHECK(result.violation->deviation == doctest::Approx(1e-9).epsilon(1e-3));
}

TEST_CASE("check_density reports hermiticity violations") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m *= 0.5;
  m(0, 1) = 0.1;
  m(1, 0) = 0.2;
  const auto result = check_density(m);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation->kind == DensityViolation::Kind::Hermiticity);
}

TEST_CASE("DensityMatrix::checked throws with the violation description") {
  auto m = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(DensityMatrix::checked(m), InvalidStateError);
}

TEST_CASE("hermitian eigenvalues match hand-computed values") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  const auto evs = hermitian_eigenvalues(m);
  CHECK(evs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues satisfy trace identities") {
  RngStream rng(15);
  const auto m = random_hermitian(7, rng);
  const auto evs = hermitian_eigenvalues(m);
  double sum = 0.0, sum_sq = 0.0;
  for (double e : evs) {
    sum += e;
    sum_sq += e * e;
  }
  CHECK(sum == doctest::Approx(trace(m).real()).epsilon(1e-10));
  CHECK(sum_sq == doctest::Approx(trace(m * m).real()).epsilon(1e-10));
}

TEST_CASE("serial and parallel kernels agree") {
  RngStream rng(16);
  const auto a = random_matrix(17, 23, rng);
  const auto b = random_matrix(23, 19, rng);
  CHECK(max_abs_diff(kernels::matmul_serial(a, b), kernels::matmul_parallel(a, b)) < 1e-12);

  const auto c = random_matrix(5, 4, rng);
  const auto d = random_matrix(6, 7, rng);
  CHECK(max_abs_diff(kernels::kron_serial(c, d), kernels::kron_parallel(c, d)) == 0.0);

  std::vector<ComplexMatrix> ops;
  for (int k = 0; k < 9; ++k) ops.push_back(random_matrix(6, 6, rng));
  const auto rho = random_hermitian(6, rng);
  CHECK(max_abs_diff(kernels::kraus_apply_serial(ops, rho),
                     kernels::kraus_apply_parallel(ops, rho)) < 1e-12);
}

TEST_CASE("parallel toggles do not change results") {
  RngStream rng(17);
  const auto a = random_matrix(40, 40, rng);
  const auto b = random_matrix(40, 40, rng);
  parallel::set_enabled(false);
  const auto serial = matmul(a, b);
  parallel::set_enabled(true);
  const auto par = matmul(a, b);
  CHECK(max_abs_diff(serial, par) < 1e-12);
}

TEST_CASE("matmul validates inner dimensions") {
  const auto a = ComplexMatrix::identity(2);
  const auto b = ComplexMatrix(3, 2);
  CHECK_THROWS_AS(matmul(a, b), DimensionError);
}
