#include <cmath>

#include "cmvgd/jacobian.hpp"
#include "doctest.h"

using namespace cmvgd;

TEST_CASE("numeric oracle on the identity map is zero") {
  RngStream rng(501);
  RealVector at(6);
  for (int i = 0; i < 6; ++i) at[i] = rng.normal();
  auto identity = [](const RealVector& v) { return v; };
  CHECK(std::abs(numeric_log_jacobian(identity, at)) < 1e-9);
}

TEST_CASE("numeric oracle on a scalar square map") {
  RealVector at(1);
  at[0] = 3.0;
  auto square = [](const RealVector& v) {
    RealVector out(1);
    out[0] = v[0] * v[0];
    return out;
  };
  CHECK(numeric_log_jacobian(square, at) == doctest::Approx(std::log(6.0)).epsilon(1e-10));
}

TEST_CASE("numeric oracle rejects out-of-range steps and singular maps") {
  RealVector at = RealVector::Zero(2);
  auto identity = [](const RealVector& v) { return v; };
  CHECK_THROWS_AS(numeric_log_jacobian(identity, at, 1e-8), DomainError);
  CHECK_THROWS_AS(numeric_log_jacobian(identity, at, 1e-2), DomainError);

  auto collapse = [](const RealVector& v) {
    RealVector out(2);
    out[0] = v[0] + v[1];
    out[1] = v[0] + v[1];
    return out;
  };
  CHECK_THROWS_AS(numeric_log_jacobian(collapse, at), SingularJacobian);
}

TEST_CASE("numeric oracle is step-insensitive on linear maps") {
  // Linear congruence with |analytic| comfortably above one, so the
  // relative-error normalization |a - n| / max(1, |a|) applies.
  RngStream rng(502);
  const HpdMatrix x = random_test_hpd(2, rng);
  const Matrix a = 2.2 * random_complex_invertible(2, rng);
  for (double step : {1e-7, 1e-6, 1e-5, 1e-4}) {
    const JacobianCheck check = check_congruence_jacobian(a, x, 502, step);
    CHECK(check.relative_error < 1e-9);
  }
}

TEST_CASE("congruence Jacobian identity") {
  RngStream rng(503);
  const HpdMatrix x2 = random_test_hpd(2, rng);

  // A = I: analytic and numeric both vanish
  const JacobianCheck trivial = check_congruence_jacobian(Matrix::Identity(2, 2), x2, 503);
  CHECK(trivial.analytic == 0.0);
  CHECK(std::abs(trivial.numeric) < 1e-9);

  // p = 1, A = [2i]: analytic 2 log 2
  Matrix a1(1, 1);
  a1(0, 0) = Complex(0.0, 2.0);
  const JacobianCheck scalar = check_congruence_jacobian(a1, random_test_hpd(1, rng), 503);
  CHECK(scalar.analytic == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(scalar.relative_error < 1e-9);

  // random unitary A: |det A| = 1, numeric must stay tiny
  Matrix g = random_complex_invertible(2, rng);
  const Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ();
  const JacobianCheck unitary = check_congruence_jacobian(q, x2, 503);
  CHECK(unitary.analytic == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(unitary.numeric) < 1e-8);

  for (int trial = 0; trial < 10; ++trial) {
    const JacobianCheck check =
        check_congruence_jacobian(random_complex_invertible(2, rng), random_test_hpd(2, rng), 503);
    CHECK(check.relative_error < 1e-6);
  }
}

TEST_CASE("inversion Jacobian identity") {
  RngStream rng(504);
  const JacobianCheck at_identity =
      check_inversion_jacobian(HpdMatrix{Matrix::Identity(2, 2)}, 504);
  CHECK(at_identity.analytic == 0.0);
  CHECK(at_identity.relative_error < 1e-7);

  Matrix two(1, 1);
  two(0, 0) = 2.0;
  const JacobianCheck scalar = check_inversion_jacobian(HpdMatrix{two}, 504);
  CHECK(scalar.analytic == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(scalar.relative_error < 1e-7);

  for (int trial = 0; trial < 10; ++trial) {
    const JacobianCheck check = check_inversion_jacobian(random_test_hpd(3, rng), 504);
    CHECK(check.relative_error < 1e-5);
  }
}

TEST_CASE("factorization Jacobian identity") {
  Matrix t1(1, 1);
  t1(0, 0) = 1.0;
  const JacobianCheck scalar = check_cholesky_jacobian(LowerTriangularFactor(t1), 505);
  CHECK(scalar.analytic == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(scalar.relative_error < 1e-9);

  const JacobianCheck at_identity =
      check_cholesky_jacobian(LowerTriangularFactor(Matrix::Identity(2, 2)), 505);
  CHECK(at_identity.analytic == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(at_identity.relative_error < 1e-9);

  RngStream rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const LowerTriangularFactor t = cholesky_lower(random_test_hpd(3, rng));
    const JacobianCheck check = check_cholesky_jacobian(t, 505);
    CHECK(check.relative_error < 1e-5);
  }
}

TEST_CASE("tuple Jacobian check, scalar k = 1") {
  Matrix one(1, 1);
  one(0, 0) = 1.0;
  const HpdTuple xs({HpdMatrix{one}});
  const JacobianCheck check = check_tuple_jacobian(TupleTransform::Type1Y, xs, 506);
  CHECK(check.analytic == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(check.relative_error < 1e-8);
}

TEST_CASE("commuted congruence is the identity map at p = 1") {
  RngStream rng(507);
  for (int trial = 0; trial < 5; ++trial) {
    const HpdMatrix a = random_test_hpd(1, rng);
    const HpdMatrix y1 = random_test_hpd(1, rng);
    const JacobianCheck check = check_commuted_congruence_jacobian(a, y1, 507);
    CHECK(check.analytic == 0.0);
    CHECK(std::abs(check.numeric) < 1e-9);
  }
}

TEST_CASE("commuted congruence distorts volume pointwise in the matrix regime") {
  // The spectra of A^{1/2} X A^{1/2} and X^{1/2} A X^{1/2} coincide, and the
  // two parametrizations carry equal mass under eigenvalue integrands, but
  // the composite map between them is not pointwise volume-preserving for
  // p >= 2. Pin that fact on fixed instances.
  RngStream rng(508);
  for (int p : {2, 3}) {
    const HpdMatrix a = random_separated_hpd(p, 1e-3, rng);
    const HpdMatrix y1 = random_separated_hpd(p, 1e-3, rng);
    const JacobianCheck check = check_commuted_congruence_jacobian(a, y1, 508);
    CHECK(std::abs(check.numeric) > 1e-3);
  }
}

TEST_CASE("central-difference error shrinks quadratically in the step") {
  // Richardson sanity on a smooth nonlinear map: halving the step should
  // cut the truncation error by about four on a well-conditioned instance.
  RngStream rng(508);
  const HpdMatrix x = random_test_hpd(2, rng, 0.5);
  const JacobianCheck coarse = check_inversion_jacobian(x, 508, 1e-3);
  const JacobianCheck fine = check_inversion_jacobian(x, 508, 5e-4);
  const double err_coarse = std::abs(coarse.numeric - coarse.analytic);
  const double err_fine = std::abs(fine.numeric - fine.analytic);
  const double ratio = err_coarse / err_fine;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}
