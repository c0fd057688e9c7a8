#include <cmath>
#include <numbers>

#include "cmvgd/special_functions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmvgd;

TEST_CASE("log_multigamma_c reduces to lgamma at p = 1") {
  for (double a : {1.5, 2.0, 5.0, 10.0}) {
    CHECK(std::abs(log_multigamma_c(1, a) - std::lgamma(a)) < 1e-13);
  }
  CHECK(log_multigamma_c(1, 5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("log_multigamma_c matches the explicit product") {
  const double expected = std::log(std::numbers::pi) + std::lgamma(2.5) + std::lgamma(1.5);
  CHECK(log_multigamma_c(2, 2.5) == doctest::Approx(expected).epsilon(1e-15));
  // frozen reference values (25-digit arithmetic)
  CHECK(log_multigamma_c(2, 2.5) == doctest::Approx(1.308630518687074111430404).epsilon(1e-14));
  CHECK(log_multigamma_c(3, 4.2) == doctest::Approx(6.465097588454338053896865).epsilon(1e-14));
}

TEST_CASE("log_multigamma_c domain") {
  CHECK_THROWS_AS(log_multigamma_c(2, 1.0), DomainError);
  CHECK_THROWS_AS(log_multigamma_c(3, 1.99), DomainError);
  CHECK_THROWS_AS(log_multigamma_c(0, 1.0), DomainError);
}

TEST_CASE("log_multigamma_c dimension recurrence") {
  const double log_pi = std::log(std::numbers::pi);
  for (int p : {2, 3, 4}) {
    for (double a : {double(p), p + 0.7, p + 3.3}) {
      const double lhs = log_multigamma_c(p, a) - log_multigamma_c(p - 1, a);
      const double rhs = (p - 1) * log_pi + std::lgamma(a - p + 1);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("log_multibeta_c scalar cases and frozen value") {
  CHECK(log_multibeta_c(1, 2.0, 3.0) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-14));
  CHECK(log_multibeta_c(1, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_multibeta_c(2, 3.0, 4.0) ==
        doctest::Approx(-7.04395923859480119551751).epsilon(1e-14));
}

TEST_CASE("log_multibeta_c decreases in a for fixed b") {
  for (int p : {1, 2, 3}) {
    double prev = log_multibeta_c(p, p - 1 + 0.5, 4.0);
    for (double a = p - 1 + 1.0; a < p + 6.0; a += 0.5) {
      const double cur = log_multibeta_c(p, a, 4.0);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("GenDirichletParams validation") {
  CHECK_NOTHROW(GenDirichletParams(2, {3.0, 3.0, 3.0}, {1.0, 1.0}));
  CHECK_THROWS_WITH_AS(GenDirichletParams(2, {1.0, 3.0, 3.0}, {1.0, 1.0}),
                       doctest::Contains("alpha[1] must exceed p-1"), DomainError);
  CHECK_THROWS_AS(GenDirichletParams(2, {3.0, 3.0}, {1.0, 1.0}), DomainError);
  // tail violation: alpha_{k+1} and betas too small to carry tail_k above p-1
  CHECK_THROWS_AS(GenDirichletParams(2, {3.0, 3.0, 0.5}, {0.0, 0.0}), DomainError);
  // alpha_{k+1} on its own carries no bound
  CHECK_NOTHROW(GenDirichletParams(2, {3.0, 3.0, 0.5}, {1.0, 1.0}));
}

TEST_CASE("tail sums") {
  const GenDirichletParams params(1, {2.0, 2.0, 4.0}, {1.0, 1.0});
  CHECK(params.tail(1) == doctest::Approx(8.0));
  CHECK(params.tail(2) == doctest::Approx(5.0));
}

TEST_CASE("log_ck with one factor is a beta constant") {
  const GenDirichletParams params(2, {3.0, 2.5}, {1.5});
  CHECK(log_ck(params) == doctest::Approx(-log_multibeta_c(2, 3.0, 4.0)).epsilon(1e-15));
}

TEST_CASE("normalizing constant for p=1, k=1 against the quadrature oracle") {
  // alpha = (2, 3), beta = (1): the joint density is x (1+x)^{-6} / c^{-1}.
  const GenDirichletParams params(1, {2.0, 3.0}, {1.0});
  const double integral = testoracle::integrate_halfline(
      [](double x) { return x * std::pow(1.0 + x, -6.0); }, 1e-12);
  CHECK(integral == doctest::Approx(1.0 / 20.0).epsilon(1e-8));
  CHECK(std::exp(log_ck(params)) == doctest::Approx(20.0).epsilon(1e-10));
  CHECK(std::exp(log_ck(params)) == doctest::Approx(1.0 / integral).epsilon(1e-8));
}

TEST_CASE("log_ck with zero betas telescopes to the classical constant") {
  for (int p : {1, 2, 3}) {
    const std::vector<double> alpha = {p + 1.0, p + 0.5, p + 2.0, p + 0.25};
    const int k = 3;
    const GenDirichletParams params(p, alpha, std::vector<double>(k, 0.0));

    // independent term-by-term product of the defining factors
    double direct = 0.0;
    for (int j = 1; j <= k; ++j) {
      double tail = 0.0;
      for (int i = j; i <= k; ++i) tail += alpha[i];
      direct -= log_multigamma_c(p, alpha[j - 1]) + log_multigamma_c(p, tail) -
                log_multigamma_c(p, alpha[j - 1] + tail);
    }
    CHECK(std::abs(log_ck(params) - direct) < 1e-12);

    // classical inverted-Dirichlet constant
    double total = 0.0;
    for (double a : alpha) total += a;
    double classical = log_multigamma_c(p, total);
    for (double a : alpha) classical -= log_multigamma_c(p, a);
    CHECK(std::abs(log_ck(params) - classical) < 1e-12);
  }
}

TEST_CASE("log_moment_type1") {
  CHECK(log_moment_type1(2, 3.0, 4.0, 0.0) == 0.0);
  CHECK(log_moment_type1(1, 2.0, 2.0, 1.0) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(log_moment_type1(2, 3.0, 4.0, -2.5), DomainError);
}

TEST_CASE("log_moment_type2") {
  CHECK(log_moment_type2(2, 3.0, 5.0, 0.0) == 0.0);
  CHECK(log_moment_type2(1, 2.0, 3.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(log_moment_type2(1, 2.0, 3.0, 3.0), DomainError);  // b - h hits the bound
}

TEST_CASE("log_moment_gen_dirichlet reductions and quadrature oracle") {
  const GenDirichletParams params(1, {2.0, 2.0, 4.0}, {1.0, 1.0});
  CHECK(log_moment_gen_dirichlet(params, 1, 0.0) == doctest::Approx(0.0).epsilon(1e-13));

  // k = 1 reduces to the type-2 beta moment
  const GenDirichletParams single(2, {3.0, 2.5}, {1.5});
  CHECK(log_moment_gen_dirichlet(single, 1, 1.0) ==
        doctest::Approx(log_moment_type2(2, 3.0, 4.0, 1.0)).epsilon(1e-13));

  // 2-D quadrature oracle for E[x_1] at p=1, k=2, alpha=(2,2,4), beta=(1,1):
  // f = c_2 x1 x2 (1+x2) (1+x1+x2)^{-10}
  const double logc = log_ck(params);
  auto dens = [&](double x1, double x2) {
    return std::exp(logc) * x1 * x2 * (1.0 + x2) * std::pow(1.0 + x1 + x2, -10.0);
  };
  const double ex1 =
      testoracle::integrate_halfplane2([&](double x1, double x2) { return x1 * dens(x1, x2); });
  CHECK(ex1 == doctest::Approx(3.0 / 7.0).epsilon(1e-6));
  CHECK(std::exp(log_moment_gen_dirichlet(params, 1, 1.0)) ==
        doctest::Approx(ex1).epsilon(1e-6));
  CHECK(std::exp(log_moment_gen_dirichlet(params, 1, 1.0)) ==
        doctest::Approx(3.0 / 7.0).epsilon(1e-12));

  // h = 4 drives alpha_{k+1} to zero, which carries no bound of its own and
  // stays admissible; h = 5 finally breaks the tail_2 invariant.
  CHECK_NOTHROW(log_moment_gen_dirichlet(params, 1, 4.0));
  CHECK_THROWS_AS(log_moment_gen_dirichlet(params, 1, 5.0), DomainError);
  CHECK_THROWS_AS(log_moment_gen_dirichlet(params, 3, 1.0), DomainError);
}
