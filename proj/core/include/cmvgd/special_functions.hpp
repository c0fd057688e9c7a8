#pragma once

#include <vector>

#include "cmvgd/errors.hpp"

namespace cmvgd {

/// Parameters of the generalized type-2 Dirichlet model over k hermitian
/// positive definite p x p matrices: alpha_1..alpha_{k+1} and beta_1..beta_k.
///
/// Validity requires, for every j = 1..k,
///   alpha_j > p - 1   and   tail(j) > p - 1,
/// where tail(j) = alpha_{j+1} + ... + alpha_{k+1} + beta_j + ... + beta_k is
/// the composite second parameter of the j-th transformed component.
/// alpha_{k+1} enters only through the sums and carries no bound of its own.
struct GenDirichletParams {
  int p = 0;
  int k = 0;
  std::vector<double> alpha;  // size k+1
  std::vector<double> beta;   // size k

  GenDirichletParams(int p_, std::vector<double> alpha_, std::vector<double> beta_);

  /// tail(j) for j in 1..k (1-based, matching the parameter subscripts).
  double tail(int j) const;

  double alpha_sum() const;
  double beta_sum() const;

  /// Throws DomainError naming the first violated invariant.
  void validate() const;
};

/// Logarithm of the complex multivariate gamma:
///   log Gamma_p(a) = (p(p-1)/2) log pi + sum_{j=0}^{p-1} lgamma(a - j).
/// Requires a > p - 1 (the defining integral diverges otherwise).
double log_multigamma_c(int p, double a);

/// Logarithm of the complex multivariate beta:
///   log B_p(a, b) = log Gamma_p(a) + log Gamma_p(b) - log Gamma_p(a + b).
/// Requires a > p - 1 and b > p - 1.
double log_multibeta_c(int p, double a, double b);

/// Log normalizing constant of the generalized type-2 Dirichlet density:
///   log c_k = -sum_{j=1}^{k} log B_p(alpha_j, tail(j)).
double log_ck(const GenDirichletParams& params);

/// log E|det Y|^h for Y type-1 beta(a, b):  log B_p(a+h, b) - log B_p(a, b).
/// Requires a, b > p - 1 and a + h > p - 1.
double log_moment_type1(int p, double a, double b, double h);

/// log E|det U|^h for U type-2 beta(a, b):  log B_p(a+h, b-h) - log B_p(a, b).
/// Requires a + h > p - 1 and b - h > p - 1.
double log_moment_type2(int p, double a, double b, double h);

/// log E|det X_j|^h under the generalized type-2 Dirichlet model, via the
/// normalizing-constant ratio obtained by shifting alpha_j by +h and
/// alpha_{k+1} by -h (which leaves every other exponent unchanged):
///   log c_k(params) - log c_k(shifted).
/// j is 1-based. Requires the shifted parameters to be valid.
double log_moment_gen_dirichlet(const GenDirichletParams& params, int j, double h);

}  // namespace cmvgd
