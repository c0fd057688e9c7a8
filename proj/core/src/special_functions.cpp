#include "cmvgd/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace cmvgd {

GenDirichletParams::GenDirichletParams(int p_, std::vector<double> alpha_,
                                       std::vector<double> beta_)
    : p(p_), k(static_cast<int>(beta_.size())), alpha(std::move(alpha_)), beta(std::move(beta_)) {
  validate();
}

double GenDirichletParams::tail(int j) const {
  double s = 0.0;
  for (int i = j; i <= k; ++i) s += alpha[i];  // alpha_{j+1}..alpha_{k+1}, 0-based i = j..k
  for (int i = j - 1; i < k; ++i) s += beta[i];
  return s;
}

double GenDirichletParams::alpha_sum() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

double GenDirichletParams::beta_sum() const {
  return std::accumulate(beta.begin(), beta.end(), 0.0);
}

void GenDirichletParams::validate() const {
  if (p < 1) throw DomainError("p must be a positive integer");
  if (k < 1) throw DomainError("k must be a positive integer (beta must be nonempty)");
  if (alpha.size() != static_cast<size_t>(k) + 1) {
    throw DomainError("alpha must have k+1 = " + std::to_string(k + 1) + " entries, got " +
                      std::to_string(alpha.size()));
  }
  const double bound = static_cast<double>(p) - 1.0;
  for (int j = 1; j <= k; ++j) {
    if (!(alpha[j - 1] > bound)) {
      throw DomainError("alpha[" + std::to_string(j) + "] must exceed p-1 (got " +
                        std::to_string(alpha[j - 1]) + ", p-1 = " + std::to_string(bound) + ")");
    }
    if (!(tail(j) > bound)) {
      throw DomainError("tail sum alpha[" + std::to_string(j + 1) + "..k+1] + beta[" +
                        std::to_string(j) + "..k] must exceed p-1 (got " +
                        std::to_string(tail(j)) + ", p-1 = " + std::to_string(bound) + ")");
    }
  }
}

double log_multigamma_c(int p, double a) {
  if (p < 1) throw DomainError("log_multigamma_c: p must be a positive integer");
  if (!(a > p - 1.0)) {
    throw DomainError("log_multigamma_c: argument must exceed p-1 (got " + std::to_string(a) +
                      ", p = " + std::to_string(p) + ")");
  }
  double r = 0.5 * p * (p - 1) * std::log(std::numbers::pi);
  for (int j = 0; j < p; ++j) r += std::lgamma(a - j);
  return r;
}

double log_multibeta_c(int p, double a, double b) {
  return log_multigamma_c(p, a) + log_multigamma_c(p, b) - log_multigamma_c(p, a + b);
}

double log_ck(const GenDirichletParams& params) {
  params.validate();
  double s = 0.0;
  for (int j = 1; j <= params.k; ++j) {
    s += log_multibeta_c(params.p, params.alpha[j - 1], params.tail(j));
  }
  return -s;
}

double log_moment_type1(int p, double a, double b, double h) {
  if (!(a + h > p - 1.0)) {
    throw DomainError("log_moment_type1: shifted parameter a+h must exceed p-1");
  }
  return log_multibeta_c(p, a + h, b) - log_multibeta_c(p, a, b);
}

double log_moment_type2(int p, double a, double b, double h) {
  if (!(a + h > p - 1.0) || !(b - h > p - 1.0)) {
    throw DomainError("log_moment_type2: shifted parameters (a+h, b-h) must both exceed p-1");
  }
  return log_multibeta_c(p, a + h, b - h) - log_multibeta_c(p, a, b);
}

double log_moment_gen_dirichlet(const GenDirichletParams& params, int j, double h) {
  if (j < 1 || j > params.k) {
    throw DomainError("log_moment_gen_dirichlet: component index must lie in 1..k");
  }
  std::vector<double> shifted_alpha = params.alpha;
  shifted_alpha[j - 1] += h;
  shifted_alpha[params.k] -= h;
  GenDirichletParams shifted(params.p, std::move(shifted_alpha), params.beta);
  return log_ck(params) - log_ck(shifted);
}

}  // namespace cmvgd
