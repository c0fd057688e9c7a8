#include "cmvgd/densities.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cmvgd {

HpdTuple::HpdTuple(std::vector<HpdMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw DimensionMismatch("HpdTuple: tuple must be nonempty");
  const int p = mats_.front().dim();
  for (const auto& m : mats_) {
    if (m.dim() != p) {
      throw DimensionMismatch("HpdTuple: all members must share one dimension (got " +
                              std::to_string(m.dim()) + " vs " + std::to_string(p) + ")");
    }
  }
}

double logpdf_matrix_gamma(const HpdMatrix& x, double a) {
  const int p = x.dim();
  const double lmg = log_multigamma_c(p, a);  // validates a > p-1
  return (a - p) * x.log_abs_det() - x.trace() - lmg;
}

double logpdf_type1_beta(const HpdMatrix& x, double a, double b) {
  const int p = x.dim();
  const double lmb = log_multibeta_c(p, a, b);
  const Matrix complement = Matrix::Identity(p, p) - x.matrix();
  double log_det_complement = 0.0;
  try {
    HpdMatrix c{HermitianMatrix(complement)};
    log_det_complement = c.log_abs_det();
  } catch (const NotPositiveDefinite&) {
    throw SupportError("logpdf_type1_beta: I - X is not positive definite "
                       "(eigenvalues of X must lie in (0,1))");
  }
  return (a - p) * x.log_abs_det() + (b - p) * log_det_complement - lmb;
}

double logpdf_type2_beta(const HpdMatrix& x, double a, double b) {
  const int p = x.dim();
  const double lmb = log_multibeta_c(p, a, b);
  HpdMatrix shifted(HermitianMatrix(Matrix::Identity(p, p) + x.matrix()));
  return (a - p) * x.log_abs_det() - (a + b) * shifted.log_abs_det() - lmb;
}

std::vector<HpdMatrix> partial_sums(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  std::vector<HpdMatrix> sums;
  sums.reserve(k);
  Matrix acc = Matrix::Identity(p, p);
  for (int j = k - 1; j >= 0; --j) {
    acc += xs[j].matrix();
    sums.emplace_back(HermitianMatrix(acc));
  }
  std::reverse(sums.begin(), sums.end());
  return sums;
}

double logpdf_gen_dirichlet(const HpdTuple& xs, const GenDirichletParams& params) {
  params.validate();
  if (xs.k() != params.k) {
    throw DimensionMismatch("logpdf_gen_dirichlet: tuple has k = " + std::to_string(xs.k()) +
                            " but params have k = " + std::to_string(params.k));
  }
  if (xs.dim() != params.p) {
    throw DimensionMismatch("logpdf_gen_dirichlet: tuple dimension " + std::to_string(xs.dim()) +
                            " does not match params p = " + std::to_string(params.p));
  }
  const int k = params.k;
  const int p = params.p;
  const std::vector<HpdMatrix> sums = partial_sums(xs);  // sums[j-1] = S_j

  double r = log_ck(params);
  for (int j = 0; j < k; ++j) r += (params.alpha[j] - p) * xs[j].log_abs_det();
  for (int j = 1; j < k; ++j) r += params.beta[j - 1] * sums[j].log_abs_det();
  r -= (params.alpha_sum() + params.beta_sum()) * sums[0].log_abs_det();
  return r;
}

}  // namespace cmvgd
