#pragma once

#include <vector>

#include "cmvgd/hermitian.hpp"
#include "cmvgd/special_functions.hpp"

namespace cmvgd {

/// An ordered k-tuple of HPD matrices of common dimension p; a sample point
/// of the joint generalized Dirichlet model.
class HpdTuple {
 public:
  explicit HpdTuple(std::vector<HpdMatrix> mats);

  int k() const { return static_cast<int>(mats_.size()); }
  int dim() const { return mats_.front().dim(); }
  const HpdMatrix& operator[](int j) const { return mats_[j]; }
  const std::vector<HpdMatrix>& mats() const { return mats_; }

 private:
  std::vector<HpdMatrix> mats_;
};

/// Log density of the complex matrix-variate gamma with shape a:
///   (a - p) log|det X| - tr(X) - log Gamma_p(a).
double logpdf_matrix_gamma(const HpdMatrix& x, double a);

/// Log density of the complex matrix-variate type-1 beta(a, b), supported on
/// HPD matrices with all eigenvalues in (0, 1):
///   (a - p) log|det X| + (b - p) log|det(I - X)| - log B_p(a, b).
/// Throws SupportError when I - X is not positive definite.
double logpdf_type1_beta(const HpdMatrix& x, double a, double b);

/// Log density of the complex matrix-variate type-2 beta(a, b) on the HPD
/// cone:
///   (a - p) log|det X| - (a + b) log|det(I + X)| - log B_p(a, b).
double logpdf_type2_beta(const HpdMatrix& x, double a, double b);

/// Log joint density of the generalized type-2 Dirichlet model:
///   log c_k + sum_j (alpha_j - p) log|det X_j|
///           + sum_{j=1}^{k-1} beta_j log|det S_{j+1}|
///           - (sum alpha + sum beta) log|det S_1|,
/// with partial sums S_j = I + X_j + ... + X_k computed once, right to left.
/// For k = 1 this reduces exactly to logpdf_type2_beta(X_1, alpha_1,
/// alpha_2 + beta_1).
double logpdf_gen_dirichlet(const HpdTuple& xs, const GenDirichletParams& params);

/// The partial sums S_j = I + X_j + ... + X_k for j = 1..k (returned in that
/// order), shared between the density and the tuple transforms.
std::vector<HpdMatrix> partial_sums(const HpdTuple& xs);

}  // namespace cmvgd
