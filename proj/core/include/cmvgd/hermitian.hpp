#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cmvgd/errors.hpp"

namespace cmvgd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Exact hermitian part of a square matrix: (M + M*)/2 with the upper
/// triangle mirrored from the lower so the result satisfies
/// m(i,j) == conj(m(j,i)) bit for bit and has an exactly real diagonal.
Matrix hermitian_part(const Matrix& m);

/// A p x p complex matrix with X = X*, enforced at construction.
///
/// The constructor rejects inputs whose asymmetry exceeds floating-point
/// drift, then replaces the input by its exact hermitian part, so the
/// invariant holds exactly rather than approximately.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

 private:
  Matrix m_;
};

/// Lower triangular factor with strictly positive real diagonal, as produced
/// by the Cholesky factorization X = T T*.
class LowerTriangularFactor {
 public:
  explicit LowerTriangularFactor(const Matrix& t);

  int dim() const { return static_cast<int>(t_.rows()); }
  const Matrix& matrix() const { return t_; }

 private:
  Matrix t_;
};

/// A hermitian matrix certified positive definite at construction.
///
/// Certification runs the Cholesky factorization and rejects any pivot
/// <= 1e-13 times the largest diagonal entry. The log absolute determinant
/// falls out of the certifying factorization and is cached.
class HpdMatrix {
 public:
  explicit HpdMatrix(HermitianMatrix h);
  explicit HpdMatrix(const Matrix& m) : HpdMatrix(HermitianMatrix(m)) {}

  int dim() const { return h_.dim(); }
  const Matrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }
  double trace() const { return h_.trace(); }
  double log_abs_det() const { return log_det_; }

 private:
  HermitianMatrix h_;
  double log_det_;
};

/// The p^2 real coordinates of a hermitian (or lower triangular) p x p
/// matrix, in the canonical ordering: the p real diagonal entries first,
/// then for each strict-lower entry in column-major order its real part
/// followed by its imaginary part.
struct RealCoordinates {
  int p = 0;
  RealVector coords;
};

/// Relative pivot tolerance of the HPD certification.
inline constexpr double kHpdPivotTolerance = 1e-13;

/// Cholesky factorization A = T T* with real positive diagonal.
/// Throws NotPositiveDefinite when a pivot is <= kHpdPivotTolerance times
/// the largest diagonal entry; this doubles as the HPD certifier.
LowerTriangularFactor cholesky_lower(const HpdMatrix& a);

/// The unique HPD square root, via the spectral decomposition.
HpdMatrix hpd_sqrt(const HpdMatrix& a);

/// Spectral power A^r = V diag(lambda^r) V* for real r. Covers the square
/// root (r = 1/2), inverse square root (r = -1/2) and inverse (r = -1) used
/// by the tuple transformations, all through one code path.
HpdMatrix hpd_pow(const HpdMatrix& a, double exponent);

/// Real eigenvalues in ascending order.
RealVector eigenvalues_sorted(const HermitianMatrix& x);

/// log |det A| = 2 sum_j log t_jj from the Cholesky factor.
double log_abs_det(const HpdMatrix& a);

/// Linear bijection between hermitian matrices and their p^2 real
/// coordinates (see RealCoordinates for the ordering). Round trips exactly.
RealCoordinates vectorize(const HermitianMatrix& x);
HermitianMatrix unvectorize(const RealCoordinates& v);

/// Same coordinate convention applied to lower triangular factors, used by
/// the Jacobian checks of the factorization map T -> T T*.
RealCoordinates vectorize_lower(const LowerTriangularFactor& t);
LowerTriangularFactor unvectorize_lower(const RealCoordinates& v);

}  // namespace cmvgd
