#include "cmvgd/hermitian.hpp"

#include <cmath>
#include <string>

namespace cmvgd {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

Matrix hermitian_part(const Matrix& m) {
  require_square(m, "hermitian_part");
  const int p = static_cast<int>(m.rows());
  Matrix h(p, p);
  for (int j = 0; j < p; ++j) {
    h(j, j) = Complex(m(j, j).real(), 0.0);
    for (int i = j + 1; i < p; ++i) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }
  return h;
}

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  require_square(m, "HermitianMatrix");
  const double scale = m.cwiseAbs().maxCoeff();
  const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (drift > 1e-8 * std::max(scale, 1.0)) {
    throw DimensionMismatch("HermitianMatrix: input is not hermitian (asymmetry " +
                            std::to_string(drift) + ")");
  }
  m_ = hermitian_part(m);
}

LowerTriangularFactor::LowerTriangularFactor(const Matrix& t) {
  require_square(t, "LowerTriangularFactor");
  const int p = static_cast<int>(t.rows());
  for (int j = 0; j < p; ++j) {
    if (t(j, j).imag() != 0.0 || t(j, j).real() <= 0.0) {
      throw NotPositiveDefinite("LowerTriangularFactor: diagonal entry " + std::to_string(j) +
                                " must be real and strictly positive");
    }
    for (int i = 0; i < j; ++i) {
      if (t(i, j) != Complex(0.0, 0.0)) {
        throw DimensionMismatch("LowerTriangularFactor: nonzero entry above the diagonal at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  t_ = t;
}

namespace {

// Shared Cholesky kernel. Returns the factor and accumulates the log
// determinant of A; throws NotPositiveDefinite on a failed pivot.
Matrix cholesky_kernel(const Matrix& a, double* log_det) {
  const int p = static_cast<int>(a.rows());
  double max_diag = 0.0;
  for (int j = 0; j < p; ++j) max_diag = std::max(max_diag, a(j, j).real());
  const double pivot_floor = kHpdPivotTolerance * max_diag;

  Matrix t = Matrix::Zero(p, p);
  double ld = 0.0;
  for (int j = 0; j < p; ++j) {
    double d = a(j, j).real();
    for (int l = 0; l < j; ++l) d -= std::norm(t(j, l));
    if (!(d > pivot_floor)) {
      throw NotPositiveDefinite("cholesky_lower: pivot " + std::to_string(j) + " is " +
                                std::to_string(d) + ", below the positive-definite floor");
    }
    const double tjj = std::sqrt(d);
    t(j, j) = tjj;
    ld += std::log(tjj);
    for (int i = j + 1; i < p; ++i) {
      Complex s = a(i, j);
      for (int l = 0; l < j; ++l) s -= t(i, l) * std::conj(t(j, l));
      t(i, j) = s / tjj;
    }
  }
  if (log_det) *log_det = 2.0 * ld;
  return t;
}

}  // namespace

HpdMatrix::HpdMatrix(HermitianMatrix h) : h_(std::move(h)), log_det_(0.0) {
  cholesky_kernel(h_.matrix(), &log_det_);
}

LowerTriangularFactor cholesky_lower(const HpdMatrix& a) {
  return LowerTriangularFactor(cholesky_kernel(a.matrix(), nullptr));
}

HpdMatrix hpd_pow(const HpdMatrix& a, double exponent) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
  const RealVector powed = es.eigenvalues().array().pow(exponent);
  Matrix result = es.eigenvectors() * powed.asDiagonal() * es.eigenvectors().adjoint();
  return HpdMatrix(HermitianMatrix(hermitian_part(result)));
}

HpdMatrix hpd_sqrt(const HpdMatrix& a) { return hpd_pow(a, 0.5); }

RealVector eigenvalues_sorted(const HermitianMatrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double log_abs_det(const HpdMatrix& a) { return a.log_abs_det(); }

RealCoordinates vectorize(const HermitianMatrix& x) {
  const int p = x.dim();
  RealCoordinates v;
  v.p = p;
  v.coords.resize(p * p);
  const Matrix& m = x.matrix();
  int idx = 0;
  for (int j = 0; j < p; ++j) v.coords[idx++] = m(j, j).real();
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      v.coords[idx++] = m(i, j).real();
      v.coords[idx++] = m(i, j).imag();
    }
  }
  return v;
}

HermitianMatrix unvectorize(const RealCoordinates& v) {
  const int p = v.p;
  if (v.coords.size() != static_cast<Eigen::Index>(p) * p) {
    throw DimensionMismatch("unvectorize: expected " + std::to_string(p * p) +
                            " coordinates, got " + std::to_string(v.coords.size()));
  }
  Matrix m(p, p);
  int idx = 0;
  for (int j = 0; j < p; ++j) m(j, j) = Complex(v.coords[idx++], 0.0);
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      const double re = v.coords[idx++];
      const double im = v.coords[idx++];
      m(i, j) = Complex(re, im);
      m(j, i) = Complex(re, -im);
    }
  }
  return HermitianMatrix(m);
}

RealCoordinates vectorize_lower(const LowerTriangularFactor& t) {
  const int p = t.dim();
  RealCoordinates v;
  v.p = p;
  v.coords.resize(p * p);
  const Matrix& m = t.matrix();
  int idx = 0;
  for (int j = 0; j < p; ++j) v.coords[idx++] = m(j, j).real();
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      v.coords[idx++] = m(i, j).real();
      v.coords[idx++] = m(i, j).imag();
    }
  }
  return v;
}

LowerTriangularFactor unvectorize_lower(const RealCoordinates& v) {
  const int p = v.p;
  if (v.coords.size() != static_cast<Eigen::Index>(p) * p) {
    throw DimensionMismatch("unvectorize_lower: expected " + std::to_string(p * p) +
                            " coordinates, got " + std::to_string(v.coords.size()));
  }
  Matrix m = Matrix::Zero(p, p);
  int idx = 0;
  for (int j = 0; j < p; ++j) m(j, j) = Complex(v.coords[idx++], 0.0);
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      const double re = v.coords[idx++];
      const double im = v.coords[idx++];
      m(i, j) = Complex(re, im);
    }
  }
  return LowerTriangularFactor(m);
}

}  // namespace cmvgd
