#include "cmvgd/jacobian.hpp"

#include <Eigen/LU>
#include <cmath>
#include <vector>

namespace cmvgd {

namespace {

JacobianCheck make_check(std::string id, double analytic, double numeric, double step,
                         std::uint64_t seed) {
  JacobianCheck c;
  c.check_id = std::move(id);
  c.analytic = analytic;
  c.numeric = numeric;
  c.relative_error = std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
  c.step = step;
  c.seed = seed;
  return c;
}

}  // namespace

double numeric_log_jacobian(const std::function<RealVector(const RealVector&)>& f,
                            const RealVector& at, double base_step) {
  if (!(base_step >= 1e-7 && base_step <= 1e-3)) {
    throw DomainError("numeric_log_jacobian: base_step must lie in [1e-7, 1e-3]");
  }
  const Eigen::Index n = at.size();
  Eigen::MatrixXd diff(n, n);
  RealVector probe = at;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double h = (1.0 + std::abs(at[j])) * base_step;
    probe[j] = at[j] + h;
    const RealVector up = f(probe);
    probe[j] = at[j] - h;
    const RealVector down = f(probe);
    probe[j] = at[j];
    diff.col(j) = (up - down) / (2.0 * h);
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(diff);
  if (!(lu.rcond() > 1e-12)) {
    throw SingularJacobian("numeric_log_jacobian: difference matrix is numerically singular "
                           "(rcond <= 1e-12)");
  }
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    log_det += std::log(std::abs(lu.matrixLU()(i, i)));
  }
  return log_det;
}

RealVector vectorize_tuple(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  RealVector v(static_cast<Eigen::Index>(k) * p * p);
  for (int j = 0; j < k; ++j) {
    v.segment(static_cast<Eigen::Index>(j) * p * p, p * p) =
        vectorize(xs[j].hermitian()).coords;
  }
  return v;
}

HpdTuple unvectorize_tuple(const RealVector& v, int p, int k) {
  if (v.size() != static_cast<Eigen::Index>(k) * p * p) {
    throw DimensionMismatch("unvectorize_tuple: coordinate count does not match k*p^2");
  }
  std::vector<HpdMatrix> mats;
  mats.reserve(k);
  for (int j = 0; j < k; ++j) {
    RealCoordinates rc;
    rc.p = p;
    rc.coords = v.segment(static_cast<Eigen::Index>(j) * p * p, p * p);
    mats.emplace_back(unvectorize(rc));
  }
  return HpdTuple(std::move(mats));
}

double numeric_log_jacobian(const TupleMap& map, const HpdTuple& at, double base_step) {
  const int p = at.dim();
  const int k = at.k();
  auto f = [&](const RealVector& v) -> RealVector {
    return vectorize_tuple(map(unvectorize_tuple(v, p, k)));
  };
  return numeric_log_jacobian(f, vectorize_tuple(at), base_step);
}

JacobianCheck check_congruence_jacobian(const Matrix& a, const HpdMatrix& x, std::uint64_t seed,
                                        double base_step) {
  const int p = x.dim();
  const double log_abs_det_a = std::log(std::abs(a.determinant()));
  if (!std::isfinite(log_abs_det_a)) {
    throw SingularJacobian("check_congruence_jacobian: constant matrix is singular");
  }
  auto map = [&](const RealVector& v) -> RealVector {
    const Matrix m = unvectorize(RealCoordinates{p, v}).matrix();
    return vectorize(HermitianMatrix(hermitian_part(a * m * a.adjoint()))).coords;
  };
  const double numeric = numeric_log_jacobian(map, vectorize(x.hermitian()).coords, base_step);
  return make_check("eq1.1", 2.0 * p * log_abs_det_a, numeric, base_step, seed);
}

JacobianCheck check_inversion_jacobian(const HpdMatrix& x, std::uint64_t seed,
                                       double base_step) {
  const int p = x.dim();
  auto map = [&](const RealVector& v) -> RealVector {
    const HpdMatrix m(unvectorize(RealCoordinates{p, v}));
    return vectorize(hpd_pow(m, -1.0).hermitian()).coords;
  };
  const double numeric = numeric_log_jacobian(map, vectorize(x.hermitian()).coords, base_step);
  return make_check("eq1.2", -2.0 * p * x.log_abs_det(), numeric, base_step, seed);
}

JacobianCheck check_cholesky_jacobian(const LowerTriangularFactor& t, std::uint64_t seed,
                                      double base_step) {
  const int p = t.dim();
  double analytic = p * std::log(2.0);
  for (int j = 0; j < p; ++j) {
    // exponent 2(p - j) + 1 with 1-based j
    analytic += (2.0 * (p - j - 1) + 1.0) * std::log(t.matrix()(j, j).real());
  }
  auto map = [&](const RealVector& v) -> RealVector {
    const Matrix lower = unvectorize_lower(RealCoordinates{p, v}).matrix();
    return vectorize(HermitianMatrix(hermitian_part(lower * lower.adjoint()))).coords;
  };
  const double numeric = numeric_log_jacobian(map, vectorize_lower(t).coords, base_step);
  return make_check("eq1.3", analytic, numeric, base_step, seed);
}

JacobianCheck check_tuple_jacobian(TupleTransform t, const HpdTuple& xs, std::uint64_t seed,
                                   double base_step) {
  if (xs.dim() * std::sqrt(static_cast<double>(xs.k())) > 8.0) {
    throw DomainError("check_tuple_jacobian: need p*sqrt(k) <= 8 (the difference matrix has "
                      "(k p^2)^2 entries)");
  }
  const TransformResult result = apply_transform(t, xs);
  auto map = [&](const HpdTuple& in) { return apply_transform(t, in).output; };
  const double numeric = numeric_log_jacobian(TupleMap(map), xs, base_step);
  const char* id = "eq2.5";
  if (t == TupleTransform::Type2U) id = "eq2.9";
  if (t == TupleTransform::Type2V) id = "thm2.5-jac";
  return make_check(id, result.log_abs_jacobian, numeric, base_step, seed);
}

JacobianCheck check_commuted_congruence_jacobian(const HpdMatrix& a, const HpdMatrix& y1,
                                                 std::uint64_t seed, double base_step) {
  const int p = a.dim();
  const HpdMatrix a_inv_sqrt = hpd_pow(a, -0.5);
  auto map = [&](const RealVector& v) -> RealVector {
    const HpdMatrix y(unvectorize(RealCoordinates{p, v}));
    const Matrix xm = a_inv_sqrt.matrix() * y.matrix() * a_inv_sqrt.matrix();
    const HpdMatrix x(HermitianMatrix(hermitian_part(xm)));
    const HpdMatrix x_sqrt = hpd_sqrt(x);
    const Matrix y2 = x_sqrt.matrix() * a.matrix() * x_sqrt.matrix();
    return vectorize(HermitianMatrix(hermitian_part(y2))).coords;
  };
  const double numeric = numeric_log_jacobian(map, vectorize(y1.hermitian()).coords, base_step);
  return make_check("lemma2.2", 0.0, numeric, base_step, seed);
}

HpdMatrix random_test_hpd(int p, RngStream& rng, double ridge) {
  Matrix g(p, p);
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < p; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  Matrix x = g * g.adjoint() + ridge * Matrix::Identity(p, p);
  return HpdMatrix(HermitianMatrix(hermitian_part(x)));
}

HpdTuple random_test_tuple(int p, int k, RngStream& rng, double ridge) {
  std::vector<HpdMatrix> mats;
  mats.reserve(k);
  for (int j = 0; j < k; ++j) mats.push_back(random_test_hpd(p, rng, ridge));
  return HpdTuple(std::move(mats));
}

Matrix random_complex_invertible(int p, RngStream& rng) {
  for (;;) {
    Matrix a(p, p);
    for (int j = 0; j < p; ++j) {
      for (int i = 0; i < p; ++i) a(i, j) = Complex(rng.normal(), rng.normal());
    }
    if (std::abs(a.determinant()) > 1e-3) return a;
  }
}

HpdMatrix random_separated_hpd(int p, double min_gap, RngStream& rng, double ridge) {
  for (;;) {
    HpdMatrix x = random_test_hpd(p, rng, ridge);
    const RealVector ev = eigenvalues_sorted(x.hermitian());
    bool ok = true;
    for (int i = 0; i + 1 < p; ++i) {
      if (ev[i + 1] - ev[i] < min_gap) ok = false;
    }
    if (ok) return x;
  }
}

}  // namespace cmvgd
