#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "cmvgd/samplers.hpp"
#include "cmvgd/transforms.hpp"

namespace cmvgd {

/// Outcome of one analytic-vs-numeric Jacobian comparison.
struct JacobianCheck {
  std::string check_id;
  double analytic = 0.0;  // log |det J|
  double numeric = 0.0;
  double relative_error = 0.0;  // |analytic - numeric| / max(1, |analytic|)
  double step = 0.0;
  std::uint64_t seed = 0;

  bool passes(double tolerance) const { return relative_error < tolerance; }
};

/// Central-difference log |det| of the differential of f at a point.
///
/// Builds the dense n x n matrix of central differences, with the step for
/// coordinate i scaled as (1 + |x_i|) * base_step, and evaluates log |det|
/// through an LU factorization in log space. Throws SingularJacobian when
/// the difference matrix is numerically singular (reciprocal condition
/// estimate below 1e-12). base_step must lie in [1e-7, 1e-3].
double numeric_log_jacobian(const std::function<RealVector(const RealVector&)>& f,
                            const RealVector& at, double base_step = 1e-5);

using TupleMap = std::function<HpdTuple(const HpdTuple&)>;

/// Same oracle on a tuple-to-tuple transformation, through the canonical
/// k*p^2 real coordinates of the stacked tuple.
double numeric_log_jacobian(const TupleMap& map, const HpdTuple& at, double base_step = 1e-5);

/// The stacked real coordinates of a tuple and their inverse.
RealVector vectorize_tuple(const HpdTuple& xs);
HpdTuple unvectorize_tuple(const RealVector& v, int p, int k);

// --- Catalogued identity checks ------------------------------------------
//
// Each check compares a closed-form Jacobian determinant against the
// central-difference oracle on one instance and reports a JacobianCheck
// carrying the catalog id of the identity it certifies (see README).

/// id "eq1.1": congruence X -> A X A* has log|J| = 2p log|det A|.
JacobianCheck check_congruence_jacobian(const Matrix& a, const HpdMatrix& x,
                                        std::uint64_t seed, double base_step = 1e-5);

/// id "eq1.2": inversion X -> X^{-1} has log|J| = -2p log|det X|.
JacobianCheck check_inversion_jacobian(const HpdMatrix& x, std::uint64_t seed,
                                       double base_step = 1e-5);

/// id "eq1.3": factorization T -> T T* has
/// log|J| = p log 2 + sum_j (2(p-j) + 1) log t_jj.
JacobianCheck check_cholesky_jacobian(const LowerTriangularFactor& t, std::uint64_t seed,
                                      double base_step = 1e-5);

/// ids "eq2.5" (Y and Z), "eq2.9" (U), "thm2.5-jac" (V): the tuple
/// transformations' analytic log-Jacobians against the oracle.
JacobianCheck check_tuple_jacobian(TupleTransform t, const HpdTuple& xs, std::uint64_t seed,
                                   double base_step = 1e-5);

/// id "lemma2.2": the composite map Y1 -> X^{1/2} A X^{1/2} with
/// X = A^{-1/2} Y1 A^{-1/2} preserves volume; analytic log|J| = 0.
JacobianCheck check_commuted_congruence_jacobian(const HpdMatrix& a, const HpdMatrix& y1,
                                                 std::uint64_t seed, double base_step = 1e-5);

// --- Test-instance generators ---------------------------------------------

/// G G* + ridge*I with standard complex gaussian G; mild conditioning for
/// finite differences.
HpdMatrix random_test_hpd(int p, RngStream& rng, double ridge = 0.1);

HpdTuple random_test_tuple(int p, int k, RngStream& rng, double ridge = 0.1);

/// Random complex matrix, redrawn until well-invertible.
Matrix random_complex_invertible(int p, RngStream& rng);

/// Random test HPD matrix redrawn until all eigenvalue gaps are >= min_gap.
HpdMatrix random_separated_hpd(int p, double min_gap, RngStream& rng, double ridge = 0.1);

}  // namespace cmvgd
