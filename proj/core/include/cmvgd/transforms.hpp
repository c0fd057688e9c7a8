#pragma once

#include <utility>

#include "cmvgd/densities.hpp"

namespace cmvgd {

/// A transformed tuple together with the log absolute volume weight of the
/// map on the stacked k*p^2 real coordinates.
///
/// For to_type2_v (every p, k), and for the other three maps whenever k = 1
/// or p = 1, this weight is exactly log |det| of the map's differential and
/// the central-difference oracle reproduces it. For to_type1_y, to_type1_z
/// and to_type2_u with p >= 2 and k >= 2 it is the determinant-product
/// weight under which the density factorizations hold in the integral
/// (eigenvalue) calculus; the literal pointwise Jacobian of those maps is a
/// different, non-product quantity. numeric_log_jacobian evaluates the
/// pointwise one when it is needed.
struct TransformResult {
  HpdTuple output;
  double log_abs_jacobian;
};

/// Y_j = S_j^{-1/2} X_j S_j^{-1/2} with S_j = I + X_j + ... + X_k.
/// Each Y_j has eigenvalues in (0, 1).
/// Weight: -2p log|det S_1| - p sum_{j=2}^{k} log|det S_j|.
TransformResult to_type1_y(const HpdTuple& xs);

/// Z_j = S_j^{-1/2} S_{j+1} S_j^{-1/2} (S_{k+1} = I); satisfies
/// Z_j = I - Y_j exactly, so the weight equals that of to_type1_y.
TransformResult to_type1_z(const HpdTuple& xs);

/// U_j = X_j^{-1/2} S_{j+1} X_j^{-1/2}.
/// Weight: -2p sum_j log|det X_j| + p sum_{j=2}^{k} log|det S_j|.
TransformResult to_type2_u(const HpdTuple& xs);

/// V_j = S_{j+1}^{-1/2} X_j S_{j+1}^{-1/2} (so V_k = X_k). Block triangular
/// with every diagonal block a congruence by a matrix constant in the
/// differentiated component, so the weight
///   -p sum_{j=2}^{k} log|det S_j|
/// is the exact pointwise log |det| of the differential for every p, k.
TransformResult to_type2_v(const HpdTuple& xs);

/// Inverse of to_type2_v, applied right to left: X_k = V_k, then
/// X_j = S_{j+1}^{1/2} V_j S_{j+1}^{1/2}. Round-trips to 1e-11 Frobenius.
HpdTuple from_type2_v(const HpdTuple& vs);

/// The two symmetrized congruence products (A^{1/2} X A^{1/2},
/// X^{1/2} A X^{1/2}); both are similar to X A and so share eigenvalues.
std::pair<HpdMatrix, HpdMatrix> congruence_pair(const HpdMatrix& a, const HpdMatrix& x);

/// The four tuple transformations, addressable by tag.
enum class TupleTransform { Type1Y, Type1Z, Type2U, Type2V };

TransformResult apply_transform(TupleTransform t, const HpdTuple& xs);

const char* transform_name(TupleTransform t);

}  // namespace cmvgd
