#include "cmvgd/transforms.hpp"

#include <algorithm>
#include <vector>

namespace cmvgd {

namespace {

HpdMatrix sandwich(const HpdMatrix& outer, const Matrix& inner) {
  Matrix m = outer.matrix() * inner * outer.matrix();
  return HpdMatrix(HermitianMatrix(hermitian_part(m)));
}

}  // namespace

TransformResult to_type1_y(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  const std::vector<HpdMatrix> sums = partial_sums(xs);

  std::vector<HpdMatrix> ys;
  ys.reserve(k);
  double log_jac = -2.0 * p * sums[0].log_abs_det();
  for (int j = 0; j < k; ++j) {
    ys.push_back(sandwich(hpd_pow(sums[j], -0.5), xs[j].matrix()));
    if (j >= 1) log_jac -= p * sums[j].log_abs_det();
  }
  return TransformResult{HpdTuple(std::move(ys)), log_jac};
}

TransformResult to_type1_z(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  const std::vector<HpdMatrix> sums = partial_sums(xs);
  const Matrix identity = Matrix::Identity(p, p);

  std::vector<HpdMatrix> zs;
  zs.reserve(k);
  double log_jac = -2.0 * p * sums[0].log_abs_det();
  for (int j = 0; j < k; ++j) {
    const Matrix& s_next = (j + 1 < k) ? sums[j + 1].matrix() : identity;
    zs.push_back(sandwich(hpd_pow(sums[j], -0.5), s_next));
    if (j >= 1) log_jac -= p * sums[j].log_abs_det();
  }
  return TransformResult{HpdTuple(std::move(zs)), log_jac};
}

TransformResult to_type2_u(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  const std::vector<HpdMatrix> sums = partial_sums(xs);
  const Matrix identity = Matrix::Identity(p, p);

  std::vector<HpdMatrix> us;
  us.reserve(k);
  double log_jac = 0.0;
  for (int j = 0; j < k; ++j) {
    const Matrix& s_next = (j + 1 < k) ? sums[j + 1].matrix() : identity;
    us.push_back(sandwich(hpd_pow(xs[j], -0.5), s_next));
    log_jac -= 2.0 * p * xs[j].log_abs_det();
    if (j >= 1) log_jac += p * sums[j].log_abs_det();
  }
  return TransformResult{HpdTuple(std::move(us)), log_jac};
}

TransformResult to_type2_v(const HpdTuple& xs) {
  const int k = xs.k();
  const int p = xs.dim();
  const std::vector<HpdMatrix> sums = partial_sums(xs);

  std::vector<HpdMatrix> vs;
  vs.reserve(k);
  double log_jac = 0.0;
  for (int j = 0; j < k; ++j) {
    if (j + 1 < k) {
      vs.push_back(sandwich(hpd_pow(sums[j + 1], -0.5), xs[j].matrix()));
      log_jac -= p * sums[j + 1].log_abs_det();
    } else {
      vs.push_back(xs[j]);
    }
  }
  return TransformResult{HpdTuple(std::move(vs)), log_jac};
}

HpdTuple from_type2_v(const HpdTuple& vs) {
  const int k = vs.k();
  const int p = vs.dim();

  std::vector<HpdMatrix> xs;
  xs.reserve(k);
  Matrix running = Matrix::Identity(p, p);
  for (int j = k - 1; j >= 0; --j) {
    if (j == k - 1) {
      xs.push_back(vs[j]);
    } else {
      const HpdMatrix s_next{HermitianMatrix(running)};
      xs.push_back(sandwich(hpd_sqrt(s_next), vs[j].matrix()));
    }
    running += xs.back().matrix();
  }
  std::reverse(xs.begin(), xs.end());
  return HpdTuple(std::move(xs));
}

std::pair<HpdMatrix, HpdMatrix> congruence_pair(const HpdMatrix& a, const HpdMatrix& x) {
  if (a.dim() != x.dim()) {
    throw DimensionMismatch("congruence_pair: dimensions differ");
  }
  return {sandwich(hpd_sqrt(a), x.matrix()), sandwich(hpd_sqrt(x), a.matrix())};
}

TransformResult apply_transform(TupleTransform t, const HpdTuple& xs) {
  switch (t) {
    case TupleTransform::Type1Y: return to_type1_y(xs);
    case TupleTransform::Type1Z: return to_type1_z(xs);
    case TupleTransform::Type2U: return to_type2_u(xs);
    case TupleTransform::Type2V: return to_type2_v(xs);
  }
  throw Error("apply_transform: unknown transform tag");
}

const char* transform_name(TupleTransform t) {
  switch (t) {
    case TupleTransform::Type1Y: return "Y";
    case TupleTransform::Type1Z: return "Z";
    case TupleTransform::Type2U: return "U";
    case TupleTransform::Type2V: return "V";
  }
  return "?";
}

}  // namespace cmvgd
