#include "cmvgd/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cmvgd {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u), seed_(seed), stream_(stream) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t RngStream::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  // 52 random bits, offset by half an ulp: strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * m;
  has_spare_ = true;
  return u * m;
}

double RngStream::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("RngStream::gamma: shape must be positive");
  if (shape < 1.0) {
    const double boost = std::pow(uniform(), 1.0 / shape);
    return gamma(shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

HpdMatrix sample_matrix_gamma(int p, double a, RngStream& rng) {
  if (p < 1) throw DomainError("sample_matrix_gamma: p must be a positive integer");
  if (!(a > p - 1.0)) {
    throw DomainError("sample_matrix_gamma: shape must exceed p-1 (got " + std::to_string(a) +
                      ")");
  }
  const double half_sd = std::sqrt(0.5);
  Matrix t = Matrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    t(j, j) = std::sqrt(rng.gamma(a - j));  // shape a - j + 1 with 1-based j
    for (int i = j + 1; i < p; ++i) {
      t(i, j) = Complex(half_sd * rng.normal(), half_sd * rng.normal());
    }
  }
  Matrix x = t * t.adjoint();
  return HpdMatrix(HermitianMatrix(hermitian_part(x)));
}

namespace {

// Congruence product C A C with hermitization hygiene, C hermitian.
HpdMatrix congruence(const HpdMatrix& c, const HpdMatrix& a) {
  Matrix m = c.matrix() * a.matrix() * c.matrix();
  return HpdMatrix(HermitianMatrix(hermitian_part(m)));
}

}  // namespace

HpdMatrix sample_type1_beta(int p, double a, double b, RngStream& rng) {
  const HpdMatrix ga = sample_matrix_gamma(p, a, rng);
  const HpdMatrix gb = sample_matrix_gamma(p, b, rng);
  const HpdMatrix sum(HermitianMatrix(ga.matrix() + gb.matrix()));
  return congruence(hpd_pow(sum, -0.5), ga);
}

HpdMatrix sample_type2_beta(int p, double a, double b, RngStream& rng) {
  const HpdMatrix ga = sample_matrix_gamma(p, a, rng);
  const HpdMatrix gb = sample_matrix_gamma(p, b, rng);
  return congruence(hpd_pow(gb, -0.5), ga);
}

HpdTuple sample_gen_dirichlet(const GenDirichletParams& params, RngStream& rng) {
  params.validate();
  const int p = params.p;
  const int k = params.k;
  std::vector<HpdMatrix> xs;
  xs.reserve(k);

  // Draw the independent components first (left to right), then invert the
  // tuple transformation right to left.
  std::vector<HpdMatrix> vs;
  vs.reserve(k);
  for (int j = 1; j <= k; ++j) {
    vs.push_back(sample_type2_beta(p, params.alpha[j - 1], params.tail(j), rng));
  }

  Matrix running = Matrix::Identity(p, p);  // S_{j+1} accumulator
  for (int j = k; j >= 1; --j) {
    if (j == k) {
      xs.push_back(vs[k - 1]);
    } else {
      const HpdMatrix s_next{HermitianMatrix(running)};
      xs.push_back(congruence(hpd_sqrt(s_next), vs[j - 1]));
    }
    running += xs.back().matrix();
  }
  std::reverse(xs.begin(), xs.end());
  return HpdTuple(std::move(xs));
}

}  // namespace cmvgd
