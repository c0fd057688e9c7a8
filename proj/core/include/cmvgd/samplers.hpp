#pragma once

#include <cstdint>

#include "cmvgd/densities.hpp"

namespace cmvgd {

/// Deterministic random stream keyed by (seed, stream id). Identical keys
/// reproduce identical sequences bit for bit, and distinct stream ids give
/// statistically independent streams for the same seed, so parallel workers
/// can each own a disjoint stream.
///
/// The generator is a 32-bit PCG (XSH-RR output on a 64-bit LCG state, with
/// the stream id selecting the increment). Doubles draw 53 random bits.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform();

  /// Standard normal via the polar method (second value cached).
  double normal();

  /// Gamma(shape, rate 1) by Marsaglia-Tsang rejection; shapes in (0, 1)
  /// are boosted through Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape);

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Complex matrix-variate gamma(a) draw via the triangular decomposition
/// X = T T*: t_jj^2 ~ Gamma(a - j + 1) on the diagonal and independent
/// complex normals with per-part variance 1/2 below it. Requires a > p - 1.
HpdMatrix sample_matrix_gamma(int p, double a, RngStream& rng);

/// Type-1 beta(a, b) draw: (A + B)^{-1/2} A (A + B)^{-1/2} with independent
/// matrix gammas A ~ gamma(a), B ~ gamma(b). Eigenvalues lie in (0, 1).
HpdMatrix sample_type1_beta(int p, double a, double b, RngStream& rng);

/// Type-2 beta(a, b) draw: B^{-1/2} A B^{-1/2} with independent matrix
/// gammas A ~ gamma(a), B ~ gamma(b).
HpdMatrix sample_type2_beta(int p, double a, double b, RngStream& rng);

/// Exact draw from the generalized type-2 Dirichlet model: independent
/// type-2 beta components V_j ~ beta2(alpha_j, tail(j)) pushed through the
/// inverse tuple transformation (X_k = V_k, then right to left
/// X_j = S_{j+1}^{1/2} V_j S_{j+1}^{1/2} with S_{j+1} = I + X_{j+1} + ... + X_k).
HpdTuple sample_gen_dirichlet(const GenDirichletParams& params, RngStream& rng);

}  // namespace cmvgd
