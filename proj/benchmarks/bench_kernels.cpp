#include <benchmark/benchmark.h>

#include "cmvgd/jacobian.hpp"
#include "cmvgd/montecarlo.hpp"

using namespace cmvgd;

namespace {

void BM_cholesky(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(1);
  const HpdMatrix a = random_test_hpd(p, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cholesky_lower(a));
  }
}
BENCHMARK(BM_cholesky)->Arg(2)->Arg(3)->Arg(5);

void BM_hpd_sqrt(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(2);
  const HpdMatrix a = random_test_hpd(p, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpd_sqrt(a));
  }
}
BENCHMARK(BM_hpd_sqrt)->Arg(2)->Arg(3)->Arg(5);

void BM_sample_matrix_gamma(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_matrix_gamma(p, p + 1.5, rng));
  }
}
BENCHMARK(BM_sample_matrix_gamma)->Arg(1)->Arg(2)->Arg(3);

void BM_sample_gen_dirichlet(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const GenDirichletParams params(p, {p + 1.0, p + 1.0, p + 1.0}, {1.0, 1.0});
  RngStream rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gen_dirichlet(params, rng));
  }
}
BENCHMARK(BM_sample_gen_dirichlet)->Arg(1)->Arg(2)->Arg(3);

void BM_logpdf_gen_dirichlet(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const GenDirichletParams params(p, {p + 1.0, p + 1.0, p + 1.0}, {1.0, 1.0});
  RngStream rng(5);
  const HpdTuple xs = sample_gen_dirichlet(params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(logpdf_gen_dirichlet(xs, params));
  }
}
BENCHMARK(BM_logpdf_gen_dirichlet)->Arg(1)->Arg(2)->Arg(3);

void BM_transform_v(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const GenDirichletParams params(p, {p + 1.0, p + 1.0, p + 1.0}, {1.0, 1.0});
  RngStream rng(6);
  const HpdTuple xs = sample_gen_dirichlet(params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_type2_v(xs));
  }
}
BENCHMARK(BM_transform_v)->Arg(1)->Arg(2)->Arg(3);

void BM_numeric_log_jacobian(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const GenDirichletParams params(p, {p + 1.0, p + 1.0, p + 1.0}, {1.0, 1.0});
  RngStream rng(7);
  const HpdTuple xs = sample_gen_dirichlet(params, rng);
  auto map = [](const HpdTuple& in) { return to_type2_v(in).output; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_log_jacobian(TupleMap(map), xs));
  }
}
BENCHMARK(BM_numeric_log_jacobian)->Arg(1)->Arg(2);

void BM_estimate_det_moment(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  auto draw = [](RngStream& rng) { return sample_matrix_gamma(2, 3.0, rng).log_abs_det(); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_det_moment(draw, 1.0, 20000, 8, 0, threads));
  }
}
BENCHMARK(BM_estimate_det_moment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
