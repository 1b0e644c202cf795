#include <benchmark/benchmark.h>

#include <hypnorm/ball.hpp>
#include <hypnorm/normest.hpp>
#include <hypnorm/quadrature.hpp>
#include <hypnorm/specfun.hpp>

namespace {

void BM_Hyp2f1Series(benchmark::State& state) {
  double z = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypnorm::hyp2f1(1.5, 0.75, 2.25, z));
    z = z < 0.6 ? z + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_Hyp2f1Series);

void BM_Hyp2f1NearOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::hyp2f1_complement(1.0, 1.0, 2.0, 1e-9));
}
BENCHMARK(BM_Hyp2f1NearOne);

void BM_JacobiRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::make_jacobi_rule(0.5, -0.3, order));
}
BENCHMARK(BM_JacobiRule)->RangeMultiplier(4)->Range(16, 1024);

void BM_Discretize(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const hypnorm::OperatorParams params(1.0, 0.0);
  const hypnorm::LebesgueExponent p(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::discretize(params, p, order));
}
BENCHMARK(BM_Discretize)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_PowerMethod(benchmark::State& state) {
  const auto disc = hypnorm::discretize({2.0, 0.5}, hypnorm::LebesgueExponent(3.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::lp_opnorm_numeric(disc));
}
BENCHMARK(BM_PowerMethod)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_L2Svd(benchmark::State& state) {
  const auto disc = hypnorm::discretize({1.0, 0.0}, hypnorm::LebesgueExponent(2.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::l2_opnorm_svd(disc));
}
BENCHMARK(BM_L2Svd)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_BilinearTwin(benchmark::State& state) {
  const hypnorm::ExtremalFamily fam(1.5, hypnorm::LebesgueExponent(2.0), 2.0, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::bilinear_form_numeric({1.5, 0.5}, fam));
}
BENCHMARK(BM_BilinearTwin)->Unit(benchmark::kMillisecond);

void BM_BerezinDisc(benchmark::State& state) {
  const hypnorm::DiscFunction f = [](std::complex<double> w) { return w.real(); };
  for (auto _ : state) benchmark::DoNotOptimize(hypnorm::berezin_apply_disc(f, {0.3, 0.4}));
}
BENCHMARK(BM_BerezinDisc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
