#include <benchmark/benchmark.h>

#include <vector>

#include "conformal/halfplane.hpp"
#include "conformal/sampling.hpp"
#include "conformal/spacetime.hpp"
#include "conformal/su22.hpp"

namespace {

using namespace conformal;

void BM_FracLinearAct(benchmark::State& state) {
  Sampler s(1);
  const SU22Element m = s.su22();
  const DomainPoint z = s.domain_point(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(frac_linear_act(m, z));
}
BENCHMARK(BM_FracLinearAct);

void BM_CoherentPhi(benchmark::State& state) {
  Sampler s(2);
  const DomainPoint xi = s.domain_point(0.9);
  const Mat2C z = s.domain_point(0.9).z();
  for (auto _ : state) benchmark::DoNotOptimize(coherent_phi(xi, z));
}
BENCHMARK(BM_CoherentPhi);

void BM_DewittQuadrature(benchmark::State& state) {
  const HalfPlanePoint pt(0.5, 2.0);
  const MetricPerturbation h{1.0, -0.5};
  QuadratureOptions opts;
  opts.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dewitt_inner_product(pt, h, h, opts));
}
BENCHMARK(BM_DewittQuadrature)->Arg(32)->Arg(64)->Arg(128);

void BM_LieDerivativeFd(benchmark::State& state) {
  const RadialVectorField xi = killing_field();
  const RadialPoint p(0.3, 0.8, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(lie_derivative_fd(rescaled_metric, xi, p, 1e-5));
}
BENCHMARK(BM_LieDerivativeFd);

void BM_KillingGrid(benchmark::State& state) {
  const TRGrid grid{-2.0, 2.0, 20, 0.1, 2.0, 20};
  const std::vector<RadialPoint> points = grid.points();
  const RadialVectorField xi = killing_field();
  for (auto _ : state) {
    double worst = 0.0;
    for (const RadialPoint& p : points) {
      worst = std::max(worst, lie_derivative_fd(rescaled_metric, xi, p, 1e-5).cwiseAbs().maxCoeff());
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_KillingGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
