#include <benchmark/benchmark.h>

#include "hartogs/checks.hpp"

using namespace hartogs;

namespace {

CPoint c2(cplx a, cplx b) { return CPoint(std::vector<cplx>{a, b}); }

void ContourIntegration(benchmark::State& state) {
  Contour contour;
  contour.curves.push_back({cplx(0.0, 0.0), 1.0, +1});
  auto f = [](cplx z) { return std::exp(z) / (z - 0.3); };
  QuadratureOptions opts;
  opts.start_nodes = static_cast<std::size_t>(state.range(0));
  opts.node_cap = opts.start_nodes;  // fixed node count per iteration
  for (auto _ : state) {
    auto q = integrate_contour(f, contour, opts);
    benchmark::DoNotOptimize(q.value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ContourIntegration)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void AdmissibleSynthesis(benchmark::State& state) {
  const DomainSpec omega = DomainSpec::ball(CPoint::zero(2), 2.0);
  const CompactSpec K = CompactSpec::sphere(CPoint::zero(2), 1.0, 0.15);
  const CPoint a = c2(cplx(0.3, 0.2), cplx(0.1, -0.4));
  const CPoint u = CPoint::unit(0, 2);
  for (auto _ : state) {
    PlanarRegion G = synthesize_admissible(a, u, K, omega);
    benchmark::DoNotOptimize(G);
  }
}
BENCHMARK(AdmissibleSynthesis);

void CompanionEvaluation(benchmark::State& state) {
  const DomainSpec omega = DomainSpec::ball(CPoint::zero(2), 3.0);
  const CompactSpec K = CompactSpec::closed_ball(CPoint::zero(2), 1.0);
  const HoloFn g = catalog_fn(
      "exp-plus-square",
      {{"exp_index", 0}, {"square_index", 1}, {"ambient", 2}});
  const HoloFn f = restrict_fn(g, K);
  const CPoint x = c2(cplx(1.4, 0.3), cplx(-0.2, 0.8));
  for (auto _ : state) {
    auto r = companion_nd(f, K, omega, x);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(CompanionEvaluation);

void GridFloodFill(benchmark::State& state) {
  const DomainSpec omega = DomainSpec::ball(CPoint::zero(2), 2.0);
  const CompactSpec K = CompactSpec::sphere(CPoint::zero(2), 1.0, 0.15);
  Box box;
  box.lo.assign(4, -2.5);
  box.hi.assign(4, 2.5);
  const GridComplex grid = build_grid(K, omega, box, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = components(grid, GridRegion::complement_of_k);
    benchmark::DoNotOptimize(rep.components);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GridFloodFill)->Arg(15)->Arg(21)->Arg(31)->Complexity();

void HullDistance(benchmark::State& state) {
  Rng rng(7);
  std::vector<std::vector<cplx>> samples;
  for (long i = 0; i < state.range(0); ++i)
    samples.push_back({rng.in_disc(0.0, 1.0), rng.in_disc(0.0, 1.0)});
  const std::vector<cplx> y{cplx(1.5, 0.2), cplx(0.1, -0.3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_distance(y, samples, HullMode::convex_hull));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(HullDistance)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
