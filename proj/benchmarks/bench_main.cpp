#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "metabandit/environments.hpp"
#include "metabandit/meta_learner.hpp"
#include "metabandit/mirror_descent.hpp"
#include "metabandit/regularizers.hpp"
#include "metabandit/rng.hpp"

using namespace metabandit;

namespace {

Vec uniform_simplex(std::size_t d) { return Vec(d, 1.0 / static_cast<double>(d)); }

void BM_TsallisDualSolve(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const double beta = 0.5;
  SplitRng rng(1, 0);
  const Vec x1 = uniform_simplex(d);
  Vec l(d);
  for (double& v : l) v = rng.uniform();
  double mu = std::numeric_limits<double>::quiet_NaN();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_tsallis_dual_warm(x1, l, beta, 0.0, &mu));
  }
}
BENCHMARK(BM_TsallisDualSolve)->Arg(4)->Arg(16)->Arg(64);

void BM_TsallisLazyRun(benchmark::State& state) {
  // One full within-task loop: m accumulate-and-resolve rounds.
  const std::size_t d = 16, m = 500;
  const auto reg = Regularizer::tsallis(d, 0.5);
  SplitRng rng(2, 0);
  for (auto _ : state) {
    OmdState omd(reg, uniform_simplex(d), 0.01);
    for (std::size_t i = 0; i < m; ++i) {
      Vec est(d, 0.0);
      est[rng.uniform_int(d)] = rng.uniform() * 10.0;
      benchmark::DoNotOptimize(omd.update(est));
    }
  }
}
BENCHMARK(BM_TsallisLazyRun);

void BM_BarrierNewton(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto sb = Regularizer::sphere_barrier(d);
  SplitRng rng(3, 0);
  const Vec x1(d, 0.0);
  Vec l(d);
  for (double& v : l) v = 0.2 * (2.0 * rng.uniform() - 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_barrier_newton(x1, l, sb));
  }
}
BENCHMARK(BM_BarrierNewton)->Arg(4)->Arg(8)->Arg(16);

void BM_EwooUpdate(benchmark::State& state) {
  MetaConfig cfg;
  cfg.mode = Mode::MabImplicit;
  cfg.d = 16;
  cfg.m = 500;
  cfg.rho = 0.2;
  const Schedule s = hyperparam_schedule(0.5, cfg);
  const double gm = schedule_g(0.5, cfg.d, cfg.mode) * static_cast<double>(cfg.m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ewoo_update(37.5, 100.0 * gm, s));
  }
}
BENCHMARK(BM_EwooUpdate);

void BM_FlowSampling(benchmark::State& state) {
  const FlowGraph g = make_flow_graph(
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, 0, 5);
  Vec flow(g.edges.size(), 0.0);
  const double w = 1.0 / static_cast<double>(g.paths.size());
  for (const Vec& p : g.path_indicators)
    for (std::size_t e = 0; e < flow.size(); ++e) flow[e] += w * p[e];
  SplitRng rng(4, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_path_from_flow(g, flow, rng));
  }
}
BENCHMARK(BM_FlowSampling);

}  // namespace

BENCHMARK_MAIN();
