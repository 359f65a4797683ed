#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sprite/kinematics/forward.hpp"
#include "sprite/kinematics/kernels.hpp"
#include "sprite/kinematics/workspace.hpp"

using namespace sprite::kinematics;

namespace {

std::vector<Pose6> poses(std::size_t n) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> t(-0.05, 0.05), a(-0.6, 0.6);
  std::vector<Pose6> out(n);
  for (auto& p : out) p = {t(rng), t(rng), t(rng), a(rng), a(rng), a(rng)};
  return out;
}

void BM_IkBatch(benchmark::State& state, Execution exec) {
  const auto geom = sprite_default_geometry();
  const auto in = poses(static_cast<std::size_t>(state.range(0)));
  std::vector<IkSolution> out(in.size());
  for (auto _ : state) {
    solve_ik_batch(in, geom, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Reachability(benchmark::State& state, Execution exec) {
  const auto geom = sprite_default_geometry();
  const auto in = poses(static_cast<std::size_t>(state.range(0)));
  std::vector<std::uint8_t> out(in.size());
  for (auto _ : state) {
    reachability_mask(in, geom, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Workspace(benchmark::State& state, Execution exec) {
  const auto geom = sprite_default_geometry();
  for (auto _ : state) {
    auto r = sample_workspace(geom, {0.002, deg2rad(1.0)}, {}, exec);
    benchmark::DoNotOptimize(r.samplesTested);
  }
}

void BM_ForwardFromHome(benchmark::State& state) {
  const auto geom = sprite_default_geometry();
  std::vector<ServoAngles> targets;
  for (const auto& p : poses(256)) {
    const auto ik = solve_ik(p, geom);
    if (ik.ok()) targets.push_back(ik.angles);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto r = solve_fk(targets[i++ % targets.size()], geom);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_IkBatch, serial, Execution::Serial)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_IkBatch, parallel, Execution::Parallel)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Reachability, serial, Execution::Serial)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Reachability, parallel, Execution::Parallel)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Workspace, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Workspace, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForwardFromHome);

BENCHMARK_MAIN();
