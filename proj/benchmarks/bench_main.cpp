// Copyright 2026 The dronecell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dronecell/association.hpp"
#include "dronecell/channel.hpp"
#include "dronecell/experiment.hpp"
#include "dronecell/metrics.hpp"

namespace {

dronecell::DeploymentSpec reference_spec() {
  dronecell::DeploymentSpec spec;
  spec.env = {12.08, 0.11, 1.6, 23.0};
  return spec;
}

void BM_AtgPathloss(benchmark::State& state) {
  const dronecell::Environment env{12.08, 0.11, 1.6, 23.0};
  const dronecell::RadioConfig radio;
  double r = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dronecell::atg_pathloss_db(150.0, r, env, radio));
    r += 0.37;
    if (r > 2000.0) {
      r = 1.0;
    }
  }
}
BENCHMARK(BM_AtgPathloss);

void BM_BuildDeployment(benchmark::State& state) {
  const dronecell::DeploymentSpec spec = reference_spec();
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dronecell::build_deployment(spec, 1, trial++));
  }
}
BENCHMARK(BM_BuildDeployment);

void BM_Associate(benchmark::State& state) {
  const dronecell::DeploymentSpec spec = reference_spec();
  for (auto _ : state) {
    state.PauseTiming();
    dronecell::Deployment deployment =
        dronecell::build_deployment(spec, 1, state.iterations());
    state.ResumeTiming();
    benchmark::DoNotOptimize(
        dronecell::associate(deployment, spec.env, spec.radio));
  }
}
BENCHMARK(BM_Associate);

void BM_RunTrial(benchmark::State& state) {
  const dronecell::DeploymentSpec spec = reference_spec();
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dronecell::run_trial(spec, 1, trial++));
  }
}
BENCHMARK(BM_RunTrial);

void BM_SweepPoint(benchmark::State& state) {
  const dronecell::DeploymentSpec spec = reference_spec();
  const std::size_t trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dronecell::sweep_small_fraction(spec, {0.5}, trials, 1));
  }
}
BENCHMARK(BM_SweepPoint)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
