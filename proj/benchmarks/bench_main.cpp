// Copyright 2026 The cnotsim Authors
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

#include "cnotsim/optimize.hpp"
#include "cnotsim/propagate.hpp"
#include "cnotsim/pulse.hpp"

namespace cnotsim {
namespace {

CouplingTensor heisenberg_15ns() {
  return {g_for_gate_time(15e-9, Frequency::mhz(430), 1.0, 0.0), canonical_form("heisenberg")};
}

void BM_ExpmHermitian4(benchmark::State& state) {
  const Op4 h = coupling_operator(heisenberg_15ns()) +
                free_hamiltonian({Frequency::ghz(10), Frequency::ghz(11)});
  for (auto _ : state) benchmark::DoNotOptimize(expm_hermitian_generator(h, 1e-12));
}
BENCHMARK(BM_ExpmHermitian4);

void BM_ExpmSuperop(benchmark::State& state) {
  const Superop l = lindblad_generator(coupling_operator(heisenberg_15ns()), 2e6);
  for (auto _ : state) benchmark::DoNotOptimize(expm_general(l, 1e-10));
}
BENCHMARK(BM_ExpmSuperop);

void BM_RealizeGate(benchmark::State& state) {
  const DeviceParams d;
  const CouplingTensor c = heisenberg_15ns();
  const PulseSchedule sched = compile_cnot_schedule(c, Frequency::mhz(430), d);
  const double step = StepControl{}.initial_step(d) / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize_gate(sched, c, d, step));
}
BENCHMARK(BM_RealizeGate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_OptimizePoint(benchmark::State& state) {
  SweepConfig cfg;
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_point(canonical_form("heisenberg"), 15e-9, cfg));
  }
}
BENCHMARK(BM_OptimizePoint)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
}  // namespace cnotsim

BENCHMARK_MAIN();
