// Copyright 2026 The cqad Authors
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

#include <filesystem>

#include "cqad/device.hpp"
#include "cqad/dynamics.hpp"
#include "cqad/hamiltonian.hpp"
#include "cqad/readout.hpp"
#include "cqad/spectroscopy.hpp"

namespace {

using namespace cqad;

const DeviceConfig& device_b() {
  static const DeviceConfig config =
      load_device_config(std::filesystem::path(CQAD_DATA_DIR) / "devices" / "device_B.json");
  return config;
}

const ClusterSpec& s31() { return device_b().cluster("S3_1"); }

void BM_SectorTrace(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  const double f = bright_mode_frequency(s31());
  for (auto _ : state) benchmark::DoNotOptimize(simulate_trace(s31(), f, 1.0, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SectorTrace)->Arg(201)->Arg(2001);

void BM_FullSpaceEigendecomposition(benchmark::State& state) {
  const HilbertLayout layout = cluster_layout(s31(), 3, static_cast<int>(state.range(0)));
  const Operator h = build_full_hamiltonian(device_b().qubit("QB"), 4.776, s31(), layout);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigendecomposition(h));
  state.SetLabel(std::to_string(layout.dimension()) + "-dim");
}
BENCHMARK(BM_FullSpaceEigendecomposition)->Arg(2)->Arg(3)->Arg(4);

void BM_RabiGrid(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  const double c = default_frame_reference(s31());
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_rabi_grid(s31(), {c - 0.006, c + 0.006, 121}, 1.0, 201,
                                                std::nullopt, threads));
  }
}
BENCHMARK(BM_RabiGrid)->Arg(1)->Arg(4)->UseRealTime();

void BM_SpectroscopySweep(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_spectrum(s31(), 4.768, 4.784, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpectroscopySweep)->Arg(401)->Arg(4001);

void BM_ReadoutCorrection(benchmark::State& state) {
  const ResponseMatrix& m = device_b().response_matrix("QB");
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(correct_constrained(m, ProbabilityVector(x, 1.0 - x)));
    x = x < 0.9 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_ReadoutCorrection);

}  // namespace

BENCHMARK_MAIN();
