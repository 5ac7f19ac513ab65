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

#include "cqad/dynamics.hpp"

#include <fmt/format.h>

#include <cmath>

#include "cqad/errors.hpp"
#include "cqad/parallel.hpp"
#include "cqad/spectroscopy.hpp"
#include "cqad/units.hpp"

namespace cqad {

SectorPropagator::SectorPropagator(const SectorHamiltonian& hamiltonian)
    : eig_(hermitian_eigendecomposition(ComplexMatrix(hamiltonian.matrix.cast<Complex>()))),
      excited_weights_(eig_.eigenvectors.row(0).cwiseAbs2().transpose()) {}

SectorState SectorPropagator::evolve(const SectorState& state, double t_us) const {
  return SectorState::from_vector(cqad::evolve(state.to_vector(), eig_, t_us));
}

SectorState SectorPropagator::evolve_excited(double t_us) const {
  return evolve(SectorState::excited_qubit(eig_.dimension() - 1), t_us);
}

std::complex<double> SectorPropagator::excited_amplitude(double t_us) const {
  if (t_us == 0.0) return {1.0, 0.0};
  // <e,0| V e^{-i Lambda t} V^dagger |e,0> = sum_k |V_0k|^2 e^{-i lambda_k t}
  Complex sum{0.0, 0.0};
  for (Eigen::Index k = 0; k < eig_.eigenvalues.size(); ++k) {
    sum += excited_weights_(k) * std::polar(1.0, -eig_.eigenvalues(k) * t_us);
  }
  return sum;
}

double purity_from_population(double p_excited) {
  return 2.0 * p_excited * p_excited + 1.0 - 2.0 * p_excited;
}

namespace {

void require_t1(std::optional<double> t1_us) {
  if (t1_us && !(*t1_us > 0.0)) {
    throw ValidationError(fmt::format("t1 > 0 violated (got {} us)", *t1_us));
  }
}

}  // namespace

PopulationTrace simulate_trace(const ClusterSpec& cluster, double qubit_frequency_ghz,
                               double t_max_us, std::size_t samples, std::optional<double> t1_us) {
  require_t1(t1_us);
  PopulationTrace trace;
  trace.times_us = uniform_grid(0.0, t_max_us, samples);
  trace.p_excited.resize(samples);
  trace.purity.resize(samples);
  trace.envelope_applied = t1_us.has_value();

  const SectorPropagator propagator(build_sector_hamiltonian(qubit_frequency_ghz, cluster));
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = trace.times_us[i];
    double p = std::norm(propagator.excited_amplitude(t));
    if (t1_us) p *= std::exp(-t / *t1_us);
    trace.p_excited[i] = p;
    trace.purity[i] = purity_from_population(p);
  }
  return trace;
}

std::optional<std::size_t> first_local_minimum(std::span<const double> values) {
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] < values[i - 1] && values[i] <= values[i + 1]) return i;
  }
  return std::nullopt;
}

RabiGrid simulate_rabi_grid(const ClusterSpec& cluster, const FrequencyGrid& frequencies,
                            double t_max_us, std::size_t time_samples,
                            std::optional<double> t1_us, unsigned threads) {
  require_t1(t1_us);
  RabiGrid grid;
  grid.qubit_frequencies_ghz = uniform_grid(frequencies.min_ghz, frequencies.max_ghz, frequencies.points);
  grid.times_us = uniform_grid(0.0, t_max_us, time_samples);
  grid.envelope_applied = t1_us.has_value();
  grid.p_excited.resize(static_cast<Eigen::Index>(frequencies.points),
                        static_cast<Eigen::Index>(time_samples));

  parallel_for(frequencies.points, threads, [&](std::size_t row) {
    const PopulationTrace trace =
        simulate_trace(cluster, grid.qubit_frequencies_ghz[row], t_max_us, time_samples, t1_us);
    for (std::size_t col = 0; col < time_samples; ++col) {
      grid.p_excited(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          trace.p_excited[col];
    }
  });
  return grid;
}

std::vector<std::optional<double>> normalized_collective_population(const PopulationTrace& trace,
                                                                    std::size_t n_modes,
                                                                    double mean_coupling_mhz) {
  if (!(mean_coupling_mhz > 0.0)) {
    throw ValidationError(fmt::format("mean coupling > 0 violated (got {} MHz)", mean_coupling_mhz));
  }
  if (n_modes == 0) throw ValidationError("mode count >= 1 violated");
  const double omega = std::sqrt(static_cast<double>(n_modes)) * units::mhz_to_angular(mean_coupling_mhz);
  std::vector<std::optional<double>> ratio(trace.times_us.size());
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    const double c = std::cos(omega * trace.times_us[i]);
    const double denominator = c * c;
    if (denominator >= kCollectiveMaskThreshold) ratio[i] = trace.p_excited[i] / denominator;
  }
  return ratio;
}

}  // namespace cqad
