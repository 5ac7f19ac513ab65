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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cqad/device.hpp"
#include "cqad/hamiltonian.hpp"
#include "cqad/quantum.hpp"

namespace cqad {

inline constexpr double kCollectiveMaskThreshold = 1e-3;
inline constexpr double kDefaultTraceDurationUs = 1.0;
inline constexpr std::size_t kDefaultTraceSamples = 201;

/// Exact evolution inside the single-excitation sector from one
/// eigendecomposition of the sector Hamiltonian.
class SectorPropagator {
 public:
  explicit SectorPropagator(const SectorHamiltonian& hamiltonian);

  /// Any real t; negative t evolves backwards.
  SectorState evolve(const SectorState& state, double t_us) const;
  /// State at t starting from |e, 0>.
  SectorState evolve_excited(double t_us) const;
  /// p(t) starting from |e, 0>.
  std::complex<double> excited_amplitude(double t_us) const;

  const EigenDecomposition& decomposition() const noexcept { return eig_; }

 private:
  EigenDecomposition eig_;
  Eigen::VectorXd excited_weights_;  // |<k|e,0>|^2 per eigenvector
};

/// P = |p|^4 + (1 - |p|^2)^2 = 2|p|^4 + 1 - 2|p|^2 for a single-excitation
/// state with qubit population |p|^2.
double purity_from_population(double p_excited);

struct PopulationTrace {
  std::vector<double> times_us;
  std::vector<double> p_excited;
  std::vector<double> purity;
  bool envelope_applied = false;
};

/// Trace from |e, 0>. `samples` counts grid points on [0, t_max] inclusive.
/// With t1 the excited population is multiplied by exp(-t/t1) and purity is
/// recomputed from the damped population.
PopulationTrace simulate_trace(const ClusterSpec& cluster, double qubit_frequency_ghz,
                               double t_max_us, std::size_t samples,
                               std::optional<double> t1_us = std::nullopt);

/// Index of the first interior sample lower than its predecessor and not
/// higher than its successor; nullopt when the sequence has none.
std::optional<std::size_t> first_local_minimum(std::span<const double> values);

/// p_excited(frequency row, time column).
struct RabiGrid {
  std::vector<double> qubit_frequencies_ghz;
  std::vector<double> times_us;
  Eigen::MatrixXd p_excited;
  bool envelope_applied = false;
};

struct FrequencyGrid {
  double min_ghz = 0.0;
  double max_ghz = 0.0;
  std::size_t points = 0;
};

/// Rows are independent simulate_trace calls, spread over `threads` workers.
RabiGrid simulate_rabi_grid(const ClusterSpec& cluster, const FrequencyGrid& frequencies,
                            double t_max_us, std::size_t time_samples,
                            std::optional<double> t1_us = std::nullopt, unsigned threads = 1);

/// p_excited(t) / cos^2(sqrt(N) 2pi gbar t). Samples whose denominator is
/// below 1e-3 are masked (nullopt). Throws ValidationError unless gbar > 0.
std::vector<std::optional<double>> normalized_collective_population(const PopulationTrace& trace,
                                                                    std::size_t n_modes,
                                                                    double mean_coupling_mhz);

}  // namespace cqad
