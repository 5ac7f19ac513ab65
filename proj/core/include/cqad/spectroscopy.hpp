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

#include <cstddef>
#include <vector>

#include "cqad/device.hpp"

namespace cqad {

/// One dressed transition from |g, 0> into the single-excitation manifold.
/// weight = |<dressed|e, 0>|^2, the qubit-excited content of the line.
struct SpectralLine {
  double transition_frequency_ghz = 0.0;
  double weight = 0.0;
};

/// lines[i] holds mode_count + 1 lines for qubit_frequencies_ghz[i], sorted
/// ascending. Branch k is the k-th line at every grid point.
struct SpectroscopySweep {
  std::vector<double> qubit_frequencies_ghz;
  std::vector<std::vector<SpectralLine>> lines;

  std::size_t size() const noexcept { return qubit_frequencies_ghz.size(); }
};

/// Endpoint-inclusive uniform grid. Throws ValidationError unless
/// lo < hi and points >= 2.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// Dressed-line sweep over qubit frequency. Grid points are independent and
/// may run on `threads` workers; the result is identical for any thread count.
SpectroscopySweep sweep_spectrum(const ClusterSpec& cluster, double f_min_ghz, double f_max_ghz,
                                 std::size_t points, unsigned threads = 1);

struct GapEstimate {
  double coupling_mhz = 0.0;             // half the refined minimum gap
  double minimum_gap_mhz = 0.0;          // refined minimum branch separation
  double resonance_frequency_ghz = 0.0;  // refined location of the minimum
  std::size_t grid_index = 0;            // grid point of the sampled minimum
};

/// Coupling from the minimum separation of two branches, g = gap_min / 2.
/// The sampled minimum is refined by a parabola through its two neighbours.
/// Throws ExtractionError when the minimum sits on the grid boundary.
GapEstimate estimate_coupling_from_gap(const SpectroscopySweep& sweep, std::size_t lower_branch,
                                       std::size_t upper_branch);

}  // namespace cqad
