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

#include "cqad/spectroscopy.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <iterator>

#include "cqad/errors.hpp"
#include "cqad/hamiltonian.hpp"
#include "cqad/parallel.hpp"
#include "cqad/quantum.hpp"
#include "cqad/units.hpp"

namespace cqad {

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (!(lo < hi)) throw ValidationError(fmt::format("grid requires lo < hi (got {} >= {})", lo, hi));
  if (points < 2) throw ValidationError(fmt::format("grid requires at least 2 points (got {})", points));
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

SpectroscopySweep sweep_spectrum(const ClusterSpec& cluster, double f_min_ghz, double f_max_ghz,
                                 std::size_t points, unsigned threads) {
  SpectroscopySweep sweep;
  sweep.qubit_frequencies_ghz = uniform_grid(f_min_ghz, f_max_ghz, points);
  sweep.lines.resize(points);
  // One frame for the whole sweep so eigenvalues are comparable across points.
  const double reference = default_frame_reference(cluster);

  parallel_for(points, threads, [&](std::size_t i) {
    const SectorHamiltonian h =
        build_sector_hamiltonian(sweep.qubit_frequencies_ghz[i], cluster, reference);
    const EigenDecomposition eig = hermitian_eigendecomposition(ComplexMatrix(h.matrix.cast<Complex>()));
    std::vector<SpectralLine> lines(eig.dimension());
    for (std::size_t k = 0; k < eig.dimension(); ++k) {
      const auto col = static_cast<Eigen::Index>(k);
      lines[k].transition_frequency_ghz = reference + units::angular_to_ghz(eig.eigenvalues(col));
      lines[k].weight = std::norm(eig.eigenvectors(0, col));
    }
    sweep.lines[i] = std::move(lines);
  });
  return sweep;
}

GapEstimate estimate_coupling_from_gap(const SpectroscopySweep& sweep, std::size_t lower_branch,
                                       std::size_t upper_branch) {
  if (sweep.size() < 3) throw ValidationError("gap extraction requires at least 3 grid points");
  if (!(lower_branch < upper_branch) || upper_branch >= sweep.lines.front().size()) {
    throw ValidationError(fmt::format("branches ({}, {}) invalid for {} lines", lower_branch,
                                      upper_branch, sweep.lines.front().size()));
  }

  std::vector<double> gap_mhz(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    gap_mhz[i] = units::ghz_to_mhz(sweep.lines[i][upper_branch].transition_frequency_ghz -
                                   sweep.lines[i][lower_branch].transition_frequency_ghz);
  }
  const auto at = std::min_element(gap_mhz.begin(), gap_mhz.end());
  const auto i = static_cast<std::size_t>(std::distance(gap_mhz.begin(), at));
  if (i == 0 || i + 1 == gap_mhz.size()) {
    throw ExtractionError(fmt::format(
        "minimum separation of branches ({}, {}) lies on the grid boundary at {} GHz; "
        "widen the sweep", lower_branch, upper_branch, sweep.qubit_frequencies_ghz[i]));
  }

  const double s_minus = gap_mhz[i - 1];
  const double s_zero = gap_mhz[i];
  const double s_plus = gap_mhz[i + 1];
  const double curvature = s_minus - 2.0 * s_zero + s_plus;
  double offset = 0.0;  // in units of the grid step, within [-1/2, 1/2]
  if (curvature > 0.0) offset = 0.5 * (s_minus - s_plus) / curvature;
  const double step = 0.5 * (sweep.qubit_frequencies_ghz[i + 1] - sweep.qubit_frequencies_ghz[i - 1]);

  GapEstimate estimate;
  estimate.grid_index = i;
  estimate.minimum_gap_mhz = s_zero - 0.25 * (s_minus - s_plus) * offset;
  estimate.resonance_frequency_ghz = sweep.qubit_frequencies_ghz[i] + offset * step;
  estimate.coupling_mhz = 0.5 * estimate.minimum_gap_mhz;
  return estimate;
}

}  // namespace cqad
