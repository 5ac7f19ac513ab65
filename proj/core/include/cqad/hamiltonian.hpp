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
#include <vector>

#include "cqad/device.hpp"
#include "cqad/layout.hpp"
#include "cqad/quantum.hpp"

namespace cqad {

/// Single-excitation block of the cluster Hamiltonian in rad/us.
///
/// Basis order is [|e, 0>, |g, 1_1>, ..., |g, 1_N>]. The diagonal holds the
/// qubit and mode frequencies minus `frame_reference_ghz`; row/column 0 holds
/// the couplings 2pi g_n. The anharmonic term vanishes on every state of this
/// sector and is therefore absent.
struct SectorHamiltonian {
  Eigen::MatrixXd matrix;
  double qubit_frequency_ghz = 0.0;
  double frame_reference_ghz = 0.0;
  ClusterSpec cluster;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

/// Amplitudes of the single-excitation state p |e,0> + sum_n theta_n |g,1_n>.
struct SectorState {
  std::complex<double> p;
  std::vector<std::complex<double>> theta;

  /// |e, 0> for a cluster of n_modes.
  static SectorState excited_qubit(std::size_t n_modes);

  double norm_squared() const;
  ComplexVector to_vector() const;
  static SectorState from_vector(const ComplexVector& v);
};

/// Mean mode frequency; the default rotating-frame reference.
double default_frame_reference(const ClusterSpec& cluster);

/// sum g_n^2 w_n / sum g_n^2: frequency of the collective bright mode, used as
/// the hybridization center of a cluster. Falls back to the mean frequency
/// when every coupling is zero.
double bright_mode_frequency(const ClusterSpec& cluster);

/// Layout with the qubit first and one factor per cluster mode.
HilbertLayout cluster_layout(const ClusterSpec& cluster, int qubit_levels = 2, int cutoff = 2);

/// Truncated-Fock-space Hamiltonian of one cluster, rotating-wave coupling:
///
///   H = dq a^dag a + (alpha/2) a^dag a^dag a a + sum_n dn f_n^dag f_n
///       + sum_n g_n (f_n^dag a + f_n a^dag)
///
/// with dq, dn the qubit and mode frequencies minus the frame reference. The
/// anharmonic term only contributes when qubit_levels >= 3. Throws
/// StructuralError when the layout does not have one factor per mode.
Operator build_full_hamiltonian(const QubitSpec& qubit, double qubit_frequency_ghz,
                                const ClusterSpec& cluster, const HilbertLayout& layout,
                                std::optional<double> frame_reference_ghz = std::nullopt);

SectorHamiltonian build_sector_hamiltonian(double qubit_frequency_ghz, const ClusterSpec& cluster,
                                           std::optional<double> frame_reference_ghz = std::nullopt);

/// a^dag a + sum_n f_n^dag f_n.
Operator excitation_number_operator(const HilbertLayout& layout);

/// Full-space indices of the sector basis [|e,0>, |g,1_1>, ..., |g,1_N>].
std::vector<std::size_t> sector_basis_indices(const HilbertLayout& layout);

/// Rows/columns of `h` restricted to the sector basis.
ComplexMatrix single_excitation_block(const Operator& h);

Ket embed_sector_state(const SectorState& state, const HilbertLayout& layout);

}  // namespace cqad
