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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqad/readout.hpp"

namespace cqad {

/// Flux-tunable transmon. Frequencies in GHz, anharmonicity in MHz, times in us.
struct QubitSpec {
  std::string name;
  double idle_frequency_ghz = 0.0;
  double min_frequency_ghz = 0.0;
  double max_frequency_ghz = 0.0;
  double anharmonicity_mhz = 0.0;
  std::optional<double> t1_us;
  std::optional<double> t2_ramsey_us;

  // Metadata carried for completeness; not used by any simulation.
  std::optional<double> t2_echo_us;
  std::optional<double> readout_resonator_ghz;
  std::optional<double> resonator_linewidth_mhz;
  std::optional<double> dispersive_shift_mhz;
  std::optional<double> readout_fidelity_0_percent;
  std::optional<double> readout_fidelity_1_percent;

  bool operator==(const QubitSpec&) const = default;
};

/// One acoustic mode: frequency w/2pi in GHz, coupling g/2pi in MHz.
struct ModeSpec {
  double frequency_ghz = 0.0;
  double coupling_mhz = 0.0;

  bool operator==(const ModeSpec&) const = default;
};

/// A cluster of near-degenerate modes, in descending frequency order.
///
/// Device files are validated on load (validate_cluster). Simulation code
/// accepts any cluster with at least one mode, which lets tests and the CLI
/// build synthetic degenerate or zero-coupling clusters directly.
struct ClusterSpec {
  std::string name;
  std::string qubit;
  std::vector<ModeSpec> modes;

  std::size_t mode_count() const noexcept { return modes.size(); }
  bool operator==(const ClusterSpec&) const = default;
};

inline constexpr std::size_t kMaxClusterModes = 8;
inline constexpr double kCouplingToFsrWarningRatio = 0.1;

struct DeviceConfig {
  std::string name;
  double fsr_mhz = 0.0;
  std::vector<QubitSpec> qubits;
  std::vector<ClusterSpec> clusters;
  std::map<std::string, ResponseMatrix> response_matrices;
  /// Non-fatal findings from validation (e.g. coupling not << FSR).
  std::vector<std::string> warnings;

  const QubitSpec& qubit(std::string_view name) const;
  /// Throws ValidationError listing the available clusters when absent.
  const ClusterSpec& cluster(std::string_view name) const;
  const ResponseMatrix& response_matrix(std::string_view qubit_name) const;

  bool operator==(const DeviceConfig&) const = default;
};

void validate_qubit(const QubitSpec& qubit);

enum class ModeOrdering {
  kStrictlyDescending,      // device files: distinct modes
  kDescendingOrDegenerate,  // synthetic clusters may repeat a frequency
};

/// Throws ValidationError naming the first failing invariant: 1 <= modes <= 8,
/// frequency > 0, coupling > 0, strictly descending frequencies.
void validate_cluster(const ClusterSpec& cluster,
                      ModeOrdering ordering = ModeOrdering::kStrictlyDescending);
/// Validates everything and fills `warnings`.
void validate_device(DeviceConfig& config);

/// Parses and validates a device document. `source` labels error messages.
DeviceConfig parse_device_config(std::string_view text, std::string_view source = "<memory>");
DeviceConfig load_device_config(const std::filesystem::path& path);
/// Canonical JSON text; parse_device_config(serialize_device_config(c)) == c.
std::string serialize_device_config(const DeviceConfig& config);

/// Adjacent frequency differences in MHz, all positive for a valid cluster.
/// Throws EmptyResultError for a single-mode cluster.
std::vector<double> intra_cluster_spacings(const ClusterSpec& cluster);

}  // namespace cqad
