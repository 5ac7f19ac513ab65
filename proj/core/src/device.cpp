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

#include "cqad/device.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "cqad/errors.hpp"
#include "json.hpp"

namespace cqad {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kFormatName = "cqad-device";
constexpr int kFormatVersion = 1;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ParseError(fmt::format("{}: {}: {}", source_, path, what));
  }

  void expect_object(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
  }

  void only_keys(const json& j, const std::string& path,
                 std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(path, fmt::format("unknown key '{}'", key));
      }
    }
  }

  const json& required(const json& j, const std::string& path, const char* key) const {
    const auto it = j.find(key);
    if (it == j.end()) fail(path, fmt::format("missing required key '{}'", key));
    return *it;
  }

  double number(const json& j, const std::string& path, const char* key) const {
    const json& v = required(j, path, key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(const json& j, const std::string& path,
                                        const char* key) const {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) fail(path + "." + key, "expected a number");
    return it->get<double>();
  }

  std::string string(const json& j, const std::string& path, const char* key) const {
    const json& v = required(j, path, key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
  }

  const json& array(const json& j, const std::string& path, const char* key) const {
    const json& v = required(j, path, key);
    if (!v.is_array()) fail(path + "." + key, "expected an array");
    return v;
  }

 private:
  std::string source_;
};

QubitSpec read_qubit(const Reader& r, const json& j, const std::string& path) {
  r.expect_object(j, path);
  r.only_keys(j, path,
              {"name", "idle_frequency_ghz", "min_frequency_ghz", "max_frequency_ghz",
               "anharmonicity_mhz", "t1_us", "t2_ramsey_us", "t2_echo_us",
               "readout_resonator_ghz", "resonator_linewidth_mhz", "dispersive_shift_mhz",
               "readout_fidelity_0_percent", "readout_fidelity_1_percent"});
  QubitSpec q;
  q.name = r.string(j, path, "name");
  q.idle_frequency_ghz = r.number(j, path, "idle_frequency_ghz");
  q.min_frequency_ghz = r.number(j, path, "min_frequency_ghz");
  q.max_frequency_ghz = r.number(j, path, "max_frequency_ghz");
  q.anharmonicity_mhz = r.number(j, path, "anharmonicity_mhz");
  q.t1_us = r.optional_number(j, path, "t1_us");
  q.t2_ramsey_us = r.optional_number(j, path, "t2_ramsey_us");
  q.t2_echo_us = r.optional_number(j, path, "t2_echo_us");
  q.readout_resonator_ghz = r.optional_number(j, path, "readout_resonator_ghz");
  q.resonator_linewidth_mhz = r.optional_number(j, path, "resonator_linewidth_mhz");
  q.dispersive_shift_mhz = r.optional_number(j, path, "dispersive_shift_mhz");
  q.readout_fidelity_0_percent = r.optional_number(j, path, "readout_fidelity_0_percent");
  q.readout_fidelity_1_percent = r.optional_number(j, path, "readout_fidelity_1_percent");
  return q;
}

ClusterSpec read_cluster(const Reader& r, const json& j, const std::string& path) {
  r.expect_object(j, path);
  r.only_keys(j, path, {"name", "qubit", "modes"});
  ClusterSpec c;
  c.name = r.string(j, path, "name");
  c.qubit = r.string(j, path, "qubit");
  const json& modes = r.array(j, path, "modes");
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string mpath = fmt::format("{}.modes[{}]", path, i);
    r.expect_object(modes[i], mpath);
    r.only_keys(modes[i], mpath, {"frequency_ghz", "coupling_mhz"});
    c.modes.push_back(ModeSpec{r.number(modes[i], mpath, "frequency_ghz"),
                               r.number(modes[i], mpath, "coupling_mhz")});
  }
  return c;
}

ResponseMatrix read_response(const Reader& r, const json& j, const std::string& path) {
  // Rows are outcomes, columns prepared states: [[p(0|0), p(0|1)], [p(1|0), p(1|1)]].
  if (!j.is_array() || j.size() != 2) r.fail(path, "expected a 2x2 array of rows");
  Eigen::Matrix2d m;
  for (int row = 0; row < 2; ++row) {
    const json& rj = j[static_cast<std::size_t>(row)];
    if (!rj.is_array() || rj.size() != 2) {
      r.fail(fmt::format("{}[{}]", path, row), "expected a row of 2 numbers");
    }
    for (int col = 0; col < 2; ++col) {
      const json& v = rj[static_cast<std::size_t>(col)];
      if (!v.is_number()) r.fail(fmt::format("{}[{}][{}]", path, row, col), "expected a number");
      m(row, col) = v.get<double>();
    }
  }
  try {
    return ResponseMatrix(m);
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path, e.what()));
  }
}

template <typename T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

const QubitSpec& DeviceConfig::qubit(std::string_view qubit_name) const {
  for (const auto& q : qubits) {
    if (q.name == qubit_name) return q;
  }
  std::vector<std::string> names;
  for (const auto& q : qubits) names.push_back(q.name);
  throw ValidationError(fmt::format("unknown qubit '{}'; available: {}", qubit_name,
                                    fmt::join(names, ", ")));
}

const ClusterSpec& DeviceConfig::cluster(std::string_view cluster_name) const {
  for (const auto& c : clusters) {
    if (c.name == cluster_name) return c;
  }
  std::vector<std::string> names;
  for (const auto& c : clusters) names.push_back(c.name);
  throw ValidationError(fmt::format("unknown cluster '{}'; available: {}", cluster_name,
                                    fmt::join(names, ", ")));
}

const ResponseMatrix& DeviceConfig::response_matrix(std::string_view qubit_name) const {
  const auto it = response_matrices.find(std::string(qubit_name));
  if (it == response_matrices.end()) {
    throw ValidationError(fmt::format("no response matrix for qubit '{}'", qubit_name));
  }
  return it->second;
}

void validate_qubit(const QubitSpec& q) {
  const auto fail = [&](std::string_view what) {
    throw ValidationError(fmt::format("qubit '{}': {} violated", q.name, what));
  };
  if (q.name.empty()) fail("non-empty name");
  if (!(q.min_frequency_ghz < q.idle_frequency_ghz)) fail("min_frequency < idle_frequency");
  if (!(q.idle_frequency_ghz < q.max_frequency_ghz)) fail("idle_frequency < max_frequency");
  if (!(q.anharmonicity_mhz < 0.0)) fail("anharmonicity < 0");
  if (q.t1_us && !(*q.t1_us > 0.0)) fail("t1 > 0");
  if (q.t2_ramsey_us && !(*q.t2_ramsey_us > 0.0)) fail("t2_ramsey > 0");
}

void validate_cluster(const ClusterSpec& c, ModeOrdering ordering) {
  const auto fail = [&](const std::string& what) {
    throw ValidationError(fmt::format("cluster '{}': {} violated", c.name, what));
  };
  if (c.name.empty()) fail("non-empty name");
  if (c.modes.empty() || c.modes.size() > kMaxClusterModes) {
    fail(fmt::format("1 <= mode count <= {} (got {})", kMaxClusterModes, c.modes.size()));
  }
  for (std::size_t i = 0; i < c.modes.size(); ++i) {
    const ModeSpec& m = c.modes[i];
    if (!std::isfinite(m.frequency_ghz) || !(m.frequency_ghz > 0.0)) {
      fail(fmt::format("mode {}: frequency > 0 (got {})", i, m.frequency_ghz));
    }
    if (!std::isfinite(m.coupling_mhz) || !(m.coupling_mhz > 0.0)) {
      fail(fmt::format("mode {}: coupling > 0 (got {})", i, m.coupling_mhz));
    }
  }
  for (std::size_t i = 0; i + 1 < c.modes.size(); ++i) {
    const double upper = c.modes[i].frequency_ghz;
    const double lower = c.modes[i + 1].frequency_ghz;
    if (ordering == ModeOrdering::kStrictlyDescending && !(upper > lower)) {
      fail(fmt::format("modes {}-{}: spacing > 0 (descending frequency order)", i, i + 1));
    }
    if (ordering == ModeOrdering::kDescendingOrDegenerate && !(upper >= lower)) {
      fail(fmt::format("modes {}-{}: spacing >= 0 (non-increasing frequency order)", i, i + 1));
    }
  }
}

void validate_device(DeviceConfig& config) {
  config.warnings.clear();
  if (!(config.fsr_mhz > 0.0)) {
    throw ValidationError(fmt::format("device: fsr > 0 violated (got {})", config.fsr_mhz));
  }
  std::set<std::string> qubit_names;
  for (const auto& q : config.qubits) {
    validate_qubit(q);
    if (!qubit_names.insert(q.name).second) {
      throw ValidationError(fmt::format("qubit '{}': unique name violated", q.name));
    }
  }
  std::set<std::string> cluster_names;
  for (const auto& c : config.clusters) {
    validate_cluster(c);
    if (!cluster_names.insert(c.name).second) {
      throw ValidationError(fmt::format("cluster '{}': unique name violated", c.name));
    }
    if (!qubit_names.contains(c.qubit)) {
      throw ValidationError(
          fmt::format("cluster '{}': references existing qubit violated ('{}')", c.name, c.qubit));
    }
    double max_coupling = 0.0;
    for (const auto& m : c.modes) max_coupling = std::max(max_coupling, m.coupling_mhz);
    const double ratio = max_coupling / config.fsr_mhz;
    if (ratio > kCouplingToFsrWarningRatio) {
      config.warnings.push_back(fmt::format(
          "cluster '{}': max coupling / fsr = {:.3f} exceeds {} (clusters not well separated)",
          c.name, ratio, kCouplingToFsrWarningRatio));
    }
  }
  for (const auto& [qubit_name, m] : config.response_matrices) {
    if (!qubit_names.contains(qubit_name)) {
      throw ValidationError(
          fmt::format("response matrix '{}': references existing qubit violated", qubit_name));
    }
  }
}

DeviceConfig parse_device_config(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.what() already carries "at line L, column C"; byte is the raw offset.
    throw ParseError(fmt::format("{}: byte {}: {}", source, e.byte, e.what()));
  }

  const Reader r(source);
  r.expect_object(doc, "$");
  r.only_keys(doc, "$",
              {"format", "version", "name", "fsr_mhz", "qubits", "clusters", "response_matrices"});
  if (r.string(doc, "$", "format") != kFormatName) {
    r.fail("$.format", fmt::format("expected '{}'", kFormatName));
  }
  if (r.number(doc, "$", "version") != kFormatVersion) {
    r.fail("$.version", fmt::format("unsupported version (expected {})", kFormatVersion));
  }

  DeviceConfig config;
  config.name = r.string(doc, "$", "name");
  config.fsr_mhz = r.number(doc, "$", "fsr_mhz");

  const json& qubits = r.array(doc, "$", "qubits");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    config.qubits.push_back(read_qubit(r, qubits[i], fmt::format("$.qubits[{}]", i)));
  }
  const json& clusters = r.array(doc, "$", "clusters");
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    config.clusters.push_back(read_cluster(r, clusters[i], fmt::format("$.clusters[{}]", i)));
  }
  if (const auto it = doc.find("response_matrices"); it != doc.end()) {
    r.expect_object(*it, "$.response_matrices");
    for (const auto& [qubit_name, value] : it->items()) {
      config.response_matrices.emplace(
          qubit_name, read_response(r, value, fmt::format("$.response_matrices.{}", qubit_name)));
    }
  }

  validate_device(config);
  return config;
}

DeviceConfig load_device_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_device_config(buffer.str(), path.string());
}

std::string serialize_device_config(const DeviceConfig& config) {
  ordered_json doc;
  doc["format"] = kFormatName;
  doc["version"] = kFormatVersion;
  doc["name"] = config.name;
  doc["fsr_mhz"] = config.fsr_mhz;

  doc["qubits"] = ordered_json::array();
  for (const auto& q : config.qubits) {
    ordered_json j;
    j["name"] = q.name;
    j["idle_frequency_ghz"] = q.idle_frequency_ghz;
    j["min_frequency_ghz"] = q.min_frequency_ghz;
    j["max_frequency_ghz"] = q.max_frequency_ghz;
    j["anharmonicity_mhz"] = q.anharmonicity_mhz;
    put_optional(j, "t1_us", q.t1_us);
    put_optional(j, "t2_ramsey_us", q.t2_ramsey_us);
    put_optional(j, "t2_echo_us", q.t2_echo_us);
    put_optional(j, "readout_resonator_ghz", q.readout_resonator_ghz);
    put_optional(j, "resonator_linewidth_mhz", q.resonator_linewidth_mhz);
    put_optional(j, "dispersive_shift_mhz", q.dispersive_shift_mhz);
    put_optional(j, "readout_fidelity_0_percent", q.readout_fidelity_0_percent);
    put_optional(j, "readout_fidelity_1_percent", q.readout_fidelity_1_percent);
    doc["qubits"].push_back(std::move(j));
  }

  doc["clusters"] = ordered_json::array();
  for (const auto& c : config.clusters) {
    ordered_json j;
    j["name"] = c.name;
    j["qubit"] = c.qubit;
    j["modes"] = ordered_json::array();
    for (const auto& m : c.modes) {
      ordered_json mj;
      mj["frequency_ghz"] = m.frequency_ghz;
      mj["coupling_mhz"] = m.coupling_mhz;
      j["modes"].push_back(std::move(mj));
    }
    doc["clusters"].push_back(std::move(j));
  }

  if (!config.response_matrices.empty()) {
    ordered_json rm = ordered_json::object();
    for (const auto& [qubit_name, m] : config.response_matrices) {
      const Eigen::Matrix2d& e = m.entries();
      rm[qubit_name] = {{e(0, 0), e(0, 1)}, {e(1, 0), e(1, 1)}};
    }
    doc["response_matrices"] = std::move(rm);
  }
  return doc.dump(2) + "\n";
}

std::vector<double> intra_cluster_spacings(const ClusterSpec& cluster) {
  if (cluster.modes.size() < 2) {
    throw EmptyResultError(fmt::format(
        "cluster '{}': intra-cluster spacings need at least 2 modes", cluster.name));
  }
  std::vector<double> out;
  out.reserve(cluster.modes.size() - 1);
  for (std::size_t i = 0; i + 1 < cluster.modes.size(); ++i) {
    out.push_back((cluster.modes[i].frequency_ghz - cluster.modes[i + 1].frequency_ghz) * 1.0e3);
  }
  return out;
}

}  // namespace cqad
