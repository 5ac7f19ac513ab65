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

#include "cqad/export.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <ostream>

#include "json.hpp"

namespace cqad {

std::string format_number(double value) { return fmt::format("{:.17e}", value); }

void write_spectroscopy_csv(std::ostream& out, const SpectroscopySweep& sweep) {
  out << "qubit_frequency_ghz,line_index,transition_frequency_ghz,weight\n";
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    for (std::size_t k = 0; k < sweep.lines[i].size(); ++k) {
      const SpectralLine& line = sweep.lines[i][k];
      out << format_number(sweep.qubit_frequencies_ghz[i]) << ',' << k << ','
          << format_number(line.transition_frequency_ghz) << ',' << format_number(line.weight)
          << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, const PopulationTrace& trace) {
  out << "time_us,p_excited,purity\n";
  for (std::size_t i = 0; i < trace.times_us.size(); ++i) {
    out << format_number(trace.times_us[i]) << ',' << format_number(trace.p_excited[i]) << ','
        << format_number(trace.purity[i]) << '\n';
  }
}

void write_rabi_csv(std::ostream& out, const RabiGrid& grid) {
  out << "frequency_ghz,time_us,p_excited\n";
  for (std::size_t r = 0; r < grid.qubit_frequencies_ghz.size(); ++r) {
    for (std::size_t c = 0; c < grid.times_us.size(); ++c) {
      out << format_number(grid.qubit_frequencies_ghz[r]) << ',' << format_number(grid.times_us[c])
          << ','
          << format_number(grid.p_excited(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)))
          << '\n';
    }
  }
}

void write_rabi_json(std::ostream& out, const RabiGrid& grid) {
  nlohmann::ordered_json doc;
  doc["qubit_frequencies_ghz"] = grid.qubit_frequencies_ghz;
  doc["times_us"] = grid.times_us;
  doc["envelope_applied"] = grid.envelope_applied;
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < grid.p_excited.rows(); ++r) {
    std::vector<double> row(grid.p_excited.cols());
    for (Eigen::Index c = 0; c < grid.p_excited.cols(); ++c) row[static_cast<std::size_t>(c)] = grid.p_excited(r, c);
    rows.push_back(row);
  }
  doc["p_excited"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace cqad
