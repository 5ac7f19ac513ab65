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

#include <iosfwd>
#include <string>

#include "cqad/dynamics.hpp"
#include "cqad/spectroscopy.hpp"

// Plot-data writers. Data columns use full-precision scientific notation so
// identical results give identical bytes.
namespace cqad {

std::string format_number(double value);

/// qubit_frequency_ghz,line_index,transition_frequency_ghz,weight
void write_spectroscopy_csv(std::ostream& out, const SpectroscopySweep& sweep);
/// time_us,p_excited,purity
void write_trace_csv(std::ostream& out, const PopulationTrace& trace);
/// frequency_ghz,time_us,p_excited (long form, frequency-major)
void write_rabi_csv(std::ostream& out, const RabiGrid& grid);
/// {"qubit_frequencies_ghz", "times_us", "envelope_applied", "p_excited" (rows per frequency)}
void write_rabi_json(std::ostream& out, const RabiGrid& grid);

}  // namespace cqad
