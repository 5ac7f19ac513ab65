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

#include <numbers>

// Internal units are angular frequency in rad/us and time in us. Files and
// reports carry linear frequencies (GHz for mode/qubit frequencies, MHz for
// couplings and spacings).
namespace cqad::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double ghz_to_angular(double f_ghz) { return kTwoPi * f_ghz * 1.0e3; }
constexpr double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz; }
constexpr double angular_to_ghz(double w) { return w / (kTwoPi * 1.0e3); }
constexpr double angular_to_mhz(double w) { return w / kTwoPi; }

constexpr double ghz_to_mhz(double f_ghz) { return f_ghz * 1.0e3; }
constexpr double mhz_to_ghz(double f_mhz) { return f_mhz * 1.0e-3; }

}  // namespace cqad::units
