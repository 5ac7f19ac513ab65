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

#include <complex>
#include <cstddef>
#include <vector>

#include "cqad/device.hpp"

// Closed-form collective quantities of a qubit coupled to one cluster.
// Couplings and spacings are linear frequencies (MHz), times in us; every
// formula converts to angular frequency internally.
namespace cqad {

struct CollectiveCouplings {
  double g_eff_mhz = 0.0;  // sqrt(sum g_n^2)
  double g_bar_mhz = 0.0;  // sum g_n / N
  std::size_t n_modes = 0;
};

CollectiveCouplings collective_couplings(const ClusterSpec& cluster);

/// sum_n (g_n e^{i Delta_n t} / g_eff) |1_n>, Delta_n = w_n - w_qubit.
struct TimedDickeState {
  std::vector<std::complex<double>> amplitudes;
  std::vector<double> detunings_rad_per_us;
  double time_us = 0.0;

  double norm_squared() const;
};

/// Throws ValidationError when every coupling is zero.
TimedDickeState timed_dicke_state(const ClusterSpec& cluster, double qubit_frequency_ghz,
                                  double t_us);

/// |<D_static|D(t)>|^2 = |sum g_n^2 e^{i Delta_n t}|^2 / G^2 by direct
/// summation; no symmetry assumed.
double fidelity_exact(const ClusterSpec& cluster, double qubit_frequency_ghz, double t_us);

/// Equal couplings and equal spacing:
/// (1/N^2) (1 - cos N eta) / (1 - cos eta), eta = 2pi spacing t, evaluated in
/// the sin^2 form; returns the limit 1 when eta is a multiple of 2pi.
double fidelity_closed_form(std::size_t n_modes, double spacing_mhz, double t_us);

/// Second-order expansion 1 + (1 - N^2) eta^2 / 12.
double fidelity_series(std::size_t n_modes, double spacing_mhz, double t_us);

/// Timed-Dicke transition time from the second-order expansion:
/// (1/delta) 2 sqrt(3 - 3 F0) / sqrt(N^2 - 1), delta = 2pi spacing.
double tau_timed(std::size_t n_modes, double spacing_mhz, double fidelity_floor);

/// First time fidelity_closed_form drops to the floor (numeric root).
double tau_timed_numeric(std::size_t n_modes, double spacing_mhz, double fidelity_floor);

/// First time fidelity_exact drops to the floor for an arbitrary cluster.
/// Throws ExtractionError if it never does (e.g. degenerate modes).
double tau_timed_numeric(const ClusterSpec& cluster, double fidelity_floor);

/// cos^2(sqrt(N) 2pi gbar t).
double static_dicke_population(std::size_t n_modes, double mean_coupling_mhz, double t_us);

/// (3 + cos(4 2pi g_eff t)) / 4.
double purity_analytic(double g_eff_mhz, double t_us);

enum class PurityTimeConvention {
  kEffectiveCoupling,  // pi / (4 g_eff), the default
  kMeanCoupling,       // pi / (4 sqrt(N) gbar)
};

double tau_min_purity(const CollectiveCouplings& couplings,
                      PurityTimeConvention convention = PurityTimeConvention::kEffectiveCoupling);

}  // namespace cqad
