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

#include "cqad/dicke.hpp"

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "cqad/errors.hpp"
#include "cqad/units.hpp"

namespace cqad {

namespace {

void require_floor(double floor) {
  if (!(floor > 0.0 && floor < 1.0)) {
    throw ValidationError(fmt::format("0 < fidelity floor < 1 violated (got {})", floor));
  }
}

void require_modes(std::size_t n_modes) {
  if (n_modes == 0) throw ValidationError("mode count >= 1 violated");
}

double root_midpoint(const std::pair<double, double>& bracket) {
  return 0.5 * (bracket.first + bracket.second);
}

template <typename F>
double bracketed_root(F&& f, double lo, double hi) {
  std::uintmax_t iterations = 200;
  return root_midpoint(
      boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50),
                                        iterations));
}

// sum g_n^2 e^{i w_n t} relative to the first mode; the common phase drops out of |.|^2.
double fidelity_from_weights(const std::vector<double>& weights, const std::vector<double>& omegas,
                             double total, double t_us) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t n = 0; n < weights.size(); ++n) sum += weights[n] * std::polar(1.0, omegas[n] * t_us);
  return std::norm(sum) / (total * total);
}

}  // namespace

CollectiveCouplings collective_couplings(const ClusterSpec& cluster) {
  CollectiveCouplings c;
  c.n_modes = cluster.mode_count();
  if (c.n_modes == 0) return c;
  double squares = 0.0;
  double sum = 0.0;
  for (const auto& m : cluster.modes) {
    squares += m.coupling_mhz * m.coupling_mhz;
    sum += m.coupling_mhz;
  }
  c.g_eff_mhz = std::sqrt(squares);
  c.g_bar_mhz = sum / static_cast<double>(c.n_modes);
  return c;
}

double TimedDickeState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

TimedDickeState timed_dicke_state(const ClusterSpec& cluster, double qubit_frequency_ghz, double t_us) {
  const CollectiveCouplings c = collective_couplings(cluster);
  if (!(c.g_eff_mhz > 0.0)) {
    throw ValidationError(fmt::format("cluster '{}': g_eff > 0 violated", cluster.name));
  }
  TimedDickeState state;
  state.time_us = t_us;
  for (const auto& m : cluster.modes) {
    const double detuning = units::ghz_to_angular(m.frequency_ghz - qubit_frequency_ghz);
    state.detunings_rad_per_us.push_back(detuning);
    state.amplitudes.push_back(m.coupling_mhz / c.g_eff_mhz * std::polar(1.0, detuning * t_us));
  }
  return state;
}

double fidelity_exact(const ClusterSpec& cluster, double qubit_frequency_ghz, double t_us) {
  const TimedDickeState state = timed_dicke_state(cluster, qubit_frequency_ghz, t_us);
  const CollectiveCouplings c = collective_couplings(cluster);
  // <D_static|D(t)> = sum_n (g_n / G) * amplitude_n
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t n = 0; n < state.amplitudes.size(); ++n) {
    overlap += cluster.modes[n].coupling_mhz / c.g_eff_mhz * state.amplitudes[n];
  }
  return std::norm(overlap);
}

double fidelity_closed_form(std::size_t n_modes, double spacing_mhz, double t_us) {
  require_modes(n_modes);
  const double half_eta = 0.5 * units::mhz_to_angular(spacing_mhz) * t_us;
  const double denominator = std::sin(half_eta);
  if (std::abs(denominator) < 1e-8) return 1.0;
  const double n = static_cast<double>(n_modes);
  const double ratio = std::sin(n * half_eta) / (n * denominator);
  return ratio * ratio;
}

double fidelity_series(std::size_t n_modes, double spacing_mhz, double t_us) {
  require_modes(n_modes);
  const double eta = units::mhz_to_angular(spacing_mhz) * t_us;
  const double n = static_cast<double>(n_modes);
  return 1.0 + (1.0 - n * n) * eta * eta / 12.0;
}

double tau_timed(std::size_t n_modes, double spacing_mhz, double fidelity_floor) {
  require_floor(fidelity_floor);
  if (n_modes < 2) throw ValidationError("tau_timed requires at least 2 modes");
  if (!(spacing_mhz > 0.0)) throw ValidationError("spacing > 0 violated");
  const double n = static_cast<double>(n_modes);
  return 2.0 * std::sqrt(3.0 - 3.0 * fidelity_floor) / std::sqrt(n * n - 1.0) /
         units::mhz_to_angular(spacing_mhz);
}

double tau_timed_numeric(std::size_t n_modes, double spacing_mhz, double fidelity_floor) {
  require_floor(fidelity_floor);
  if (n_modes < 2) throw ValidationError("tau_timed requires at least 2 modes");
  if (!(spacing_mhz > 0.0)) throw ValidationError("spacing > 0 violated");
  // F decreases monotonically from 1 to 0 on eta in [0, 2pi/N].
  const double n = static_cast<double>(n_modes);
  const double delta = units::mhz_to_angular(spacing_mhz);
  const double t_zero = 2.0 * std::numbers::pi / n / delta;
  return bracketed_root(
      [&](double t) { return fidelity_closed_form(n_modes, spacing_mhz, t) - fidelity_floor; }, 0.0,
      t_zero);
}

double tau_timed_numeric(const ClusterSpec& cluster, double fidelity_floor) {
  require_floor(fidelity_floor);
  const CollectiveCouplings c = collective_couplings(cluster);
  if (!(c.g_eff_mhz > 0.0)) {
    throw ValidationError(fmt::format("cluster '{}': g_eff > 0 violated", cluster.name));
  }
  std::vector<double> weights;
  std::vector<double> omegas;
  double spread = 0.0;
  for (const auto& m : cluster.modes) {
    weights.push_back(m.coupling_mhz * m.coupling_mhz);
    omegas.push_back(units::ghz_to_angular(m.frequency_ghz - cluster.modes.front().frequency_ghz));
    spread = std::max(spread, std::abs(omegas.back()));
  }
  const double total = c.g_eff_mhz * c.g_eff_mhz;
  if (spread == 0.0) {
    throw ExtractionError(fmt::format("cluster '{}' is degenerate; fidelity stays at 1", cluster.name));
  }
  const auto excess = [&](double t) {
    return fidelity_from_weights(weights, omegas, total, t) - fidelity_floor;
  };

  // Step well below the fastest beat so the first crossing is not skipped.
  const double step = 0.05 / spread;
  const double horizon = 200.0 / spread;
  double previous = 0.0;
  for (double t = step; t <= horizon; t += step) {
    if (excess(t) <= 0.0) return bracketed_root(excess, previous, t);
    previous = t;
  }
  throw ExtractionError(fmt::format("cluster '{}': fidelity never falls to {} within {} us",
                                    cluster.name, fidelity_floor, horizon));
}

double static_dicke_population(std::size_t n_modes, double mean_coupling_mhz, double t_us) {
  require_modes(n_modes);
  const double c = std::cos(std::sqrt(static_cast<double>(n_modes)) *
                            units::mhz_to_angular(mean_coupling_mhz) * t_us);
  return c * c;
}

double purity_analytic(double g_eff_mhz, double t_us) {
  return 0.25 * (3.0 + std::cos(4.0 * units::mhz_to_angular(g_eff_mhz) * t_us));
}

double tau_min_purity(const CollectiveCouplings& couplings, PurityTimeConvention convention) {
  const double g = convention == PurityTimeConvention::kEffectiveCoupling
                       ? couplings.g_eff_mhz
                       : std::sqrt(static_cast<double>(couplings.n_modes)) * couplings.g_bar_mhz;
  if (!(g > 0.0)) throw ValidationError("collective coupling > 0 violated");
  // 4 (2pi g) t = pi
  return 1.0 / (8.0 * g);
}

}  // namespace cqad
