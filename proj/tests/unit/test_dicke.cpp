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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cqad/dynamics.hpp"
#include "cqad/errors.hpp"
#include "cqad/units.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace cqad {
namespace {

using units::mhz_to_angular;

TEST(CollectiveCouplings, FixtureClusters) {
  const CollectiveCouplings s21 = collective_couplings(testing::device_a().cluster("S2_1"));
  EXPECT_EQ(s21.n_modes, 2u);
  EXPECT_NEAR(s21.g_eff_mhz, 1.1200, 5e-5);
  EXPECT_NEAR(s21.g_eff_mhz, std::hypot(0.68, 0.89), 1e-15);
  EXPECT_NEAR(s21.g_bar_mhz, 0.785, 1e-15);
  const CollectiveCouplings s31 = collective_couplings(testing::device_b().cluster("S3_1"));
  EXPECT_NEAR(s31.g_eff_mhz, 1.0861, 5e-5);
  EXPECT_NEAR(s31.g_bar_mhz, 0.6233, 5e-5);
}

TEST(CollectiveCouplings, EqualCouplings) {
  const CollectiveCouplings c = collective_couplings(testing::equal_cluster(4, 4.78, 0.001, 0.7));
  EXPECT_NEAR(c.g_eff_mhz, 2.0 * 0.7, 1e-15);
  EXPECT_NEAR(c.g_bar_mhz, 0.7, 1e-15);
}

TEST(TimedDickeState, StaticAtTimeZero) {
  const ClusterSpec c = testing::device_b().cluster("S3_1");
  const TimedDickeState s = timed_dicke_state(c, 4.779, 0.0);
  const double g_eff = collective_couplings(c).g_eff_mhz;
  for (std::size_t n = 0; n < c.modes.size(); ++n) {
    EXPECT_EQ(s.amplitudes[n].imag(), 0.0);
    EXPECT_NEAR(s.amplitudes[n].real(), c.modes[n].coupling_mhz / g_eff, 1e-15);
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(TimedDickeState, DetuningPhase) {
  const TimedDickeState s = timed_dicke_state(testing::device_a().cluster("S2_1"), 4.7766, 0.1);
  EXPECT_NEAR(std::arg(s.amplitudes[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::arg(s.amplitudes[1]), -1.1310, 5e-5);
  EXPECT_NEAR(s.detunings_rad_per_us[1], -mhz_to_angular(1.8), 1e-8);
}

TEST(TimedDickeState, DegenerateClusterDiffersByGlobalPhase) {
  const ClusterSpec c = testing::make_cluster({4.77, 4.77, 4.77}, {0.5, 0.7, 0.6});
  const TimedDickeState s0 = timed_dicke_state(c, 4.7751, 0.0);
  for (double t : {0.1, 0.37, 0.9}) {
    const TimedDickeState s = timed_dicke_state(c, 4.7751, t);
    const std::complex<double> phase = s.amplitudes[0] / s0.amplitudes[0];
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-14);
    for (std::size_t n = 1; n < 3; ++n) {
      EXPECT_NEAR(std::abs(s.amplitudes[n] - phase * s0.amplitudes[n]), 0.0, 1e-13);
    }
  }
}

TEST(TimedDickeState, ZeroCouplingRejected) {
  EXPECT_THROW(timed_dicke_state(testing::make_cluster({4.7}, {0.0}), 4.7, 0.1), ValidationError);
}

TEST(FidelityExact, Examples) {
  const double s = 1.0 / 1024.0;  // dyadic spacing in GHz keeps detunings exact
  const ClusterSpec two = testing::equal_cluster(2, 4.75, s, 0.6);
  EXPECT_NEAR(fidelity_exact(two, 4.75, 0.0), 1.0, 1e-15);
  const double spacing_angular = units::ghz_to_angular(s);
  EXPECT_NEAR(fidelity_exact(two, 4.75, std::numbers::pi / spacing_angular), 0.0, 1e-14);
  const ClusterSpec three = testing::equal_cluster(3, 4.75, s, 0.6);
  EXPECT_NEAR(fidelity_exact(three, 4.75, 2.0 * std::numbers::pi / 3.0 / spacing_angular), 0.0, 1e-14);
}

TEST(FidelityExact, MatchesIndependentPhasorSum) {
  const ClusterSpec c = testing::device_b().cluster("S3_2");
  for (double t : {0.013, 0.2, 0.77}) {
    std::vector<double> w;
    std::vector<double> phi;
    for (const auto& m : c.modes) {
      w.push_back(m.coupling_mhz * m.coupling_mhz);
      phi.push_back(2.0 * std::numbers::pi * (m.frequency_ghz - 4.748) * 1e3 * t);
    }
    EXPECT_NEAR(fidelity_exact(c, 4.748, t), oracle::weighted_phase_fidelity(w, phi), 1e-12);
  }
}

TEST(FidelityClosedForm, Examples) {
  EXPECT_EQ(fidelity_closed_form(4, 1.25, 0.0), 1.0);
  const double eta = std::numbers::pi / 2.0;
  EXPECT_NEAR(fidelity_closed_form(2, 1.0, eta / mhz_to_angular(1.0)), 0.5, 1e-15);
  // eta a multiple of 2pi: the limit value
  EXPECT_EQ(fidelity_closed_form(3, 1.0, 1.0), 1.0);
}

TEST(FidelityClosedForm, FiveModesAtSmallEta) {
  const double spacing_ghz = 1.0 / 1024.0;
  const double spacing_mhz = spacing_ghz * 1e3;
  const double t = 0.1 / mhz_to_angular(spacing_mhz);
  const ClusterSpec c = testing::equal_cluster(5, 4.75, spacing_ghz, 0.6);
  EXPECT_NEAR(fidelity_closed_form(5, spacing_mhz, t), fidelity_exact(c, 4.75, t), 1e-12);
}

TEST(FidelitySeries, SecondOrderCoefficient) {
  const double eta = 0.01;
  const double t = eta / mhz_to_angular(1.0);
  EXPECT_NEAR(fidelity_series(3, 1.0, t), 1.0 - 8.0 * eta * eta / 12.0, 1e-15);
  EXPECT_NEAR(fidelity_series(3, 1.0, t), fidelity_closed_form(3, 1.0, t), 1e-8);
}

TEST(TauTimed, FixtureSpacings) {
  EXPECT_NEAR(tau_timed(2, 1.8, 0.9), 0.05592, 5e-6);
  EXPECT_NEAR(tau_timed(2, 1.8, 0.9), 2.0 * std::sqrt(0.3) / std::sqrt(3.0) / mhz_to_angular(1.8), 1e-15);
  EXPECT_NEAR(tau_timed(3, 1.25, 0.9), 0.04931, 5e-6);
}

TEST(TauTimed, NumericRootAgreesWithBisection) {
  const double tau = tau_timed_numeric(3, 1.25, 0.9);
  const double reference = oracle::bisect(
      [](double t) { return fidelity_closed_form(3, 1.25, t) - 0.9; }, 1e-6, 0.2);
  EXPECT_NEAR(tau, reference, 1e-12);
  EXPECT_NEAR(tau, tau_timed(3, 1.25, 0.9), 0.05 * tau);
}

TEST(TauTimed, LimitsAndPreconditions) {
  EXPECT_LT(tau_timed(3, 1.25, 1.0 - 1e-12), 1e-6);
  EXPECT_THROW(tau_timed(1, 1.25, 0.9), ValidationError);
  EXPECT_THROW(tau_timed(3, 1.25, 1.0), ValidationError);
  EXPECT_THROW(tau_timed(3, 1.25, 0.0), ValidationError);
  EXPECT_THROW(tau_timed(3, 0.0, 0.9), ValidationError);
}

TEST(TauTimed, ExactClusterRoot) {
  const ClusterSpec c = testing::device_a().cluster("S2_1");
  const double tau = tau_timed_numeric(c, 0.9);
  EXPECT_NEAR(fidelity_exact(c, 4.775, tau), 0.9, 1e-9);
  for (double t = 0.0; t < tau; t += tau / 50.0) EXPECT_GT(fidelity_exact(c, 4.775, t), 0.9 - 1e-9);
  // equal couplings: identical to the closed-form route
  const ClusterSpec equal = testing::equal_cluster(3, 4.75, 1.0 / 1024.0, 0.6);
  EXPECT_NEAR(tau_timed_numeric(equal, 0.9), tau_timed_numeric(3, 1000.0 / 1024.0, 0.9), 1e-10);
  EXPECT_THROW(tau_timed_numeric(testing::make_cluster({4.7, 4.7}, {0.5, 0.5}), 0.9), ExtractionError);
}

TEST(StaticDickePopulation, QuarterPeriod) {
  EXPECT_EQ(static_dicke_population(2, 0.785, 0.0), 1.0);
  const double t = 1.0 / (4.0 * std::sqrt(2.0) * 0.785);
  EXPECT_NEAR(static_dicke_population(2, 0.785, t / 2.0), 0.5, 1e-15);
  EXPECT_NEAR(static_dicke_population(2, 0.785, t), 0.0, 1e-15);
}

TEST(StaticDickePopulation, MatchesDegenerateSimulation) {
  const double g = 0.785;
  const ClusterSpec c = testing::make_cluster({4.7757, 4.7757}, {g, g});
  const PopulationTrace trace = simulate_trace(c, 4.7757, 1.0, 201);
  for (std::size_t i = 0; i < trace.times_us.size(); ++i) {
    EXPECT_NEAR(trace.p_excited[i], static_dicke_population(2, g, trace.times_us[i]), 1e-10);
  }
}

TEST(PurityAnalytic, Examples) {
  EXPECT_EQ(purity_analytic(1.12, 0.0), 1.0);
  EXPECT_NEAR(purity_analytic(1.12, 1.0 / (8.0 * 1.12)), 0.5, 1e-15);
  EXPECT_NEAR(purity_analytic(1.12, 0.05), 0.7907, 5e-5);
}

TEST(PurityAnalytic, MatchesMatchedDegenerateSimulation) {
  // one resonant mode with g = g_eff of S_{2,1}
  const double g_eff = collective_couplings(testing::device_a().cluster("S2_1")).g_eff_mhz;
  const PopulationTrace trace = simulate_trace(testing::make_cluster({4.7757}, {g_eff}), 4.7757, 0.1, 3);
  EXPECT_NEAR(trace.purity[1], purity_analytic(g_eff, 0.05), 1e-12);
}

TEST(TauMinPurity, Conventions) {
  const CollectiveCouplings s21 = collective_couplings(testing::device_a().cluster("S2_1"));
  EXPECT_NEAR(tau_min_purity(s21) * 1e3, 111.6, 0.05);
  EXPECT_NEAR(tau_min_purity(s21, PurityTimeConvention::kMeanCoupling),
              1.0 / (8.0 * std::sqrt(2.0) * 0.785), 1e-15);
  const CollectiveCouplings s31 = collective_couplings(testing::device_b().cluster("S3_1"));
  EXPECT_NEAR(tau_min_purity(s31) * 1e3, 115.1, 0.05);
  const CollectiveCouplings equal = collective_couplings(testing::equal_cluster(3, 4.78, 0.001, 0.6));
  EXPECT_NEAR(tau_min_purity(equal), tau_min_purity(equal, PurityTimeConvention::kMeanCoupling), 1e-15);
  EXPECT_THROW(tau_min_purity(CollectiveCouplings{}), ValidationError);
}

}  // namespace
}  // namespace cqad
