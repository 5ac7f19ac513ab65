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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cqad/dynamics.hpp"
#include "cqad/export.hpp"
#include "cqad/hamiltonian.hpp"
#include "cqad/spectroscopy.hpp"
#include "test_support.hpp"

namespace cqad {
namespace {

std::vector<double> frequencies_around(const ClusterSpec& c, std::size_t count, double half_width_ghz) {
  const double center = default_frame_reference(c);
  return uniform_grid(center - half_width_ghz, center + half_width_ghz, count);
}

ClusterSpec random_cluster(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> modes(1, 5);
  std::uniform_real_distribution<double> spacing(0.0003, 0.003);
  std::uniform_real_distribution<double> coupling(0.3, 1.2);
  const int n = modes(rng);
  std::vector<double> f{4.78};
  std::vector<double> g{coupling(rng)};
  for (int i = 1; i < n; ++i) {
    f.push_back(f.back() - spacing(rng));
    g.push_back(coupling(rng));
  }
  return testing::make_cluster(f, g);
}

TEST(ModelProperties, SectorMatchesFullSpaceForFixtureClusters) {
  for (const ClusterSpec& c : testing::fixture_clusters()) {
    const QubitSpec qubit = testing::make_qubit();
    const HilbertLayout layout = cluster_layout(c);
    const std::vector<int> excited_occ = [&] {
      std::vector<int> o(layout.factor_count(), 0);
      o[0] = 1;
      return o;
    }();
    for (double f : frequencies_around(c, 11, 0.005)) {
      const Operator full = build_full_hamiltonian(qubit, f, c, layout);
      const SectorHamiltonian sector = build_sector_hamiltonian(f, c);
      const EigenDecomposition block = hermitian_eigendecomposition(single_excitation_block(full));
      const EigenDecomposition reduced = hermitian_eigendecomposition(ComplexMatrix(sector.matrix.cast<Complex>()));
      const double scale = reduced.eigenvalues.cwiseAbs().maxCoeff();
      for (Eigen::Index k = 0; k < reduced.eigenvalues.size(); ++k) {
        EXPECT_NEAR(block.eigenvalues(k), reduced.eigenvalues(k), 1e-12 * scale) << c.name << " " << f;
      }

      const EigenDecomposition full_eig = hermitian_eigendecomposition(full);
      const SectorPropagator prop(sector);
      const ComplexVector psi0 = Ket::basis(layout, excited_occ).amplitudes();
      for (double t : uniform_grid(0.0, 1.0, 21)) {
        const Ket embedded = embed_sector_state(prop.evolve_excited(t), layout);
        const ComplexVector full_state = evolve(psi0, full_eig, t);
        EXPECT_GE(overlap_probability(embedded.amplitudes(), full_state), 1.0 - 1e-10);
        // population-derived purity equals the partial-trace purity
        const double p = std::norm(prop.excited_amplitude(t));
        EXPECT_NEAR(purity_from_population(p), purity(reduce_to_qubit(Ket(layout, full_state))), 1e-10);
      }
    }
  }
}

TEST(ModelProperties, FullHamiltonianConservesExcitations) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ClusterSpec c = random_cluster(rng);
    if (c.mode_count() > 3) continue;
    const HilbertLayout layout = cluster_layout(c, 3, 3);
    const Operator h = build_full_hamiltonian(testing::make_qubit(-250.0), 4.779, c, layout);
    const ComplexMatrix n = excitation_number_operator(layout).matrix();
    EXPECT_LT((h.matrix() * n - n * h.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(h.is_hermitian());
  }
}

TEST(ModelProperties, FrameShiftOnlyOffsetsEigenvalues) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> shift(-0.01, 0.01);
  for (int trial = 0; trial < 40; ++trial) {
    const ClusterSpec c = random_cluster(rng);
    const double f = 4.777 + shift(rng) * 0.2;
    const SectorHamiltonian a = build_sector_hamiltonian(f, c);
    const double offset_ghz = shift(rng);
    const SectorHamiltonian b = build_sector_hamiltonian(f, c, a.frame_reference_ghz + offset_ghz);
    const EigenDecomposition ea = hermitian_eigendecomposition(ComplexMatrix(a.matrix.cast<Complex>()));
    const EigenDecomposition eb = hermitian_eigendecomposition(ComplexMatrix(b.matrix.cast<Complex>()));
    for (Eigen::Index k = 1; k < ea.eigenvalues.size(); ++k) {
      const double da = ea.eigenvalues(k) - ea.eigenvalues(0);
      const double db = eb.eigenvalues(k) - eb.eigenvalues(0);
      EXPECT_NEAR(da, db, 1e-9 * std::max(1.0, std::abs(da)));
    }
    const SectorPropagator pa(a);
    const SectorPropagator pb(b);
    for (double t : {0.1, 0.5, 0.9}) {
      EXPECT_NEAR(std::norm(pa.excited_amplitude(t)), std::norm(pb.excited_amplitude(t)), 1e-10);
    }
  }
}

TEST(ModelProperties, SpectroscopyWeightsAndContinuity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const ClusterSpec c = random_cluster(rng);
    const std::size_t points = 301;
    const SpectroscopySweep s = sweep_spectrum(c, 4.765, 4.790, points);
    const double step = s.qubit_frequencies_ghz[1] - s.qubit_frequencies_ghz[0];
    for (std::size_t i = 0; i < s.size(); ++i) {
      ASSERT_EQ(s.lines[i].size(), c.mode_count() + 1);
      double total = 0.0;
      for (const auto& line : s.lines[i]) total += line.weight;
      EXPECT_NEAR(total, 1.0, 1e-10);
      if (i == 0) continue;
      for (std::size_t k = 0; k < s.lines[i].size(); ++k) {
        const double jump = std::abs(s.lines[i][k].transition_frequency_ghz -
                                     s.lines[i - 1][k].transition_frequency_ghz);
        EXPECT_LE(jump, step * (1.0 + 1e-6) + 1e-13);
      }
    }
  }
}

TEST(ModelProperties, DispersiveShiftOfLoneMode) {
  for (double g : {0.53, 0.7, 0.89}) {
    const double f_mode = 4.7748;
    const double delta_mhz = 50.0 * g;
    const double f_q = f_mode + delta_mhz * 1e-3;
    const SpectroscopySweep s = sweep_spectrum(testing::make_cluster({f_mode}, {g}), f_q, f_q + 1e-6, 2);
    const double shift_mhz = (s.lines[0][1].transition_frequency_ghz - f_q) * 1e3;
    const double expected = g * g / delta_mhz;
    EXPECT_NEAR(shift_mhz, expected, 0.1 * expected);
  }
}

TEST(ModelProperties, SectorStatesStayNormalizedAndReversible) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> times(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const ClusterSpec c = random_cluster(rng);
    const SectorPropagator prop(build_sector_hamiltonian(4.778, c));
    for (int k = 0; k < 10; ++k) {
      const double t = times(rng);
      const SectorState s = prop.evolve_excited(t);
      EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
      const SectorState back = prop.evolve(s, -t);
      EXPECT_GE(std::norm(back.p), 1.0 - 1e-10);
    }
  }
}

TEST(ModelProperties, RabiGridBytesIndependentOfThreads) {
  for (const ClusterSpec& c : testing::fixture_clusters()) {
    const double center = default_frame_reference(c);
    std::string reference;
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
      const RabiGrid g = simulate_rabi_grid(c, {center - 0.004, center + 0.004, 23}, 1.0, 51, 5.13, threads);
      std::ostringstream out;
      write_rabi_csv(out, g);
      if (threads == 1) {
        reference = out.str();
      } else {
        EXPECT_EQ(out.str(), reference) << c.name << " threads=" << threads;
      }
    }
  }
}

}  // namespace
}  // namespace cqad
