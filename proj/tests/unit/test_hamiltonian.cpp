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

#include "cqad/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "cqad/errors.hpp"
#include "cqad/units.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace cqad {
namespace {

using units::ghz_to_angular;
using units::mhz_to_angular;

QubitSpec qubit_with_anharmonicity(double alpha_mhz) {
  return testing::make_qubit(alpha_mhz);
}

TEST(FullHamiltonian, MinimalResonantJc) {
  const ClusterSpec c = testing::make_cluster({4.7766}, {0.89});
  const HilbertLayout layout = cluster_layout(c);
  const Operator h = build_full_hamiltonian(qubit_with_anharmonicity(-270.0), 4.7766, c, layout);
  ASSERT_EQ(h.dimension(), 4u);
  const double g = mhz_to_angular(0.89);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 2) = g;  // <g,1| H |e,0>
  expected(2, 1) = g;
  EXPECT_TRUE(h.matrix().isApprox(expected, 1e-15));
  EXPECT_TRUE(h.is_hermitian());
}

TEST(FullHamiltonian, AnharmonicLadderWithoutCoupling) {
  const double alpha = -270.0;
  const ClusterSpec c = testing::make_cluster({4.7766}, {0.0});
  const HilbertLayout layout = cluster_layout(c, 3, 2);
  const double f_q = 4.7800;
  const Operator h = build_full_hamiltonian(qubit_with_anharmonicity(alpha), f_q, c, layout);
  EXPECT_TRUE(h.matrix().isDiagonal(0.0));
  const double dq = ghz_to_angular(f_q - 4.7766);
  const std::vector<int> two{2, 0};
  const auto i2 = static_cast<Eigen::Index>(layout.index_of(two));
  // harmonic ladder gives 2 dq; the quartic term adds (alpha/2) * 2 * 1
  EXPECT_NEAR(h.matrix()(i2, i2).real() - 2.0 * dq, mhz_to_angular(alpha), 1e-9);
}

TEST(FullHamiltonian, MatchesBruteForceConstruction) {
  const ClusterSpec c = testing::device_b().cluster("S3_1");
  const QubitSpec& q = testing::device_b().qubit("QB");
  const double f_q = 4.7790;
  const HilbertLayout layout = cluster_layout(c, 3, 3);
  const Operator h = build_full_hamiltonian(q, f_q, c, layout);

  const double ref = default_frame_reference(c);
  std::vector<double> detunings;
  std::vector<double> couplings;
  for (const auto& m : c.modes) {
    detunings.push_back(ghz_to_angular(m.frequency_ghz - ref));
    couplings.push_back(mhz_to_angular(m.coupling_mhz));
  }
  const ComplexMatrix reference = oracle::brute_force_hamiltonian(
      3, {3, 3, 3}, ghz_to_angular(f_q - ref), mhz_to_angular(q.anharmonicity_mhz), detunings,
      couplings);
  EXPECT_LT((h.matrix() - reference).cwiseAbs().maxCoeff(), 1e-12 * reference.cwiseAbs().maxCoeff());
}

TEST(FullHamiltonian, SingleExcitationBlockMatchesSector) {
  const ClusterSpec c = testing::device_b().cluster("S3_1");
  const HilbertLayout layout = cluster_layout(c);
  const Operator h = build_full_hamiltonian(testing::device_b().qubit("QB"), 4.7801, c, layout);
  ASSERT_EQ(h.dimension(), 16u);
  const SectorHamiltonian sector = build_sector_hamiltonian(4.7801, c);
  const EigenDecomposition full_block = hermitian_eigendecomposition(single_excitation_block(h));
  const EigenDecomposition reduced =
      hermitian_eigendecomposition(ComplexMatrix(sector.matrix.cast<Complex>()));
  const double scale = reduced.eigenvalues.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < 4; ++k) {
    EXPECT_NEAR(full_block.eigenvalues(k), reduced.eigenvalues(k), 1e-12 * scale);
  }
}

TEST(FullHamiltonian, ConservesExcitationNumber) {
  const ClusterSpec c = testing::device_a().cluster("S2_1");
  for (int d : {2, 3}) {
    const HilbertLayout layout = cluster_layout(c, d, 3);
    const Operator h = build_full_hamiltonian(testing::device_a().qubit("QA"), 4.7758, c, layout);
    const ComplexMatrix n = excitation_number_operator(layout).matrix();
    const ComplexMatrix commutator = h.matrix() * n - n * h.matrix();
    EXPECT_LT(commutator.cwiseAbs().maxCoeff(), 1e-12) << "d=" << d;
  }
}

TEST(FullHamiltonian, LayoutMismatchIsStructural) {
  const ClusterSpec c = testing::device_a().cluster("S2_1");
  EXPECT_THROW(build_full_hamiltonian(testing::device_a().qubit("QA"), 4.77, c, HilbertLayout(2, {2})),
               StructuralError);
}

TEST(SectorHamiltonian, SingleResonantModeUnits) {
  const SectorHamiltonian h = build_sector_hamiltonian(4.7748, testing::make_cluster({4.7748}, {0.89}));
  ASSERT_EQ(h.dimension(), 2u);
  EXPECT_EQ(h.matrix(0, 0), 0.0);
  EXPECT_EQ(h.matrix(1, 1), 0.0);
  EXPECT_NEAR(h.matrix(0, 1), 5.5920349, 1e-7);
  EXPECT_EQ(h.matrix(1, 0), h.matrix(0, 1));
}

TEST(SectorHamiltonian, MeanFrameDiagonalForS21) {
  const SectorHamiltonian h = build_sector_hamiltonian(4.7757, testing::device_a().cluster("S2_1"));
  EXPECT_DOUBLE_EQ(h.frame_reference_ghz, 4.7757);
  EXPECT_NEAR(h.matrix(0, 0), 0.0, 1e-9);
  EXPECT_NEAR(h.matrix(1, 1), mhz_to_angular(0.9), 1e-9);
  EXPECT_NEAR(h.matrix(2, 2), -mhz_to_angular(0.9), 1e-9);
  EXPECT_EQ(h.matrix(1, 2), 0.0);
  EXPECT_NEAR(h.matrix(0, 1), mhz_to_angular(0.68), 1e-12);
  EXPECT_NEAR(h.matrix(0, 2), mhz_to_angular(0.89), 1e-12);
}

TEST(SectorHamiltonian, EigenvaluesAreCharacteristicRoots) {
  for (const ClusterSpec& c : testing::fixture_clusters()) {
    const SectorHamiltonian h = build_sector_hamiltonian(bright_mode_frequency(c), c);
    const EigenDecomposition eig = hermitian_eigendecomposition(ComplexMatrix(h.matrix.cast<Complex>()));
    std::vector<double> diag;
    std::vector<double> couplings;
    for (Eigen::Index k = 0; k < h.matrix.rows(); ++k) {
      diag.push_back(h.matrix(k, k));
      couplings.push_back(h.matrix(0, k));
    }
    const double scale = std::pow(h.matrix.cwiseAbs().maxCoeff(), static_cast<double>(diag.size()));
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
      EXPECT_LT(std::abs(oracle::arrowhead_characteristic(diag, couplings, eig.eigenvalues(k))),
                1e-12 * scale)
          << c.name;
    }
  }
}

TEST(SectorHamiltonian, DecoupledLimitKeepsQubitExcited) {
  const ClusterSpec c = testing::make_cluster({4.78, 4.77}, {0.0, 0.0});
  const SectorHamiltonian h = build_sector_hamiltonian(4.7751, c);
  EXPECT_TRUE(h.matrix.isDiagonal(0.0));
  const EigenDecomposition eig = hermitian_eigendecomposition(ComplexMatrix(h.matrix.cast<Complex>()));
  const ComplexVector out = evolve(SectorState::excited_qubit(2).to_vector(), eig, 0.7);
  EXPECT_NEAR(std::abs(out(0)), 1.0, 1e-15);
}

TEST(SectorState, VectorRoundTripAndEmbedding) {
  SectorState s{Complex(0.6, 0.0), {Complex(0.0, 0.48), Complex(0.64, 0.0)}};
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  const SectorState back = SectorState::from_vector(s.to_vector());
  EXPECT_EQ(back.p, s.p);
  EXPECT_EQ(back.theta, s.theta);

  const HilbertLayout layout(2, {2, 2});
  const Ket k = embed_sector_state(s, layout);
  const std::vector<int> e00{1, 0, 0};
  const std::vector<int> g01{0, 0, 1};
  EXPECT_EQ(k.amplitudes()(static_cast<Eigen::Index>(layout.index_of(e00))), s.p);
  EXPECT_EQ(k.amplitudes()(static_cast<Eigen::Index>(layout.index_of(g01))), s.theta[1]);
  EXPECT_THROW(embed_sector_state(s, HilbertLayout(2, {2})), StructuralError);
}

TEST(BrightModeFrequency, WeightsBySquaredCoupling) {
  const ClusterSpec c = testing::make_cluster({4.78, 4.77}, {1.0, 2.0});
  EXPECT_NEAR(bright_mode_frequency(c), (4.78 + 4.0 * 4.77) / 5.0, 1e-15);
  EXPECT_NEAR(bright_mode_frequency(testing::make_cluster({4.78, 4.77}, {0.0, 0.0})), 4.775, 1e-15);
}

}  // namespace
}  // namespace cqad
