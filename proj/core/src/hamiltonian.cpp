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

#include <fmt/format.h>

#include <numeric>

#include "cqad/errors.hpp"
#include "cqad/units.hpp"

namespace cqad {

namespace {

void require_modes(const ClusterSpec& cluster) {
  if (cluster.modes.empty()) {
    throw StructuralError(fmt::format("cluster '{}' has no modes", cluster.name));
  }
}

}  // namespace

SectorState SectorState::excited_qubit(std::size_t n_modes) {
  return SectorState{1.0, std::vector<std::complex<double>>(n_modes)};
}

double SectorState::norm_squared() const {
  double sum = std::norm(p);
  for (const auto& t : theta) sum += std::norm(t);
  return sum;
}

ComplexVector SectorState::to_vector() const {
  ComplexVector v(static_cast<Eigen::Index>(theta.size() + 1));
  v(0) = p;
  for (std::size_t n = 0; n < theta.size(); ++n) v(static_cast<Eigen::Index>(n + 1)) = theta[n];
  return v;
}

SectorState SectorState::from_vector(const ComplexVector& v) {
  if (v.size() < 1) throw StructuralError("sector state needs at least one amplitude");
  SectorState s{v(0), {}};
  s.theta.assign(v.data() + 1, v.data() + v.size());
  return s;
}

double default_frame_reference(const ClusterSpec& cluster) {
  require_modes(cluster);
  double sum = 0.0;
  for (const auto& m : cluster.modes) sum += m.frequency_ghz;
  return sum / static_cast<double>(cluster.modes.size());
}

double bright_mode_frequency(const ClusterSpec& cluster) {
  require_modes(cluster);
  double weight = 0.0;
  double weighted = 0.0;
  for (const auto& m : cluster.modes) {
    const double g2 = m.coupling_mhz * m.coupling_mhz;
    weight += g2;
    weighted += g2 * m.frequency_ghz;
  }
  return weight > 0.0 ? weighted / weight : default_frame_reference(cluster);
}

HilbertLayout cluster_layout(const ClusterSpec& cluster, int qubit_levels, int cutoff) {
  return HilbertLayout::uniform(qubit_levels, cluster.modes.size(), cutoff);
}

Operator build_full_hamiltonian(const QubitSpec& qubit, double qubit_frequency_ghz,
                                const ClusterSpec& cluster, const HilbertLayout& layout,
                                std::optional<double> frame_reference_ghz) {
  require_modes(cluster);
  if (layout.mode_count() != cluster.modes.size()) {
    throw StructuralError(fmt::format("layout has {} mode factors but cluster '{}' has {} modes",
                                      layout.mode_count(), cluster.name, cluster.modes.size()));
  }
  const double ref = frame_reference_ghz.value_or(default_frame_reference(cluster));
  const int d = layout.qubit_levels();

  const ComplexMatrix a = embed_operator(annihilation_matrix(d), 0, layout).matrix();
  const ComplexMatrix ad = a.adjoint();

  ComplexMatrix h = units::ghz_to_angular(qubit_frequency_ghz - ref) * (ad * a);
  h += 0.5 * units::mhz_to_angular(qubit.anharmonicity_mhz) * (ad * ad * a * a);

  for (std::size_t n = 0; n < cluster.modes.size(); ++n) {
    const ModeSpec& mode = cluster.modes[n];
    const ComplexMatrix f =
        embed_operator(annihilation_matrix(layout.factor_dimension(n + 1)), n + 1, layout).matrix();
    const ComplexMatrix fd = f.adjoint();
    h += units::ghz_to_angular(mode.frequency_ghz - ref) * (fd * f);
    h += units::mhz_to_angular(mode.coupling_mhz) * (fd * a + f * ad);
  }
  return Operator(layout, std::move(h));
}

SectorHamiltonian build_sector_hamiltonian(double qubit_frequency_ghz, const ClusterSpec& cluster,
                                           std::optional<double> frame_reference_ghz) {
  require_modes(cluster);
  const double ref = frame_reference_ghz.value_or(default_frame_reference(cluster));
  const auto n = static_cast<Eigen::Index>(cluster.modes.size());

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
  m(0, 0) = units::ghz_to_angular(qubit_frequency_ghz - ref);
  for (Eigen::Index k = 0; k < n; ++k) {
    const ModeSpec& mode = cluster.modes[static_cast<std::size_t>(k)];
    m(k + 1, k + 1) = units::ghz_to_angular(mode.frequency_ghz - ref);
    m(0, k + 1) = units::mhz_to_angular(mode.coupling_mhz);
    m(k + 1, 0) = m(0, k + 1);
  }
  return SectorHamiltonian{std::move(m), qubit_frequency_ghz, ref, cluster};
}

Operator excitation_number_operator(const HilbertLayout& layout) {
  const auto dim = static_cast<Eigen::Index>(layout.dimension());
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    const std::vector<int> occ = layout.occupations_of(i);
    n(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        static_cast<double>(std::accumulate(occ.begin(), occ.end(), 0));
  }
  return Operator(layout, std::move(n));
}

std::vector<std::size_t> sector_basis_indices(const HilbertLayout& layout) {
  std::vector<std::size_t> out;
  std::vector<int> occ(layout.factor_count(), 0);
  occ[0] = 1;
  out.push_back(layout.index_of(occ));
  occ[0] = 0;
  for (std::size_t n = 1; n < layout.factor_count(); ++n) {
    occ[n] = 1;
    out.push_back(layout.index_of(occ));
    occ[n] = 0;
  }
  return out;
}

ComplexMatrix single_excitation_block(const Operator& h) {
  const std::vector<std::size_t> idx = sector_basis_indices(h.layout());
  const auto n = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix block(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      block(r, c) = h.matrix()(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)]),
                               static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
    }
  }
  return block;
}

Ket embed_sector_state(const SectorState& state, const HilbertLayout& layout) {
  if (state.theta.size() != layout.mode_count()) {
    throw StructuralError(fmt::format("sector state has {} mode amplitudes but layout has {} modes",
                                      state.theta.size(), layout.mode_count()));
  }
  const std::vector<std::size_t> idx = sector_basis_indices(layout);
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
  v(static_cast<Eigen::Index>(idx[0])) = state.p;
  for (std::size_t n = 0; n < state.theta.size(); ++n) {
    v(static_cast<Eigen::Index>(idx[n + 1])) = state.theta[n];
  }
  return Ket(layout, std::move(v));
}

}  // namespace cqad
