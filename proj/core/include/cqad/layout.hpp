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

#include <cstddef>
#include <span>
#include <vector>

namespace cqad {

/// Factor structure of a truncated qubit + phonon-mode Hilbert space.
///
/// Factor 0 is the qubit (levels 0..d-1, 0 = |g>, 1 = |e>); factors 1..N are
/// the modes in cluster order, each truncated to `cutoff` occupations
/// (0..cutoff-1). Basis indices are row-major over the factor list, so the
/// qubit is the most significant digit:
///
///   index = ((q * c1 + n1) * c2 + n2) * ... * cN + nN
class HilbertLayout {
 public:
  /// Throws ValidationError if qubit_levels < 2 or any cutoff < 2.
  HilbertLayout(int qubit_levels, std::vector<int> mode_cutoffs);

  /// Same cutoff for every mode.
  static HilbertLayout uniform(int qubit_levels, std::size_t modes, int cutoff);

  int qubit_levels() const noexcept { return qubit_levels_; }
  const std::vector<int>& mode_cutoffs() const noexcept { return mode_cutoffs_; }
  std::size_t mode_count() const noexcept { return mode_cutoffs_.size(); }
  std::size_t factor_count() const noexcept { return mode_cutoffs_.size() + 1; }
  int factor_dimension(std::size_t factor) const;
  std::size_t dimension() const noexcept { return dimension_; }

  /// Occupations are ordered like the factors: {qubit level, n_1, ..., n_N}.
  std::size_t index_of(std::span<const int> occupations) const;
  std::vector<int> occupations_of(std::size_t index) const;

  bool operator==(const HilbertLayout&) const = default;

 private:
  int qubit_levels_;
  std::vector<int> mode_cutoffs_;
  std::size_t dimension_;
};

}  // namespace cqad
