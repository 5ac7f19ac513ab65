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

#include "cqad/layout.hpp"

#include <fmt/format.h>

#include "cqad/errors.hpp"

namespace cqad {

HilbertLayout::HilbertLayout(int qubit_levels, std::vector<int> mode_cutoffs)
    : qubit_levels_(qubit_levels), mode_cutoffs_(std::move(mode_cutoffs)), dimension_(0) {
  if (qubit_levels_ < 2) {
    throw ValidationError(fmt::format("qubit_levels >= 2 violated (got {})", qubit_levels_));
  }
  dimension_ = static_cast<std::size_t>(qubit_levels_);
  for (std::size_t m = 0; m < mode_cutoffs_.size(); ++m) {
    if (mode_cutoffs_[m] < 2) {
      throw ValidationError(
          fmt::format("mode cutoff >= 2 violated for mode {} (got {})", m, mode_cutoffs_[m]));
    }
    dimension_ *= static_cast<std::size_t>(mode_cutoffs_[m]);
  }
}

HilbertLayout HilbertLayout::uniform(int qubit_levels, std::size_t modes, int cutoff) {
  return HilbertLayout(qubit_levels, std::vector<int>(modes, cutoff));
}

int HilbertLayout::factor_dimension(std::size_t factor) const {
  if (factor == 0) return qubit_levels_;
  if (factor > mode_cutoffs_.size()) {
    throw StructuralError(
        fmt::format("factor index {} out of range ({} factors)", factor, factor_count()));
  }
  return mode_cutoffs_[factor - 1];
}

std::size_t HilbertLayout::index_of(std::span<const int> occupations) const {
  if (occupations.size() != factor_count()) {
    throw StructuralError(fmt::format("expected {} occupations, got {}", factor_count(),
                                      occupations.size()));
  }
  std::size_t index = 0;
  for (std::size_t f = 0; f < occupations.size(); ++f) {
    const int dim = factor_dimension(f);
    if (occupations[f] < 0 || occupations[f] >= dim) {
      throw StructuralError(
          fmt::format("occupation {} out of range for factor {} (dim {})", occupations[f], f, dim));
    }
    index = index * static_cast<std::size_t>(dim) + static_cast<std::size_t>(occupations[f]);
  }
  return index;
}

std::vector<int> HilbertLayout::occupations_of(std::size_t index) const {
  if (index >= dimension_) {
    throw StructuralError(fmt::format("basis index {} out of range (dim {})", index, dimension_));
  }
  std::vector<int> occ(factor_count());
  for (std::size_t f = factor_count(); f-- > 0;) {
    const auto dim = static_cast<std::size_t>(factor_dimension(f));
    occ[f] = static_cast<int>(index % dim);
    index /= dim;
  }
  return occ;
}

}  // namespace cqad
