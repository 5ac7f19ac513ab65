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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>

#include "cqad/layout.hpp"

namespace cqad {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using DensityMatrix2 = Eigen::Matrix2cd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kLeakageThreshold = 1e-10;

/// Dense operator on a HilbertLayout. Hamiltonians are in rad/us.
class Operator {
 public:
  /// Throws StructuralError unless matrix is square with the layout dimension.
  Operator(HilbertLayout layout, ComplexMatrix matrix);

  const HilbertLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return layout_.dimension(); }

  /// max |H - H^dagger| entry below tolerance * max(1, max |H| entry).
  bool is_hermitian(double tolerance = kHermitianTolerance) const;

 private:
  HilbertLayout layout_;
  ComplexMatrix matrix_;
};

/// State vector on a HilbertLayout.
class Ket {
 public:
  /// Throws StructuralError unless the amplitude count matches the layout.
  Ket(HilbertLayout layout, ComplexVector amplitudes);

  /// Product basis state with the given occupations {qubit, n_1, ..., n_N}.
  static Ket basis(const HilbertLayout& layout, std::span<const int> occupations);

  const HilbertLayout& layout() const noexcept { return layout_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  HilbertLayout layout_;
  ComplexVector amplitudes_;
};

/// Eigenvalues ascending; column k of `eigenvectors` pairs with eigenvalue k.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(eigenvalues.size());
  }
  /// V diag(eigenvalues) V^dagger.
  ComplexMatrix reconstruct() const;
};

// Local single-factor operators, truncated to `levels`.
ComplexMatrix identity_matrix(int levels);
ComplexMatrix annihilation_matrix(int levels);
ComplexMatrix creation_matrix(int levels);
ComplexMatrix number_matrix(int levels);

/// identity (x) ... (x) local (x) ... (x) identity with `local` on factor
/// `factor_index`. Throws StructuralError on a dimension mismatch.
Operator embed_operator(const ComplexMatrix& local, std::size_t factor_index,
                        const HilbertLayout& layout);

/// Throws ValidationError when the input is not Hermitian.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h);
EigenDecomposition hermitian_eigendecomposition(const Operator& h);

/// V e^{-i Lambda t} V^dagger psi0. Valid for any real t (negative t evolves
/// backwards).
ComplexVector evolve(const ComplexVector& psi0, const EigenDecomposition& eig, double t_us);
Ket evolve(const Ket& psi0, const EigenDecomposition& eig, double t_us);

/// Evaluates e^{-iHt} psi0 at many times from one decomposition.
class SpectralPropagator {
 public:
  SpectralPropagator(EigenDecomposition eig, const ComplexVector& psi0);

  ComplexVector at(double t_us) const;
  /// Single component <basis_index| e^{-iHt} |psi0>.
  Complex amplitude(std::size_t basis_index, double t_us) const;
  const EigenDecomposition& decomposition() const noexcept { return eig_; }

 private:
  EigenDecomposition eig_;
  ComplexVector coefficients_;  // V^dagger psi0
};

/// Qubit reduced density matrix in the {|g>, |e>} basis. With qubit_levels > 2
/// throws LeakageError when population above |e> exceeds kLeakageThreshold.
DensityMatrix2 reduce_to_qubit(const Ket& psi);
/// Same reduction applied to a full density matrix on `layout`.
DensityMatrix2 reduce_to_qubit(const ComplexMatrix& rho, const HilbertLayout& layout);

/// tr(rho^2).
double purity(const DensityMatrix2& rho);

/// |<a|b>|^2.
double overlap_probability(const ComplexVector& a, const ComplexVector& b);

}  // namespace cqad
