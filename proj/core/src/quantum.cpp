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

#include "cqad/quantum.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "cqad/errors.hpp"

namespace cqad {

Operator::Operator(HilbertLayout layout, ComplexMatrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(layout_.dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw StructuralError(fmt::format("operator is {}x{} but layout dimension is {}",
                                      matrix_.rows(), matrix_.cols(), dim));
  }
}

namespace {

bool hermitian_within(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tolerance * scale;
}

}  // namespace

bool Operator::is_hermitian(double tolerance) const {
  return hermitian_within(matrix_, tolerance);
}

Ket::Ket(HilbertLayout layout, ComplexVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(layout_.dimension())) {
    throw StructuralError(fmt::format("ket has {} amplitudes but layout dimension is {}",
                                      amplitudes_.size(), layout_.dimension()));
  }
}

Ket Ket::basis(const HilbertLayout& layout, std::span<const int> occupations) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
  v(static_cast<Eigen::Index>(layout.index_of(occupations))) = 1.0;
  return Ket(layout, std::move(v));
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

ComplexMatrix identity_matrix(int levels) { return ComplexMatrix::Identity(levels, levels); }

ComplexMatrix annihilation_matrix(int levels) {
  ComplexMatrix a = ComplexMatrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation_matrix(int levels) { return annihilation_matrix(levels).adjoint(); }

ComplexMatrix number_matrix(int levels) {
  ComplexMatrix n = ComplexMatrix::Zero(levels, levels);
  for (int k = 0; k < levels; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Operator embed_operator(const ComplexMatrix& local, std::size_t factor_index,
                        const HilbertLayout& layout) {
  if (factor_index >= layout.factor_count()) {
    throw StructuralError(fmt::format("factor index {} out of range ({} factors)", factor_index,
                                      layout.factor_count()));
  }
  const int dim = layout.factor_dimension(factor_index);
  if (local.rows() != dim || local.cols() != dim) {
    throw StructuralError(fmt::format("local operator is {}x{} but factor {} has dimension {}",
                                      local.rows(), local.cols(), factor_index, dim));
  }

  // Strides: factors before the target form the outer block, factors after it
  // the inner block, so the embedding is I_outer (x) local (x) I_inner.
  std::size_t inner = 1;
  for (std::size_t f = factor_index + 1; f < layout.factor_count(); ++f) {
    inner *= static_cast<std::size_t>(layout.factor_dimension(f));
  }
  const std::size_t outer = layout.dimension() / (inner * static_cast<std::size_t>(dim));

  const auto n = static_cast<Eigen::Index>(layout.dimension());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t o = 0; o < outer; ++o) {
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const Complex v = local(r, c);
        if (v == Complex{}) continue;
        for (std::size_t i = 0; i < inner; ++i) {
          const auto row = static_cast<Eigen::Index>((o * dim + r) * inner + i);
          const auto col = static_cast<Eigen::Index>((o * dim + c) * inner + i);
          out(row, col) = v;
        }
      }
    }
  }
  return Operator(layout, std::move(out));
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw StructuralError(fmt::format("matrix is {}x{}, not square", h.rows(), h.cols()));
  }
  if (!hermitian_within(h, kHermitianTolerance)) {
    throw ValidationError("hermitian_eigendecomposition: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian_eigendecomposition: eigensolver did not converge");
  }
  // SelfAdjointEigenSolver returns eigenvalues in increasing order.
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

EigenDecomposition hermitian_eigendecomposition(const Operator& h) {
  return hermitian_eigendecomposition(h.matrix());
}

namespace {

ComplexVector phases(const Eigen::VectorXd& eigenvalues, double t_us) {
  ComplexVector out(eigenvalues.size());
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    out(k) = std::polar(1.0, -eigenvalues(k) * t_us);
  }
  return out;
}

}  // namespace

ComplexVector evolve(const ComplexVector& psi0, const EigenDecomposition& eig, double t_us) {
  if (psi0.size() != static_cast<Eigen::Index>(eig.dimension())) {
    throw StructuralError(fmt::format("state has {} amplitudes but decomposition dimension is {}",
                                      psi0.size(), eig.dimension()));
  }
  if (t_us == 0.0) return psi0;
  const ComplexVector coeffs = eig.eigenvectors.adjoint() * psi0;
  return eig.eigenvectors * phases(eig.eigenvalues, t_us).cwiseProduct(coeffs);
}

Ket evolve(const Ket& psi0, const EigenDecomposition& eig, double t_us) {
  return Ket(psi0.layout(), evolve(psi0.amplitudes(), eig, t_us));
}

SpectralPropagator::SpectralPropagator(EigenDecomposition eig, const ComplexVector& psi0)
    : eig_(std::move(eig)) {
  if (psi0.size() != static_cast<Eigen::Index>(eig_.dimension())) {
    throw StructuralError(fmt::format("state has {} amplitudes but decomposition dimension is {}",
                                      psi0.size(), eig_.dimension()));
  }
  coefficients_ = eig_.eigenvectors.adjoint() * psi0;
}

ComplexVector SpectralPropagator::at(double t_us) const {
  return eig_.eigenvectors * phases(eig_.eigenvalues, t_us).cwiseProduct(coefficients_);
}

Complex SpectralPropagator::amplitude(std::size_t basis_index, double t_us) const {
  const auto row = static_cast<Eigen::Index>(basis_index);
  if (row >= eig_.eigenvectors.rows()) {
    throw StructuralError(fmt::format("basis index {} out of range", basis_index));
  }
  Complex sum{};
  for (Eigen::Index k = 0; k < coefficients_.size(); ++k) {
    sum += eig_.eigenvectors(row, k) * std::polar(1.0, -eig_.eigenvalues(k) * t_us) *
           coefficients_(k);
  }
  return sum;
}

namespace {

// Stride of one qubit level in the row-major basis: the product of all mode
// dimensions.
std::size_t qubit_stride(const HilbertLayout& layout) {
  return layout.dimension() / static_cast<std::size_t>(layout.qubit_levels());
}

void check_leakage(const Eigen::VectorXd& level_populations) {
  double leaked = 0.0;
  for (Eigen::Index q = 2; q < level_populations.size(); ++q) leaked += level_populations(q);
  if (leaked > kLeakageThreshold) {
    throw LeakageError(
        fmt::format("qubit leakage above |e>: population {:.3e} exceeds {:.0e}", leaked,
                    kLeakageThreshold),
        leaked);
  }
}

}  // namespace

DensityMatrix2 reduce_to_qubit(const Ket& psi) {
  const HilbertLayout& layout = psi.layout();
  const std::size_t stride = qubit_stride(layout);
  const int levels = layout.qubit_levels();
  const ComplexVector& a = psi.amplitudes();

  Eigen::VectorXd populations = Eigen::VectorXd::Zero(levels);
  for (int q = 0; q < levels; ++q) {
    populations(q) = a.segment(static_cast<Eigen::Index>(q * stride),
                               static_cast<Eigen::Index>(stride))
                         .squaredNorm();
  }
  check_leakage(populations);

  // rho_{qq'} = sum_m a_{q,m} conj(a_{q',m})
  DensityMatrix2 rho;
  for (int q = 0; q < 2; ++q) {
    for (int qp = 0; qp < 2; ++qp) {
      const auto sq = a.segment(static_cast<Eigen::Index>(q * stride),
                                static_cast<Eigen::Index>(stride));
      const auto sqp = a.segment(static_cast<Eigen::Index>(qp * stride),
                                 static_cast<Eigen::Index>(stride));
      rho(q, qp) = sqp.dot(sq);  // dot conjugates its left argument
    }
  }
  return rho;
}

DensityMatrix2 reduce_to_qubit(const ComplexMatrix& rho, const HilbertLayout& layout) {
  const auto dim = static_cast<Eigen::Index>(layout.dimension());
  if (rho.rows() != dim || rho.cols() != dim) {
    throw StructuralError(fmt::format("density matrix is {}x{} but layout dimension is {}",
                                      rho.rows(), rho.cols(), dim));
  }
  const auto stride = static_cast<Eigen::Index>(qubit_stride(layout));
  const int levels = layout.qubit_levels();

  Eigen::VectorXd populations = Eigen::VectorXd::Zero(levels);
  for (int q = 0; q < levels; ++q) {
    populations(q) = rho.block(q * stride, q * stride, stride, stride).trace().real();
  }
  check_leakage(populations);

  DensityMatrix2 out;
  for (int q = 0; q < 2; ++q) {
    for (int qp = 0; qp < 2; ++qp) {
      out(q, qp) = rho.block(q * stride, qp * stride, stride, stride).trace();
    }
  }
  return out;
}

double purity(const DensityMatrix2& rho) { return (rho * rho).trace().real(); }

double overlap_probability(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) {
    throw StructuralError(fmt::format("overlap of vectors with sizes {} and {}", a.size(), b.size()));
  }
  return std::norm(a.dot(b));
}

}  // namespace cqad
