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

#include "cqad/readout.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cqad/errors.hpp"

namespace cqad {

ProbabilityVector::ProbabilityVector(double p0, double p1) : p0_(p0), p1_(p1) {
  if (!std::isfinite(p0) || !std::isfinite(p1)) {
    throw ValidationError("probability vector: components must be finite");
  }
  if (p0 < 0.0 || p1 < 0.0) {
    throw ValidationError(
        fmt::format("probability vector: p0, p1 >= 0 violated (got {}, {})", p0, p1));
  }
  if (std::abs(p0 + p1 - 1.0) > kProbabilityTolerance) {
    throw ValidationError(
        fmt::format("probability vector: p0 + p1 = 1 violated (sum {})", p0 + p1));
  }
}

ProbabilityVector ProbabilityVector::clamped(double p0, double p1) {
  p0 = std::max(0.0, p0);
  p1 = std::max(0.0, p1);
  const double sum = p0 + p1;
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw ValidationError("probability vector: cannot project a zero or non-finite vector");
  }
  const double q0 = std::clamp(p0 / sum, 0.0, 1.0);
  return ProbabilityVector(Unchecked{}, q0, 1.0 - q0);
}

ResponseMatrix::ResponseMatrix(const Eigen::Matrix2d& entries) : entries_(entries) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double v = entries_(r, c);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw ValidationError(
            fmt::format("response matrix: entry ({}, {}) in [0, 1] violated (got {})", r, c, v));
      }
    }
  }
  for (int c = 0; c < 2; ++c) {
    const double sum = entries_.col(c).sum();
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw ValidationError(
          fmt::format("response matrix: column {} sums to 1 violated (sum {})", c, sum));
    }
  }
  if (std::abs(entries_.determinant()) <= kSingularTolerance) {
    throw ValidationError("response matrix: determinant != 0 violated (matrix is singular)");
  }
}

ResponseMatrix ResponseMatrix::from_fidelities(double p0_given_0, double p1_given_1) {
  Eigen::Matrix2d m;
  m << p0_given_0, 1.0 - p1_given_1, 1.0 - p0_given_0, p1_given_1;
  return ResponseMatrix(m);
}

ResponseMatrix ResponseMatrix::identity() { return ResponseMatrix(Eigen::Matrix2d::Identity()); }

ProbabilityVector apply_response(const ResponseMatrix& m, const ProbabilityVector& ideal) {
  const Eigen::Vector2d noisy = m.entries() * ideal.vector();
  // Column-stochastic M maps the simplex into itself; clamping only absorbs
  // rounding in the last bit.
  return ProbabilityVector::clamped(noisy(0), noisy(1));
}

Eigen::Vector2d invert_unconstrained(const ResponseMatrix& m, const ProbabilityVector& noisy) {
  const Eigen::Matrix2d& e = m.entries();
  const double det = e.determinant();
  if (std::abs(det) <= kSingularTolerance) {
    throw InversionError("response matrix is singular; cannot invert");
  }
  Eigen::Matrix2d inverse;
  inverse << e(1, 1), -e(0, 1), -e(1, 0), e(0, 0);
  inverse /= det;
  return inverse * noisy.vector();
}

ProbabilityVector correct_constrained(const ResponseMatrix& m, const ProbabilityVector& noisy) {
  // x = (x0, 1 - x0) gives M x - xi = (m1 - xi) + x0 (m0 - m1) with m_c the
  // columns of M, a scalar quadratic in x0 minimised at -r.d / d.d.
  const Eigen::Vector2d m0 = m.entries().col(0);
  const Eigen::Vector2d m1 = m.entries().col(1);
  const Eigen::Vector2d d = m0 - m1;
  const Eigen::Vector2d r = m1 - noisy.vector();
  const double x0 = std::clamp(-r.dot(d) / d.squaredNorm(), 0.0, 1.0);
  return ProbabilityVector::clamped(x0, 1.0 - x0);
}

Eigen::VectorXd solve_simplex_least_squares(const Eigen::MatrixXd& m, const Eigen::VectorXd& b,
                                            double tolerance) {
  const Eigen::Index n = m.cols();
  if (n == 0 || m.rows() != b.size()) {
    throw StructuralError(fmt::format("simplex least squares: M is {}x{}, b has {} entries",
                                      m.rows(), m.cols(), b.size()));
  }
  const Eigen::MatrixXd q = m.transpose() * m;
  const Eigen::VectorXd c = -m.transpose() * b;
  const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
  const double tol = tolerance * scale;

  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  std::vector<bool> at_bound(static_cast<std::size_t>(n), false);

  const int max_iterations = 50 * static_cast<int>(n) + 50;
  for (int iter = 0; iter < max_iterations; ++iter) {
    std::vector<Eigen::Index> free;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!at_bound[static_cast<std::size_t>(i)]) free.push_back(i);
    }
    const auto nf = static_cast<Eigen::Index>(free.size());
    const Eigen::VectorXd grad = q * x + c;

    // Equality-constrained step on the free set:
    //   Q_FF p_F - nu 1 = -g_F,   1^T p_F = 0.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nf + 1, nf + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nf + 1);
    for (Eigen::Index a = 0; a < nf; ++a) {
      for (Eigen::Index bb = 0; bb < nf; ++bb) kkt(a, bb) = q(free[a], free[bb]);
      kkt(a, nf) = -1.0;
      kkt(nf, a) = 1.0;
      rhs(a) = -grad(free[a]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) {
      throw InversionError("simplex least squares: response matrix lacks full column rank");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    const double nu = sol(nf);

    Eigen::VectorXd step = Eigen::VectorXd::Zero(n);
    for (Eigen::Index a = 0; a < nf; ++a) step(free[a]) = sol(a);

    if (step.cwiseAbs().maxCoeff() <= tolerance) {
      // Stationary on the working set: bound multipliers mu_i = g_i - nu.
      Eigen::Index worst = -1;
      double worst_mu = -tol;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!at_bound[static_cast<std::size_t>(i)]) continue;
        const double mu = grad(i) - nu;
        if (mu < worst_mu) {
          worst_mu = mu;
          worst = i;
        }
      }
      if (worst < 0) break;
      at_bound[static_cast<std::size_t>(worst)] = false;
      continue;
    }

    double alpha = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index i : free) {
      if (step(i) < 0.0) {
        const double ratio = -x(i) / step(i);
        if (ratio < alpha) {
          alpha = ratio;
          blocking = i;
        }
      }
    }
    x += alpha * step;
    if (blocking >= 0) {
      x(blocking) = 0.0;
      at_bound[static_cast<std::size_t>(blocking)] = true;
    }
  }

  x = x.cwiseMax(0.0);
  return x / x.sum();
}

}  // namespace cqad
