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

namespace cqad {

inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kSingularTolerance = 1e-9;

/// Two-outcome probability vector (p0, p1) = (P(|0>), P(|1>)).
class ProbabilityVector {
 public:
  /// Throws ValidationError unless p0, p1 >= 0 and |p0 + p1 - 1| <= 1e-9.
  ProbabilityVector(double p0, double p1);

  /// Projects onto the simplex: negative components clamp to 0 and the rest
  /// is renormalised. Used for solver outputs, never for user input.
  static ProbabilityVector clamped(double p0, double p1);

  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }
  Eigen::Vector2d vector() const { return {p0_, p1_}; }

  bool operator==(const ProbabilityVector&) const = default;

 private:
  struct Unchecked {};
  ProbabilityVector(Unchecked, double p0, double p1) : p0_(p0), p1_(p1) {}

  double p0_;
  double p1_;
};

/// Column-stochastic readout confusion matrix: column c is
/// (p(0|c), p(1|c)), the outcome distribution for prepared state |c>.
class ResponseMatrix {
 public:
  /// Throws ValidationError if an entry is outside [0, 1], a column does not
  /// sum to 1 within 1e-9, or |det| <= 1e-9.
  explicit ResponseMatrix(const Eigen::Matrix2d& entries);

  /// Builds from the two assignment fidelities p(0|0) and p(1|1).
  static ResponseMatrix from_fidelities(double p0_given_0, double p1_given_1);
  static ResponseMatrix identity();

  const Eigen::Matrix2d& entries() const noexcept { return entries_; }
  double determinant() const { return entries_.determinant(); }
  /// p(outcome | prepared).
  double probability(int outcome, int prepared) const { return entries_(outcome, prepared); }

  bool operator==(const ResponseMatrix& other) const { return entries_ == other.entries_; }

 private:
  Eigen::Matrix2d entries_;
};

/// noisy = M * ideal.
ProbabilityVector apply_response(const ResponseMatrix& m, const ProbabilityVector& ideal);

/// M^{-1} * noisy. Components sum to 1 but may be negative. Throws
/// InversionError if |det M| <= 1e-9.
Eigen::Vector2d invert_unconstrained(const ResponseMatrix& m, const ProbabilityVector& noisy);

/// argmin over {x >= 0, x0 + x1 = 1} of ||M x - noisy||^2. Solved in closed
/// form as a scalar quadratic in x0 over [0, 1].
ProbabilityVector correct_constrained(const ResponseMatrix& m, const ProbabilityVector& noisy);

/// General-N version: argmin over the probability simplex of ||M x - b||^2,
/// by a primal active-set method on the bound constraints with the sum
/// constraint kept in every subproblem. M must have full column rank.
Eigen::VectorXd solve_simplex_least_squares(const Eigen::MatrixXd& m, const Eigen::VectorXd& b,
                                            double tolerance = 1e-12);

}  // namespace cqad
