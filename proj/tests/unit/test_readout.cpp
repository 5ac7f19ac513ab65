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

#include <gtest/gtest.h>

#include "cqad/errors.hpp"
#include "test_support.hpp"

namespace cqad {
namespace {

const ResponseMatrix& m_a() { return testing::device_a().response_matrix("QA"); }
const ResponseMatrix& m_b() { return testing::device_b().response_matrix("QB"); }

TEST(ProbabilityVector, Validation) {
  EXPECT_NO_THROW(ProbabilityVector(0.3, 0.7));
  EXPECT_THROW(ProbabilityVector(0.6, 0.6), ValidationError);
  EXPECT_THROW(ProbabilityVector(-0.1, 1.1), ValidationError);
  const ProbabilityVector c = ProbabilityVector::clamped(-0.2, 1.1);
  EXPECT_EQ(c.p0(), 0.0);
  EXPECT_EQ(c.p1(), 1.0);
}

TEST(ResponseMatrix, Validation) {
  Eigen::Matrix2d bad;
  bad << 0.9, 0.2, 0.2, 0.8;
  EXPECT_THROW(ResponseMatrix{bad}, ValidationError);
  Eigen::Matrix2d singular;
  singular << 0.5, 0.5, 0.5, 0.5;
  EXPECT_THROW(ResponseMatrix{singular}, ValidationError);
  const ResponseMatrix f = ResponseMatrix::from_fidelities(0.985, 0.868);
  EXPECT_TRUE(f.entries().isApprox(m_a().entries(), 1e-15));
}

TEST(ApplyResponse, PublishedColumns) {
  const ProbabilityVector a = apply_response(m_a(), ProbabilityVector(1.0, 0.0));
  EXPECT_NEAR(a.p0(), 0.985, 1e-15);
  EXPECT_NEAR(a.p1(), 0.015, 1e-15);
  const ProbabilityVector b = apply_response(m_b(), ProbabilityVector(0.0, 1.0));
  EXPECT_NEAR(b.p0(), 0.149, 1e-15);
  EXPECT_NEAR(b.p1(), 0.851, 1e-15);
  const ProbabilityVector x(0.25, 0.75);
  EXPECT_EQ(apply_response(ResponseMatrix::identity(), x), x);
}

TEST(InvertUnconstrained, Examples) {
  const Eigen::Vector2d half = invert_unconstrained(m_a(), ProbabilityVector(0.5, 0.5));
  EXPECT_NEAR(half(0), 0.43142, 5e-6);
  EXPECT_NEAR(half(1), 0.56858, 5e-6);
  EXPECT_NEAR(half.sum(), 1.0, 1e-12);

  const Eigen::Vector2d rt = invert_unconstrained(m_a(), apply_response(m_a(), ProbabilityVector(0.3, 0.7)));
  EXPECT_NEAR(rt(0), 0.3, 1e-12);
  EXPECT_NEAR(rt(1), 0.7, 1e-12);

  const Eigen::Vector2d negative = invert_unconstrained(m_a(), ProbabilityVector(0.05, 0.95));
  EXPECT_NEAR(negative(0), -0.09613, 5e-6);
  EXPECT_NEAR(negative(0), (0.868 * 0.05 - 0.132 * 0.95) / 0.853, 1e-12);
}

TEST(CorrectConstrained, InteriorMatchesInversion) {
  const ProbabilityVector c = correct_constrained(m_a(), ProbabilityVector(0.5, 0.5));
  const Eigen::Vector2d u = invert_unconstrained(m_a(), ProbabilityVector(0.5, 0.5));
  EXPECT_NEAR(c.p0(), u(0), 1e-12);
  EXPECT_NEAR(c.p0(), 0.43142, 5e-6);
}

TEST(CorrectConstrained, BoundaryClampsToVertex) {
  const ProbabilityVector c = correct_constrained(m_a(), ProbabilityVector(0.05, 0.95));
  EXPECT_EQ(c.p0(), 0.0);
  EXPECT_EQ(c.p1(), 1.0);
  const ProbabilityVector top = correct_constrained(m_a(), ProbabilityVector(0.985, 0.015));
  EXPECT_EQ(top.p0(), 1.0);
  EXPECT_EQ(top.p1(), 0.0);
}

TEST(CorrectConstrained, IdentityReturnsInput) {
  const ProbabilityVector x(0.123, 0.877);
  EXPECT_EQ(correct_constrained(ResponseMatrix::identity(), x), x);
}

TEST(SimplexLeastSquares, TwoOutcomeAgreesWithClosedForm) {
  for (double p0 : {0.0, 0.05, 0.2, 0.5, 0.9, 1.0}) {
    const ProbabilityVector noisy(p0, 1.0 - p0);
    const ProbabilityVector closed = correct_constrained(m_b(), noisy);
    const Eigen::VectorXd general = solve_simplex_least_squares(m_b().entries(), noisy.vector());
    EXPECT_NEAR(general(0), closed.p0(), 1e-12) << p0;
    EXPECT_NEAR(general(1), closed.p1(), 1e-12) << p0;
  }
}

TEST(SimplexLeastSquares, ThreeOutcomeProjection) {
  // M = I: the solution is the Euclidean projection of b onto the simplex
  const Eigen::Vector3d b(0.8, 0.5, -0.3);
  const Eigen::VectorXd x = solve_simplex_least_squares(Eigen::Matrix3d::Identity(), b);
  EXPECT_NEAR(x(0), 0.65, 1e-12);
  EXPECT_NEAR(x(1), 0.35, 1e-12);
  EXPECT_EQ(x(2), 0.0);
}

}  // namespace
}  // namespace cqad
