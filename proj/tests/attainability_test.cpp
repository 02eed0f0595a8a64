// Copyright 2026 The Carnot Reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carnot/attainability.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

TEST(AttainabilityTest, PatternEnumeration) {
  const auto p3 = enumerate_patterns(3);
  EXPECT_EQ(p3.size(), 6u);
  EXPECT_EQ(p3.front(), (std::vector<Letter>{1, 2, 3}));
  // Count of no-repeat words using all three letters: 3 * 2^(n-1) - 6.
  std::size_t expected = 0;
  for (int n = 3; n <= 8; ++n) expected += 3 * (1u << (n - 1)) - 6;
  const auto p8 = enumerate_patterns(8);
  EXPECT_EQ(p8.size(), expected);
  EXPECT_EQ(p8.size(), 720u);
  std::set<std::vector<Letter>> unique(p8.begin(), p8.end());
  EXPECT_EQ(unique.size(), p8.size());
  for (std::size_t i = 1; i < p8.size(); ++i)
    EXPECT_LE(p8[i - 1].size(), p8[i].size());
}

TEST(AttainabilityTest, VertexIsAttainedEarly) {
  const FitResult r = fit(PqrPoint(1, 1, 0));
  ASSERT_EQ(r.status, FitStatus::kAttained);
  EXPECT_LE(r.residual, 1e-7);
  EXPECT_EQ(r.patterns_tried, 1);
}

TEST(AttainabilityTest, HiddenWordsAreRecovered) {
  FitOptions opt;
  opt.tol = 1e-9;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Word w = random_word(3 + static_cast<int>(s % 6), 100 + s);
    const FitResult r = fit(pqr(w), opt);
    ASSERT_EQ(r.status, FitStatus::kAttained) << "seed " << s;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_LE(r.residual, 1e-8);
    EXPECT_LE(r.witness->size(), 8u);
    EXPECT_LT((pqr(*r.witness).vec() - pqr(w).vec()).norm(), 1e-8);
  }
}

TEST(AttainabilityTest, CounterexamplePointsAttained) {
  EXPECT_EQ(fit(PqrPoint(1, 0.5, 0.5)).status, FitStatus::kAttained);
  EXPECT_EQ(fit(PqrPoint(0.3, 0.3, 1)).status, FitStatus::kAttained);
}

TEST(AttainabilityTest, PointAboveGoldenCapIsNotFound) {
  const FitResult r = fit(PqrPoint(0.7, 0.7, 0.7));
  EXPECT_EQ(r.status, FitStatus::kNotFound);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.patterns_tried, 720);
  EXPECT_GT(r.residual, 1e-3);
}

TEST(AttainabilityTest, FitIsDeterministic) {
  const FitResult a = fit(PqrPoint(0.4, 0.55, 0.6));
  const FitResult b = fit(PqrPoint(0.4, 0.55, 0.6));
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
  EXPECT_EQ(a.residual, b.residual);
}

TEST(AttainabilityTest, GoldenProbe) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const Vec3 x = Vec3::Constant(phi);
  const Vec3 n = Vec3::Ones().normalized();
  EXPECT_EQ(probe(x, n, 1e-3), ProbeOutcome::kUnattainableBeyond);
  EXPECT_EQ(probe(x, -n, 1e-3), ProbeOutcome::kAttainableBeyond);
  EXPECT_EQ(probe(Vec3(1, 0.5, 0.5), Vec3(1, 0, 0), 1e-3),
            ProbeOutcome::kUnattainableBeyond);
}

TEST(AttainabilityTest, MaxMinFindsGoldenRatio) {
  const MaxMinResult m = maximize_min_coordinate();
  EXPECT_NEAR(m.value, 0.6180340, 1e-4);
  EXPECT_NEAR(pqr(m.witness).vec().minCoeff(), m.value, 1e-12);
}

TEST(AttainabilityTest, RejectsBadOptions) {
  FitOptions opt;
  opt.max_arcs = 2;
  EXPECT_THROW(fit(PqrPoint(0.5, 0.5, 0.5), opt), DomainError);
  opt = {};
  opt.tol = 0;
  EXPECT_THROW(fit(PqrPoint(0.5, 0.5, 0.5), opt), DomainError);
  EXPECT_THROW(probe(Vec3(0.5, 0.5, 0.5), Vec3(1, 0, 0), 0.0), DomainError);
}

}  // namespace
}  // namespace carnot
