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

#include "carnot/probability.hpp"

#include <gtest/gtest.h>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

using D = DiscreteDistribution;

void expect_point(const PqrPoint& x, double p, double q, double r) {
  EXPECT_NEAR(x.p(), p, 1e-15);
  EXPECT_NEAR(x.q(), q, 1e-15);
  EXPECT_NEAR(x.r(), r, 1e-15);
}

TEST(ProbabilityTest, DistinctConstantsGiveVertex) {
  expect_point(dice_pqr(D::constant(0), D::constant(1), D::constant(2)), 1, 1,
               0);
}

TEST(ProbabilityTest, ReferenceTriples) {
  const D three({{-1, 0.3}, {0.5, 0.4}, {2, 0.3}});
  expect_point(dice_pqr(D::constant(1), three, D::constant(0)), 0.3, 0.3, 1);
  const D split({{-1, 0.5}, {2, 0.5}});
  expect_point(dice_pqr(D::constant(0), D::constant(1), split), 1, 0.5, 0.5);
  // Interleaved supports; exact values in tests/oracles/derive.py.
  const D d1({{0, 0.5}, {3, 0.5}});
  const D d2({{1, 1.0 / 3}, {4, 2.0 / 3}});
  const D d3({{2, 0.25}, {5, 0.75}});
  expect_point(dice_pqr(d1, d2, d3), 5.0 / 6, 5.0 / 6, 0.125);
}

TEST(ProbabilityTest, DiceWordReproducesPoint) {
  const D d1({{0, 0.5}, {3, 0.5}});
  const D d2({{1, 1.0 / 3}, {4, 2.0 / 3}});
  const D d3({{2, 0.25}, {5, 0.75}});
  const Word w = dice_word(d1, d2, d3);
  EXPECT_TRUE(is_section(w, 1e-15));
  EXPECT_LT((pqr(w).vec() - dice_pqr(d1, d2, d3).vec()).norm(), 1e-15);
}

TEST(ProbabilityTest, ComplementLaw) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DiceTriple t = random_dice(5, s);
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      EXPECT_NEAR(precedence_probability(t[i], t[j]) +
                      precedence_probability(t[j], t[i]),
                  1.0, 1e-14);
    }
  }
}

TEST(ProbabilityTest, AffineMapsLeavePointUnchanged) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const DiceTriple t = random_dice(4, s);
    auto mapped = [](const D& d) {
      std::vector<Atom> atoms;
      for (const auto& a : d.atoms()) atoms.push_back({3.0 * a.value - 7.0, a.mass});
      return D(atoms);
    };
    const Vec3 x = dice_pqr(t[0], t[1], t[2]).vec();
    const Vec3 y = dice_pqr(mapped(t[0]), mapped(t[1]), mapped(t[2])).vec();
    EXPECT_LT((x - y).norm(), 1e-15);
  }
}

TEST(ProbabilityTest, FacetLawWhenThirdBelowFirst) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    DiceTriple t = random_dice(4, s);
    // Shift d3 entirely below d1: r = P(d3 < d1) = 1.
    double lo = 1e300;
    for (const auto& a : t[0].atoms()) lo = std::min(lo, a.value);
    std::vector<Atom> below;
    for (const auto& a : t[2].atoms())
      below.push_back({a.value - 1000.0 + (lo - 1.0), a.mass});
    const PqrPoint x = dice_pqr(t[0], t[1], D(below));
    EXPECT_NEAR(x.r(), 1.0, 1e-15);
    EXPECT_LE(x.p() + x.q(), 1.0 + 1e-15);
  }
}

TEST(ProbabilityTest, TiesAreRejectedWithThePair) {
  try {
    dice_pqr(D({{0, 0.5}, {1, 0.5}}), D({{1, 1}}), D::constant(5));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.invariant(), "pairwise_no_ties");
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(ProbabilityTest, DistributionInvariants) {
  EXPECT_THROW(D({}), DomainError);
  EXPECT_THROW(D({{0, 0.5}, {1, 0.4}}), DomainError);
  EXPECT_THROW(D({{0, 0.5}, {0, 0.5}}), DomainError);
  EXPECT_THROW(D({{0, -0.5}, {1, 1.5}}), DomainError);
  const D sorted({{2, 0.5}, {1, 0.5}});
  EXPECT_EQ(sorted.atoms().front().value, 1.0);
}

TEST(ProbabilityTest, RandomCheckAttainsAll) {
  const Solver solver = [](const PqrPoint& x) { return fit(x); };
  const DiceReport r = random_dice_check(25, 4, 9, solver);
  EXPECT_EQ(r.trials, 25);
  EXPECT_EQ(r.attained, 25);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.per_trial.size(), 25u);
}

TEST(ProbabilityTest, SolverFailuresAreListed) {
  const Solver bad = [](const PqrPoint&) -> FitResult {
    throw DomainError("solver_budget_positive", "no budget");
  };
  const DiceReport r = random_dice_check(3, 3, 1, bad);
  EXPECT_EQ(r.attained, 0);
  EXPECT_EQ(r.failures.size(), 3u);
  EXPECT_EQ(r.per_trial[0].error, "no budget");
}

}  // namespace
}  // namespace carnot
