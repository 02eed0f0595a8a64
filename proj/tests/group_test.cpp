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

#include "carnot/group.hpp"

#include <gtest/gtest.h>

#include "carnot/errors.hpp"
#include "carnot/rng.hpp"

namespace carnot {
namespace {

GroupElement element(Vec3 x, Vec3 y) { return {x, y}; }

TEST(GroupTest, MultiplyMatchesExactProduct) {
  // Reference values from tests/oracles/derive.py.
  const GroupElement a = element({1, 2, 3}, {0.5, -1, 2});
  const GroupElement b = element({-1, 0.5, 2}, {1, 1, 1});
  const GroupElement ab = multiply(a, b);
  EXPECT_TRUE(ab.is_approx(element({0, 2.5, 5}, {4, 5, 5.5}), 0.0));
}

TEST(GroupTest, SecondLayerIsSkew) {
  const GroupElement g = element({0, 0, 0}, {1, 2, 3});
  EXPECT_EQ(g.second_layer(1, 2), 1);
  EXPECT_EQ(g.second_layer(2, 1), -1);
  EXPECT_EQ(g.second_layer(3, 1), -2);
  EXPECT_EQ(g.second_layer(2, 2), 0);
}

TEST(GroupTest, InverseIsNegation) {
  const GroupElement g = element({1, -2, 3}, {4, 5, -6});
  const GroupElement inv = inverse(g);
  EXPECT_TRUE(inv.is_approx(element({-1, 2, -3}, {-4, -5, 6}), 0.0));
  EXPECT_TRUE(multiply(g, inv).is_approx(GroupElement::identity(), 0.0));
}

TEST(GroupTest, FlowsOfOneGeneratorCommute) {
  const GroupElement a = flow_const(GroupElement::identity(), Vec3(1, 0, 0), 0.3);
  const GroupElement b = flow_const(a, Vec3(1, 0, 0), 0.7);
  EXPECT_TRUE(b.is_approx(element({1, 0, 0}, {0, 0, 0})));
}

TEST(GroupTest, TwoFlowsGiveCommutator) {
  // e^{X1} e^{X2} e^{-X1} e^{-X2} lands at y12 = 2 under this group law.
  GroupElement g = GroupElement::identity();
  g = multiply(g, element({1, 0, 0}, {0, 0, 0}));
  g = multiply(g, element({0, 1, 0}, {0, 0, 0}));
  g = multiply(g, element({-1, 0, 0}, {0, 0, 0}));
  g = multiply(g, element({0, -1, 0}, {0, 0, 0}));
  EXPECT_TRUE(g.is_approx(element({0, 0, 0}, {2, 0, 0})));
}

TEST(GroupTest, DilationIsAutomorphism) {
  Rng rng(7);
  const DilationWeights w(Vec3(0.5, 2.0, 3.0));
  for (int i = 0; i < 100; ++i) {
    GroupElement a, b;
    for (int k = 0; k < 3; ++k) {
      a.x[k] = rng.uniform(-1, 1);
      a.y[k] = rng.uniform(-1, 1);
      b.x[k] = rng.uniform(-1, 1);
      b.y[k] = rng.uniform(-1, 1);
    }
    EXPECT_TRUE(dilate(w, multiply(a, b))
                    .is_approx(multiply(dilate(w, a), dilate(w, b))));
  }
}

TEST(GroupTest, DilationScalesSecondLayerByProducts) {
  const DilationWeights w(Vec3(2, 3, 5));
  const GroupElement d = dilate(w, element({1, 1, 1}, {1, 1, 1}));
  EXPECT_TRUE(d.is_approx(element({2, 3, 5}, {6, 10, 15}), 0.0));
}

TEST(GroupTest, RejectsBadArguments) {
  EXPECT_THROW(DilationWeights(Vec3(1, 0, 1)), DomainError);
  EXPECT_THROW(flow_const(GroupElement::identity(), Vec3(1, 0, 0), -1.0),
               DomainError);
  EXPECT_THROW(flow_const(GroupElement::identity(), Vec3(-1, 0, 0), 1.0),
               DomainError);
  try {
    DilationWeights(Vec3(-1, 1, 1));
  } catch (const DomainError& e) {
    EXPECT_EQ(e.invariant(), "dilation_weights_positive");
  }
}

}  // namespace
}  // namespace carnot
