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

#ifndef CARNOT_GROUP_HPP_
#define CARNOT_GROUP_HPP_

#include <Eigen/Core>

namespace carnot {

using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTolerance = 1e-12;

/**
 * @brief Point of the free Carnot group of rank 3 and step 2.
 *
 * Memory layout
 * =============
 * x:  x1 x2 x3          (first layer)
 * y:  y12 y13 y23       (second layer, strict upper triangle of a skew matrix)
 *
 * Entries below the diagonal (y21, y31, y32) are never stored; use
 * second_layer() to read them with the skew sign applied.
 */
struct GroupElement {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();

  static GroupElement identity() { return {}; }

  /// y_ij for any i != j in {1,2,3}; y_ii = 0.
  double second_layer(int i, int j) const;

  bool is_approx(const GroupElement& other,
                 double tol = kDefaultTolerance) const;
};

/// Index of y_ij (i < j, 1-based letters) inside GroupElement::y.
constexpr int pair_index(int i, int j) {
  return (i == 1) ? (j == 2 ? 0 : 1) : 2;
}

/// Positive weights c_1, c_2, c_3 of an anisotropic dilation.
class DilationWeights {
 public:
  /// Throws DomainError("dilation_weights_positive") unless all c_i > 0.
  explicit DilationWeights(const Vec3& c);

  const Vec3& c() const { return c_; }

 private:
  Vec3 c_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);

GroupElement inverse(const GroupElement& g);

/// x_i -> c_i x_i, y_ij -> c_i c_j y_ij. A group automorphism.
GroupElement dilate(const DilationWeights& w, const GroupElement& g);

/// Endpoint of the constant control u applied for time t starting at g.
/// Requires t >= 0 and u >= 0 componentwise.
GroupElement flow_const(const GroupElement& g, const Vec3& u, double t);

}  // namespace carnot

#endif  // CARNOT_GROUP_HPP_
