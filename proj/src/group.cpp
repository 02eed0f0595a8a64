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

#include <cmath>
#include <string>

#include "carnot/errors.hpp"

namespace carnot {

double GroupElement::second_layer(int i, int j) const {
  if (i == j) return 0.0;
  if (i < j) return y[pair_index(i, j)];
  return -y[pair_index(j, i)];
}

bool GroupElement::is_approx(const GroupElement& other, double tol) const {
  return (x - other.x).cwiseAbs().maxCoeff() <= tol &&
         (y - other.y).cwiseAbs().maxCoeff() <= tol;
}

DilationWeights::DilationWeights(const Vec3& c) : c_(c) {
  for (int i = 0; i < 3; ++i) {
    if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
      throw DomainError("dilation_weights_positive",
                        "dilation weight c_" + std::to_string(i + 1) +
                            " must be strictly positive");
    }
  }
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  GroupElement out;
  out.x = a.x + b.x;
  // (x x'^T - x' x^T)_ij for (i,j) in (1,2), (1,3), (2,3).
  out.y[0] = a.y[0] + b.y[0] + a.x[0] * b.x[1] - a.x[1] * b.x[0];
  out.y[1] = a.y[1] + b.y[1] + a.x[0] * b.x[2] - a.x[2] * b.x[0];
  out.y[2] = a.y[2] + b.y[2] + a.x[1] * b.x[2] - a.x[2] * b.x[1];
  return out;
}

GroupElement inverse(const GroupElement& g) { return {-g.x, -g.y}; }

GroupElement dilate(const DilationWeights& w, const GroupElement& g) {
  const Vec3& c = w.c();
  GroupElement out;
  out.x = c.cwiseProduct(g.x);
  out.y[0] = c[0] * c[1] * g.y[0];
  out.y[1] = c[0] * c[2] * g.y[1];
  out.y[2] = c[1] * c[2] * g.y[2];
  return out;
}

GroupElement flow_const(const GroupElement& g, const Vec3& u, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("duration_nonnegative",
                      "flow duration must be nonnegative");
  }
  if ((u.array() < 0.0).any()) {
    throw DomainError("control_nonnegative",
                      "control components must be nonnegative");
  }
  // Along x(s) = x0 + s u the second layer gains t (x0_i u_j - x0_j u_i),
  // which is exactly the product g * exp(t u).
  return multiply(g, GroupElement{t * u, Vec3::Zero()});
}

}  // namespace carnot
