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

#ifndef CARNOT_ADJOINT_HPP_
#define CARNOT_ADJOINT_HPP_

#include <array>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "carnot/group.hpp"
#include "carnot/words.hpp"

namespace carnot {

/// Components within this distance of the maximum count as tied.
inline constexpr double kTieTolerance = 1e-10;

/**
 * @brief Vertical part (h, R) of an extremal.
 *
 * h = (h_1, h_2, h_3) are the values of the first-layer Hamiltonians and
 * R = (h12, h13, h23) stores the constant skew matrix; the cyclic entry
 * h31 = -h13 is derived. Along the flow hdot = R u and R stays constant.
 */
struct AdjointCovector {
  Vec3 h = Vec3::Zero();
  Vec3 R = Vec3::Zero();

  /// h_ij for i, j in {1,2,3}, with h_ji = -h_ij.
  double pair(int i, int j) const;
  double h12() const { return R[0]; }
  double h23() const { return R[2]; }
  double h31() const { return -R[1]; }
  Eigen::Matrix3d skew() const;
};

enum class Regime { kBangBang, kSingularEdge, kSingularVertex, kMixed };

std::string to_string(Regime r);

struct RegimeReport {
  Regime kind = Regime::kBangBang;
  double casimir = 0.0;
  /// K = h12 + h23 + h31 - C.
  double K = 0.0;
  int switches = 0;
  /// Letters spanning the invariant edge (singular-edge) or empty.
  std::vector<Letter> singular_face;
};

/// A switching (or boundary) instant of a synthesized adjoint trajectory.
struct SwitchEvent {
  double t = 0.0;
  Vec3 h = Vec3::Zero();
};

struct Synthesis {
  Word word;
  RegimeReport report;
  std::vector<SwitchEvent> events;
  AdjointCovector final_state;
};

/// C = h1 h23 + h2 h31 + h3 h12.
double casimir(const AdjointCovector& a);

/// h12 + h23 + h31 - C.
double casimir_gap(const AdjointCovector& a);

/// Exact flow along a word: h <- h + t * (column i of R) per arc (i, t).
AdjointCovector adjoint_flow(const AdjointCovector& a, const Word& w);

/// Letters whose vertex controls maximize sum u_i h_i over the simplex: one
/// letter (vertex), two (edge) or all three (whole simplex).
std::vector<Letter> maximizing_controls(const AdjointCovector& a,
                                        double tie_tol = kTieTolerance);

/// Scales (h, R) by 1 / max h_i. Throws DomainError("covector_normalizable")
/// when max h_i <= 0.
AdjointCovector normalize(const AdjointCovector& a);

/// Integrates the closed loop "control = maximizing vertex" for the given
/// horizon. Stops early at an invariant edge or vertex of the quadrant and
/// reports it. Requires max h_i = 1.
Synthesis synthesize(const AdjointCovector& a, double horizon);

/// Triangle-type covector: h12, h23, h31 share one strict sign.
bool is_triangle_type(const AdjointCovector& a);

/// Time spent on each face F_1, F_2, F_3 during one period of a
/// triangle-type trajectory: F_1: K/(h31 h12), F_2: K/(h12 h23),
/// F_3: K/(h23 h31), with the coefficients taken positive (an all-negative
/// triple is flipped together with C).
struct FacePassageTimes {
  std::array<double, 3> on_face{};
  double K = 0.0;

  double face(Letter l) const { return on_face[l - 1]; }
  double period() const { return on_face[0] + on_face[1] + on_face[2]; }
};

/// Throws DomainError("triangle_regime") for non triangle-type covectors.
/// K = 0 (the vertex V) is returned with all times zero.
FacePassageTimes switching_times(const AdjointCovector& a);

}  // namespace carnot

#endif  // CARNOT_ADJOINT_HPP_
