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

#ifndef CARNOT_SECOND_ORDER_HPP_
#define CARNOT_SECOND_ORDER_HPP_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "carnot/adjoint.hpp"
#include "carnot/words.hpp"

namespace carnot {

/// Element a_i X_i + b_ij Y_ij of the Lie algebra; b = (b12, b13, b23).
struct AlgebraElement {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();

  static AlgebraElement basis(Letter l);
  bool is_approx(const AlgebraElement& o, double tol = 1e-12) const;
};

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement operator*(double s, const AlgebraElement& u);

/// [u, v]: only the first layers interact, [X_i, X_j] = Y_ij.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

/// e^{t ad v} z = z + t [v, z]; the series stops after the linear term.
AlgebraElement exp_ad(const AlgebraElement& v, double t,
                      const AlgebraElement& z);

/// Z_i = P_i V_i with P_0 = P_1 = id and
/// P_i = P_{i-1} o e^{tau_{i-1} ad V_{i-1}} where tau_{i-1} is the duration
/// of arc i-1. Throws DomainError("nonempty_word") on an empty word.
std::vector<AlgebraElement> conjugated_fields(const Word& w);

/// <lambda, [X_i, X_j]> for the covector a, read off the adjoint flow: it is
/// the rate of h_j under the control e_i, i.e. the (j, i) entry of R.
double bracket_pairing(const AdjointCovector& a, Letter i, Letter j);

/// <lambda, u> for an element of the second layer.
double pair_second_layer(const AdjointCovector& a, const AlgebraElement& u);

/// G(alpha) = sum_{i<j} alpha_i alpha_j <lambda, [Z_i, Z_j]>.
double quadratic_form(const std::vector<AlgebraElement>& z,
                      const AdjointCovector& a, const Eigen::VectorXd& alpha);

enum class Verdict { kNotOptimal, kInconclusive };

std::string to_string(Verdict v);

struct SecondOrderReport {
  /// Orthonormal basis of W as columns.
  Eigen::MatrixXd w_basis;
  /// G restricted to W in that basis.
  Eigen::MatrixXd g_restricted;
  Eigen::VectorXd eigenvalues;
  Verdict verdict = Verdict::kInconclusive;
  int switches = 0;
  /// max over basis vectors of |sum alpha_i| + |sum alpha_i Z_i|_inf.
  double constraint_residual = 0.0;
};

/// Relative singular-value cutoff for the null space of the W system.
inline constexpr double kNullSpaceCutoff = 1e-10;
/// Eigenvalues of the restricted form above this count as positive.
inline constexpr double kPositiveEigenvalue = 1e-10;

/// Second-order test for a bang-bang word produced by `a`: the word must
/// match synthesize(a, total duration) to 1e-8 and have k >= 2 switchings.
/// Returns "not-optimal" iff G restricted to W has a positive eigenvalue.
SecondOrderReport ag_test(const Word& w, const AdjointCovector& a);

}  // namespace carnot

#endif  // CARNOT_SECOND_ORDER_HPP_
