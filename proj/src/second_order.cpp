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

#include "carnot/second_order.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

constexpr double kConsistencyTolerance = 1e-8;

void check_consistent(const Word& w, const AdjointCovector& a) {
  const Synthesis s = synthesize(a, w.total_duration());
  bool ok = s.word.size() == w.size();
  for (std::size_t i = 0; ok && i < w.size(); ++i) {
    ok = s.word.arcs[i].letter == w.arcs[i].letter &&
         std::abs(s.word.arcs[i].duration - w.arcs[i].duration) <=
             kConsistencyTolerance;
  }
  if (!ok) {
    throw DomainError("word_matches_covector",
                      "the word is not the bang-bang synthesis of the "
                      "covector over its own duration");
  }
}

}  // namespace

AlgebraElement AlgebraElement::basis(Letter l) {
  AlgebraElement e;
  e.a[l - 1] = 1.0;
  return e;
}

bool AlgebraElement::is_approx(const AlgebraElement& o, double tol) const {
  return (a - o.a).cwiseAbs().maxCoeff() <= tol &&
         (b - o.b).cwiseAbs().maxCoeff() <= tol;
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
  return {u.a + v.a, u.b + v.b};
}

AlgebraElement operator*(double s, const AlgebraElement& u) {
  return {s * u.a, s * u.b};
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement out;
  out.b[pair_index(1, 2)] = u.a[0] * v.a[1] - u.a[1] * v.a[0];
  out.b[pair_index(1, 3)] = u.a[0] * v.a[2] - u.a[2] * v.a[0];
  out.b[pair_index(2, 3)] = u.a[1] * v.a[2] - u.a[2] * v.a[1];
  return out;
}

AlgebraElement exp_ad(const AlgebraElement& v, double t,
                      const AlgebraElement& z) {
  return z + t * bracket(v, z);
}

std::vector<AlgebraElement> conjugated_fields(const Word& w) {
  const Word c = canonicalize(w);
  if (c.empty()) {
    throw DomainError("nonempty_word", "the word has no arcs");
  }
  std::vector<AlgebraElement> z;
  z.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    AlgebraElement zi = AlgebraElement::basis(c.arcs[i].letter);
    // P_i = e^{tau_1 ad V_1} o ... o e^{tau_{i-1} ad V_{i-1}}; apply the
    // innermost factor first.
    for (std::size_t m = i; m-- > 1;) {
      zi = exp_ad(AlgebraElement::basis(c.arcs[m].letter), c.arcs[m].duration,
                  zi);
    }
    z.push_back(zi);
  }
  return z;
}

double bracket_pairing(const AdjointCovector& a, Letter i, Letter j) {
  return a.pair(j, i);
}

double pair_second_layer(const AdjointCovector& a, const AlgebraElement& u) {
  return u.b[pair_index(1, 2)] * bracket_pairing(a, 1, 2) +
         u.b[pair_index(1, 3)] * bracket_pairing(a, 1, 3) +
         u.b[pair_index(2, 3)] * bracket_pairing(a, 2, 3);
}

double quadratic_form(const std::vector<AlgebraElement>& z,
                      const AdjointCovector& a, const Eigen::VectorXd& alpha) {
  double g = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      g += alpha[i] * alpha[j] * pair_second_layer(a, bracket(z[i], z[j]));
    }
  }
  return g;
}

std::string to_string(Verdict v) {
  return v == Verdict::kNotOptimal ? "not-optimal" : "inconclusive";
}

SecondOrderReport ag_test(const Word& w, const AdjointCovector& a) {
  const Word c = canonicalize(w);
  const int k = static_cast<int>(c.size()) - 1;
  if (k < 2) {
    throw DomainError("at_least_two_switchings",
                      "the second-order test needs k >= 2 switchings");
  }
  check_consistent(c, a);

  const std::vector<AlgebraElement> z = conjugated_fields(c);
  const int n = k + 1;

  // Rows: sum alpha_i, then the X and Y coefficients of sum alpha_i Z_i.
  Eigen::MatrixXd system(7, n);
  for (int i = 0; i < n; ++i) {
    system(0, i) = 1.0;
    system.block<3, 1>(1, i) = z[i].a;
    system.block<3, 1>(4, i) = z[i].b;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = kNullSpaceCutoff * (sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++rank;
  }

  SecondOrderReport report;
  report.switches = k;
  report.w_basis = svd.matrixV().rightCols(n - rank);

  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * pair_second_layer(a, bracket(z[i], z[j]));
      form(i, j) = v;
      form(j, i) = v;
    }
  }
  report.g_restricted =
      report.w_basis.transpose() * form * report.w_basis;
  for (int col = 0; col < report.w_basis.cols(); ++col) {
    const Eigen::VectorXd res = system * report.w_basis.col(col);
    report.constraint_residual =
        std::max(report.constraint_residual, res.cwiseAbs().maxCoeff());
  }

  if (report.g_restricted.size() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(report.g_restricted);
    report.eigenvalues = eig.eigenvalues();
    if (report.eigenvalues.maxCoeff() > kPositiveEigenvalue) {
      report.verdict = Verdict::kNotOptimal;
    }
  }
  return report;
}

}  // namespace carnot
