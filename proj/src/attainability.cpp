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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "carnot/errors.hpp"
#include "carnot/rng.hpp"

namespace carnot {
namespace {

constexpr int kMaxPatternLength = 16;

using Jacobian = Eigen::Matrix<double, 3, Eigen::Dynamic>;

// Polynomial map from per-letter durations of a fixed pattern to (p, q, r),
// evaluated with prefix and suffix sums.
class PatternModel {
 public:
  explicit PatternModel(const std::vector<Letter>& pattern) {
    for (Letter l : pattern) letter_.push_back(l - 1);
    for (int i = 0; i < static_cast<int>(letter_.size()); ++i) {
      groups_[letter_[i]].push_back(i);
    }
  }

  int size() const { return static_cast<int>(letter_.size()); }
  const std::vector<int>& group(int l) const { return groups_[l]; }

  Vec3 eval(const Eigen::VectorXd& d) const {
    double before[3] = {0.0, 0.0, 0.0};
    double p[3][3] = {{0.0}};
    for (int m = 0; m < size(); ++m) {
      const int j = letter_[m];
      for (int i = 0; i < 3; ++i) p[i][j] += before[i] * d[m];
      before[j] += d[m];
    }
    return {p[0][1], p[1][2], p[2][0]};
  }

  // Rows follow (p12, p23, p31): d p_ij / d d_l is the mass of letter i
  // before l when l carries j, and the mass of letter j after l when l
  // carries i.
  Vec3 eval(const Eigen::VectorXd& d, Jacobian& jac) const {
    const int n = size();
    static constexpr int kPairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    double before[kMaxPatternLength + 1][3];
    double after[kMaxPatternLength + 1][3];
    before[0][0] = before[0][1] = before[0][2] = 0.0;
    for (int m = 0; m < n; ++m) {
      for (int i = 0; i < 3; ++i) before[m + 1][i] = before[m][i];
      before[m + 1][letter_[m]] += d[m];
    }
    after[n][0] = after[n][1] = after[n][2] = 0.0;
    for (int m = n - 1; m >= 0; --m) {
      for (int i = 0; i < 3; ++i) after[m][i] = after[m + 1][i];
      after[m][letter_[m]] += d[m];
    }
    jac.resize(3, n);
    Vec3 value = Vec3::Zero();
    for (int row = 0; row < 3; ++row) {
      const int i = kPairs[row][0];
      const int j = kPairs[row][1];
      for (int l = 0; l < n; ++l) {
        double g = 0.0;
        if (letter_[l] == j) {
          g = before[l][i];
          value[row] += before[l][i] * d[l];
        } else if (letter_[l] == i) {
          g = after[l + 1][j];
        }
        jac(row, l) = g;
      }
    }
    return value;
  }

  // Removes each letter group's mean so steps keep the letter totals.
  void project_tangent(Jacobian& jac) const {
    for (int l = 0; l < 3; ++l) {
      const auto& g = groups_[l];
      if (g.empty()) continue;
      for (int row = 0; row < 3; ++row) {
        double mean = 0.0;
        for (int idx : g) mean += jac(row, idx);
        mean /= static_cast<double>(g.size());
        for (int idx : g) jac(row, idx) -= mean;
      }
    }
  }

  // Euclidean projection of each letter group onto its unit simplex.
  void project_simplices(Eigen::VectorXd& d) const {
    for (int l = 0; l < 3; ++l) {
      const auto& g = groups_[l];
      if (g.empty()) continue;
      std::array<double, kMaxPatternLength> sorted{};
      const int k = static_cast<int>(g.size());
      for (int a = 0; a < k; ++a) sorted[a] = d[g[a]];
      std::sort(sorted.begin(), sorted.begin() + k, std::greater<>());
      double cumulative = 0.0;
      double theta = 0.0;
      for (int a = 0; a < k; ++a) {
        cumulative += sorted[a];
        const double candidate = (cumulative - 1.0) / (a + 1);
        if (sorted[a] - candidate > 0.0) theta = candidate;
      }
      for (int idx : g) d[idx] = std::max(d[idx] - theta, 0.0);
    }
  }

  Eigen::VectorXd random_start(Rng& rng) const {
    Eigen::VectorXd d(size());
    for (int l = 0; l < 3; ++l) {
      const auto split = rng.flat_dirichlet(groups_[l].size());
      for (std::size_t a = 0; a < groups_[l].size(); ++a) {
        d[groups_[l][a]] = split[a];
      }
    }
    return d;
  }

  Word to_word(const Eigen::VectorXd& d) const {
    Word w;
    for (int m = 0; m < size(); ++m) w.arcs.push_back({letter_[m] + 1, d[m]});
    return w;
  }

 private:
  std::vector<int> letter_;
  std::array<std::vector<int>, 3> groups_;
};

// Projected damped least squares from one start. Returns the squared residual.
double descend(const PatternModel& model, const Vec3& target,
               Eigen::VectorXd& d, int max_iterations, double stop_sq) {
  Jacobian jac;
  Vec3 res = model.eval(d, jac) - target;
  double f = res.squaredNorm();
  double mu = 1e-3;
  int stalled = 0;
  Eigen::VectorXd trial(d.size());
  for (int it = 0; it < max_iterations && f > stop_sq; ++it) {
    model.project_tangent(jac);
    const Eigen::Matrix3d normal =
        jac * jac.transpose() + mu * Eigen::Matrix3d::Identity();
    const Vec3 y = normal.ldlt().solve(res);
    trial = d - jac.transpose() * y;
    model.project_simplices(trial);
    const Vec3 trial_res = model.eval(trial) - target;
    const double trial_f = trial_res.squaredNorm();
    if (trial_f < f) {
      stalled = (f - trial_f <= 1e-12 * f) ? stalled + 1 : 0;
      d = trial;
      f = trial_f;
      res = model.eval(d, jac) - target;
      mu = std::max(mu / 3.0, 1e-12);
      if (stalled >= 8) break;
    } else {
      // Damping halves the effective step on an increase.
      mu *= 2.0;
      res = model.eval(d, jac) - target;
      if (mu > 1e8) break;
    }
  }
  return f;
}

void check_options(const FitOptions& o) {
  if (o.max_arcs < 3 || o.max_arcs > kMaxPatternLength) {
    throw DomainError("max_arcs_range", "max_arcs must lie in [3, 16]");
  }
  if (!(o.tol > 0.0)) {
    throw DomainError("tolerance_positive", "fit tolerance must be positive");
  }
  if (o.starts < 1 || o.max_iterations < 1) {
    throw DomainError("solver_budget_positive",
                      "starts and max_iterations must be positive");
  }
}

std::vector<std::vector<Letter>> patterns_of_length(int n) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur(n, 1);
  // Odometer over {1,2,3}^n in lexicographic order.
  for (;;) {
    bool ok = true;
    bool seen[3] = {false, false, false};
    for (int i = 0; i < n && ok; ++i) {
      if (i > 0 && cur[i] == cur[i - 1]) ok = false;
      seen[cur[i] - 1] = true;
    }
    if (ok && seen[0] && seen[1] && seen[2]) out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == 3) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

// Smoothed minimum -log(sum exp(-beta x)) / beta and its weights.
double soft_min(const Vec3& x, double beta, Vec3& weights) {
  const double lo = x.minCoeff();
  const Vec3 e = (-beta * (x.array() - lo)).exp();
  const double s = e.sum();
  weights = e / s;
  return lo - std::log(s) / beta;
}

}  // namespace

std::string to_string(FitStatus s) {
  return s == FitStatus::kAttained ? "attained" : "not-found";
}

std::string to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::kAttainableBeyond:
      return "attainable-beyond";
    case ProbeOutcome::kUnattainableBeyond:
      return "unattainable-beyond";
    case ProbeOutcome::kUndecided:
      return "undecided";
  }
  return "undecided";
}

std::vector<std::vector<Letter>> enumerate_patterns(int max_arcs) {
  std::vector<std::vector<Letter>> out;
  for (int n = 3; n <= max_arcs; ++n) {
    auto batch = patterns_of_length(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

PatternFit fit_pattern(const std::vector<Letter>& pattern, const Vec3& target,
                       const FitOptions& options, std::uint64_t pattern_seed) {
  const PatternModel model(pattern);
  const double stop_sq = 0.25 * options.tol * options.tol;
  PatternFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int s = 0; s < options.starts; ++s) {
    Rng rng(derive_seed(options.seed, pattern_seed, static_cast<unsigned>(s)));
    Eigen::VectorXd d = model.random_start(rng);
    const double f =
        descend(model, target, d, options.max_iterations, stop_sq);
    ++best.starts_used;
    const double r = std::sqrt(f);
    if (r < best.residual) {
      best.residual = r;
      best.word = model.to_word(d);
    }
    if (f <= stop_sq) break;
  }
  return best;
}

FitResult fit(const PqrPoint& target, const FitOptions& options) {
  check_options(options);
  const auto patterns = enumerate_patterns(options.max_arcs);
  FitResult out;
  out.max_arcs = options.max_arcs;
  out.residual = std::numeric_limits<double>::infinity();
  Word best_word;
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const PatternFit pf =
        fit_pattern(patterns[idx], target.vec(), options, idx);
    out.starts_used += pf.starts_used;
    ++out.patterns_tried;
    if (pf.residual < out.residual) {
      out.residual = pf.residual;
      out.pattern_index = static_cast<int>(idx);
      best_word = pf.word;
    }
    if (out.residual <= options.tol) break;
  }
  if (out.residual <= options.tol) {
    Word witness = canonicalize(best_word);
    const double r = (precedence_sums(witness) - target.vec()).norm();
    out.residual = r;
    if (r <= options.tol) {
      out.status = FitStatus::kAttained;
      out.witness = std::move(witness);
    }
  }
  return out;
}

ProbeOutcome probe(const Vec3& point, const Vec3& direction, double eps,
                   const FitOptions& options) {
  if (!(eps > 0.0)) {
    throw DomainError("eps_positive", "probe offset must be positive");
  }
  try {
    const Vec3 x = point + eps * direction;
    if (!x.allFinite()) return ProbeOutcome::kUndecided;
    if ((x.array() < 0.0).any() || (x.array() > 1.0).any()) {
      return ProbeOutcome::kUnattainableBeyond;
    }
    const FitResult r = fit(PqrPoint(x), options);
    if (r.status == FitStatus::kAttained) {
      return ProbeOutcome::kAttainableBeyond;
    }
    if (!std::isfinite(r.residual) || r.residual < kUndecidedFraction * eps) {
      return ProbeOutcome::kUndecided;
    }
    return ProbeOutcome::kUnattainableBeyond;
  } catch (const std::exception&) {
    return ProbeOutcome::kUndecided;
  }
}

Prober make_prober(const FitOptions& options) {
  return [options](const Vec3& point, const Vec3& dir, double eps) {
    return probe(point, dir, eps, options);
  };
}

MaxMinResult maximize_min_coordinate(const FitOptions& options) {
  check_options(options);
  static constexpr double kSharpness[] = {20.0, 200.0, 2e3, 2e4, 1e5};
  constexpr int kStageIterations = 150;
  const auto patterns = enumerate_patterns(options.max_arcs);
  const int starts = std::min(options.starts, 4);

  MaxMinResult best;
  best.value = -1.0;
  Jacobian jac;
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const PatternModel model(patterns[idx]);
    for (int s = 0; s < starts; ++s) {
      Rng rng(derive_seed(options.seed, idx, static_cast<unsigned>(s)));
      Eigen::VectorXd d = model.random_start(rng);
      double step = 0.1;
      for (double beta : kSharpness) {
        Vec3 weights;
        double value = soft_min(model.eval(d, jac), beta, weights);
        for (int it = 0; it < kStageIterations; ++it) {
          Jacobian g = jac;
          model.project_tangent(g);
          const Eigen::VectorXd grad = g.transpose() * weights;
          const double gnorm_sq = grad.squaredNorm();
          if (gnorm_sq < 1e-30) break;
          bool moved = false;
          step = std::min(step * 2.0, 1.0);
          while (step > 1e-14) {
            Eigen::VectorXd trial = d + step * grad;
            model.project_simplices(trial);
            Vec3 tw;
            const double tv = soft_min(model.eval(trial), beta, tw);
            if (tv >= value + 1e-4 * (trial - d).dot(grad)) {
              if (tv > value) {
                d = trial;
                value = soft_min(model.eval(d, jac), beta, weights);
                moved = true;
              }
              break;
            }
            step *= 0.5;
          }
          if (!moved) break;
        }
      }
      const Vec3 x = model.eval(d);
      if (x.minCoeff() > best.value) {
        best.value = x.minCoeff();
        best.point = x;
        best.witness = canonicalize(model.to_word(d));
      }
    }
  }
  return best;
}

}  // namespace carnot
