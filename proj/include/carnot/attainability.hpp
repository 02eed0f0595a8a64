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

#ifndef CARNOT_ATTAINABILITY_HPP_
#define CARNOT_ATTAINABILITY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carnot/words.hpp"

namespace carnot {

struct FitOptions {
  /// Longest letter pattern tried. 8 arcs gives 720 patterns.
  int max_arcs = 8;
  /// Euclidean distance in (p, q, r) below which a target counts as attained.
  double tol = 1e-7;
  std::uint64_t seed = 0;
  /// Random starts per pattern.
  int starts = 20;
  int max_iterations = 200;
};

enum class FitStatus { kAttained, kNotFound };

std::string to_string(FitStatus s);

/// Outcome of a membership search. "not-found" means no witness was found
/// within the pattern cap and start budget; it is evidence, not a proof, of
/// non-attainability.
struct FitResult {
  FitStatus status = FitStatus::kNotFound;
  /// Canonical section word reproducing the target; present iff attained.
  std::optional<Word> witness;
  /// Best Euclidean distance reached (recomputed from the witness if any).
  double residual = 0.0;
  int starts_used = 0;
  int patterns_tried = 0;
  int max_arcs = 0;
  /// Pattern index (enumeration order) of the best candidate.
  int pattern_index = -1;
};

/// Letter patterns of length 3..max_arcs without adjacent repeats that use
/// all three letters, ordered by length and then lexicographically.
std::vector<std::vector<Letter>> enumerate_patterns(int max_arcs);

/// Best fit of one pattern: per-letter durations on the unit simplex that
/// minimize |pqr - target|.
struct PatternFit {
  Word word;
  double residual = 0.0;
  int starts_used = 0;
};

PatternFit fit_pattern(const std::vector<Letter>& pattern, const Vec3& target,
                       const FitOptions& options, std::uint64_t pattern_seed);

/// Searches patterns in enumeration order and stops at the first one whose
/// fit reaches options.tol; otherwise reports the closest candidate. Throws
/// DomainError for targets outside the cube or invalid options.
FitResult fit(const PqrPoint& target, const FitOptions& options = {});

enum class ProbeOutcome { kAttainableBeyond, kUnattainableBeyond, kUndecided };

std::string to_string(ProbeOutcome o);

/// Fits point + eps * direction. Points that leave the cube are unattainable
/// outright. A search that ends closer than kUndecidedFraction * eps without
/// reaching tol is reported undecided, as are solver failures.
ProbeOutcome probe(const Vec3& point, const Vec3& direction, double eps,
                   const FitOptions& options = {});

inline constexpr double kUndecidedFraction = 0.1;

/// Attainability prober handle consumed by the boundary atlas.
using Prober =
    std::function<ProbeOutcome(const Vec3& point, const Vec3& dir, double eps)>;

Prober make_prober(const FitOptions& options);

struct MaxMinResult {
  double value = 0.0;
  Word witness;
  Vec3 point = Vec3::Zero();
};

/// Maximizes min(p, q, r) over all patterns up to options.max_arcs with
/// projected ascent on a smoothed minimum (sharpness raised in stages).
/// Uses options.seed, options.starts (capped at 4) and options.max_arcs.
MaxMinResult maximize_min_coordinate(const FitOptions& options = {});

}  // namespace carnot

#endif  // CARNOT_ATTAINABILITY_HPP_
