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

#ifndef CARNOT_EXPERIMENTS_HPP_
#define CARNOT_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "carnot/adjoint.hpp"
#include "carnot/rng.hpp"

namespace carnot {

// Reproduction harness for the ten acceptance checks. Sample counts and
// tolerances are arguments so tests can pin them.

struct CheckReport {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Number of samples examined and number violating the check.
  long samples = 0;
  long violations = 0;
  /// Worst observed error against `tolerance`.
  double worst = 0.0;
  double tolerance = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

CheckReport check_group_axioms(int n_triples, std::uint64_t seed, double tol);

CheckReport check_word_calculus(int n_words, std::uint64_t seed, double tol);

CheckReport check_vertices_and_edges(int n_samples, std::uint64_t seed,
                                     double tol);

CheckReport check_quadric_identities(int n_samples, std::uint64_t seed,
                                     double tol);

CheckReport check_golden_point(double witness_tol, double maxmin_tol,
                               std::uint64_t seed);

CheckReport check_adjoint(int n_flows, std::uint64_t seed, double casimir_tol,
                          double tau_rel_tol);

CheckReport check_second_order(int n_covectors, std::uint64_t seed,
                               double alpha_tol);

CheckReport check_facet_laws(int n_words, std::uint64_t seed, double tol);

CheckReport check_solver_roundtrip(int n_words, int n_dice, std::uint64_t seed,
                                   double residual_tol, int threads);

CheckReport check_counterexamples(std::uint64_t seed);

/// Runs the selected checks (ids 1..10) at `scale` times the default sample
/// counts.
std::vector<CheckReport> run_checks(const std::vector<int>& ids, double scale,
                                    std::uint64_t seed, int threads);

/// Random covector with h12, h23, h31 of one strict sign and h strictly
/// inside one face of the quadrant (max h = 1 attained once).
AdjointCovector random_triangle_covector(Rng& rng);

/// Six-arc bang-bang word synthesized from a triangle-type covector: the
/// first arc up to the first switch, four full face passages, then half of
/// the next passage.
Word five_switch_word(const AdjointCovector& a);

nlohmann::json to_json(const CheckReport& r);

}  // namespace carnot

#endif  // CARNOT_EXPERIMENTS_HPP_
