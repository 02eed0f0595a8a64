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

#ifndef CARNOT_PROBABILITY_HPP_
#define CARNOT_PROBABILITY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "carnot/attainability.hpp"
#include "carnot/words.hpp"

namespace carnot {

struct Atom {
  double value = 0.0;
  double mass = 0.0;
};

/// Finitely supported law: positive masses summing to 1 (within 1e-12) on
/// strictly increasing values. Atoms are sorted on construction; repeated
/// values are rejected.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  static DiscreteDistribution constant(double value) {
    return DiscreteDistribution({{value, 1.0}});
  }

  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

using DiceTriple = std::array<DiscreteDistribution, 3>;

/// P(xi_i < xi_j) for independent xi_i ~ d_i.
double precedence_probability(const DiscreteDistribution& di,
                              const DiscreteDistribution& dj);

/// (P(xi1 < xi2), P(xi2 < xi3), P(xi3 < xi1)). Throws
/// DomainError("pairwise_no_ties") when two laws share mass on common values.
PqrPoint dice_pqr(const DiscreteDistribution& d1,
                  const DiscreteDistribution& d2,
                  const DiscreteDistribution& d3);

/// Section word listing all atoms in increasing value order: letter = which
/// variable, duration = mass. Its pqr equals dice_pqr for tie-free triples.
Word dice_word(const DiscreteDistribution& d1, const DiscreteDistribution& d2,
               const DiscreteDistribution& d3);

/// Triple with 1..atoms_max atoms each on interleaved disjoint supports.
DiceTriple random_dice(int atoms_max, std::uint64_t seed);

using Solver = std::function<FitResult(const PqrPoint&)>;

struct DiceTrial {
  Vec3 pqr = Vec3::Zero();
  FitStatus status = FitStatus::kNotFound;
  double residual = 0.0;
  std::string error;
};

struct DiceReport {
  int trials = 0;
  int attained = 0;
  double worst_residual = 0.0;
  /// Indices of trials that were not attained or where the solver threw.
  std::vector<int> failures;
  std::vector<DiceTrial> per_trial;
};

/// Samples n_trials random triples, computes dice_pqr and runs the solver.
/// Trials run on `threads` workers; the report order is the trial order.
DiceReport random_dice_check(int n_trials, int atoms_max, std::uint64_t seed,
                             const Solver& solver, int threads = 1);

/// One row per trial: index, p, q, r, status, residual, error.
void write_dice_csv(std::ostream& out, const DiceReport& report);

}  // namespace carnot

#endif  // CARNOT_PROBABILITY_HPP_
