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

#include "carnot/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "carnot/errors.hpp"
#include "carnot/json_io.hpp"
#include "carnot/parallel.hpp"
#include "carnot/rng.hpp"

namespace carnot {
namespace {

constexpr double kMassTolerance = 1e-12;

double tie_mass(const DiscreteDistribution& a, const DiscreteDistribution& b,
                std::vector<double>& shared) {
  double mass = 0.0;
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) {
      if (x.value == y.value) {
        mass += x.mass * y.mass;
        shared.push_back(x.value);
      }
    }
  }
  return mass;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw DomainError("distribution_nonempty", "a law needs at least one atom");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].value)) {
      throw DomainError("atom_values_finite", "atom values must be finite");
    }
    if (!(atoms_[i].mass > 0.0)) {
      throw DomainError("atom_masses_positive", "atom masses must be positive");
    }
    if (i > 0 && !(atoms_[i].value > atoms_[i - 1].value)) {
      throw DomainError("atom_values_increasing",
                        "atom values must be distinct");
    }
    total += atoms_[i].mass;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "atom masses sum to " << total << ", expected 1";
    throw DomainError("masses_sum_to_one", msg.str());
  }
}

double precedence_probability(const DiscreteDistribution& di,
                              const DiscreteDistribution& dj) {
  double p = 0.0;
  for (const auto& x : di.atoms()) {
    for (const auto& y : dj.atoms()) {
      if (x.value < y.value) p += x.mass * y.mass;
    }
  }
  return p;
}

PqrPoint dice_pqr(const DiscreteDistribution& d1,
                  const DiscreteDistribution& d2,
                  const DiscreteDistribution& d3) {
  const std::array<const DiscreteDistribution*, 3> d = {&d1, &d2, &d3};
  static constexpr int kPairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (const auto& pr : kPairs) {
    std::vector<double> shared;
    const double m = tie_mass(*d[pr[0]], *d[pr[1]], shared);
    if (m > kMassTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "xi" << pr[0] + 1 << " and xi" << pr[1] + 1
          << " tie with probability " << m << " on shared values";
      for (double v : shared) msg << ' ' << v;
      throw DomainError("pairwise_no_ties", msg.str());
    }
  }
  return PqrPoint(precedence_probability(d1, d2),
                  precedence_probability(d2, d3),
                  precedence_probability(d3, d1));
}

Word dice_word(const DiscreteDistribution& d1, const DiscreteDistribution& d2,
               const DiscreteDistribution& d3) {
  struct Tagged {
    double value;
    Letter letter;
    double mass;
  };
  std::vector<Tagged> all;
  const std::array<const DiscreteDistribution*, 3> d = {&d1, &d2, &d3};
  for (int i = 0; i < 3; ++i) {
    for (const auto& a : d[i]->atoms()) all.push_back({a.value, i + 1, a.mass});
  }
  std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    return a.value < b.value;
  });
  Word w;
  for (const auto& t : all) w.arcs.push_back({t.letter, t.mass});
  return canonicalize(w);
}

DiceTriple random_dice(int atoms_max, std::uint64_t seed) {
  if (atoms_max < 1) {
    throw DomainError("atoms_max_positive", "atoms_max must be at least 1");
  }
  Rng rng(seed);
  std::array<int, 3> counts{};
  for (auto& c : counts) c = 1 + static_cast<int>(rng.below(atoms_max));
  // Shuffle the owners of consecutive integer support points.
  std::vector<int> owner;
  for (int i = 0; i < 3; ++i) owner.insert(owner.end(), counts[i], i);
  for (std::size_t k = owner.size(); k > 1; --k) {
    std::swap(owner[k - 1], owner[rng.below(k)]);
  }
  std::array<std::vector<Atom>, 3> atoms;
  std::array<std::vector<double>, 3> masses;
  for (int i = 0; i < 3; ++i) masses[i] = rng.flat_dirichlet(counts[i]);
  std::array<int, 3> used{};
  for (std::size_t k = 0; k < owner.size(); ++k) {
    const int i = owner[k];
    atoms[i].push_back({static_cast<double>(k), masses[i][used[i]++]});
  }
  // Renormalize so rounding in the Dirichlet draw stays within tolerance.
  for (int i = 0; i < 3; ++i) {
    double total = 0.0;
    for (const auto& a : atoms[i]) total += a.mass;
    for (auto& a : atoms[i]) a.mass /= total;
  }
  return {DiscreteDistribution(atoms[0]), DiscreteDistribution(atoms[1]),
          DiscreteDistribution(atoms[2])};
}

DiceReport random_dice_check(int n_trials, int atoms_max, std::uint64_t seed,
                             const Solver& solver, int threads) {
  if (n_trials < 1) {
    throw DomainError("n_trials_positive", "n_trials must be at least 1");
  }
  DiceReport report;
  report.trials = n_trials;
  report.per_trial.resize(n_trials);
  parallel_for(static_cast<std::size_t>(n_trials), threads, [&](std::size_t i) {
    DiceTrial& trial = report.per_trial[i];
    try {
      const DiceTriple dice = random_dice(atoms_max, derive_seed(seed, i));
      const PqrPoint x = dice_pqr(dice[0], dice[1], dice[2]);
      trial.pqr = x.vec();
      const FitResult r = solver(x);
      trial.status = r.status;
      trial.residual = r.residual;
    } catch (const std::exception& e) {
      trial.status = FitStatus::kNotFound;
      trial.error = e.what();
    }
  });
  for (int i = 0; i < n_trials; ++i) {
    const DiceTrial& t = report.per_trial[i];
    if (t.status == FitStatus::kAttained) {
      ++report.attained;
      report.worst_residual = std::max(report.worst_residual, t.residual);
    } else {
      report.failures.push_back(i);
    }
  }
  return report;
}

void write_dice_csv(std::ostream& out, const DiceReport& report) {
  out << "index,p,q,r,status,residual,error\n";
  for (std::size_t i = 0; i < report.per_trial.size(); ++i) {
    const DiceTrial& t = report.per_trial[i];
    out << i << ',' << format_number(t.pqr[0]) << ','
        << format_number(t.pqr[1]) << ',' << format_number(t.pqr[2]) << ','
        << to_string(t.status) << ',' << format_number(t.residual) << ",\"";
    for (char c : t.error) out << (c == '"' ? "\"\"" : std::string(1, c));
    out << "\"\n";
  }
}

}  // namespace carnot
