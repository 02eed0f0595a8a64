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

#include "carnot/words.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "carnot/errors.hpp"
#include "carnot/rng.hpp"

namespace carnot {
namespace {

void check_letter(Letter l) {
  if (l < 1 || l > 3) {
    throw DomainError("letter_range",
                      "letter " + std::to_string(l) + " is not in {1,2,3}");
  }
}

Vec3 basis(Letter l) {
  Vec3 u = Vec3::Zero();
  u[l - 1] = 1.0;
  return u;
}

// Assigns flat Dirichlet durations to each letter's arcs of a pattern.
Word fill_section_durations(const std::vector<Letter>& pattern, Rng& rng) {
  std::vector<double> durations(pattern.size(), 0.0);
  for (Letter l = 1; l <= 3; ++l) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] == l) idx.push_back(i);
    }
    if (idx.empty()) continue;
    const auto split = rng.flat_dirichlet(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) durations[idx[k]] = split[k];
  }
  return Word::from_lists(pattern, durations);
}

std::vector<Letter> alternating_block(Letter a, Letter b, int len,
                                      Letter must_contain, Rng& rng) {
  std::vector<Letter> block;
  Letter first = (rng.below(2) == 0) ? a : b;
  if (len == 1) first = must_contain;
  for (int i = 0; i < len; ++i) {
    block.push_back((i % 2 == 0) ? first : (first == a ? b : a));
  }
  return block;
}

}  // namespace

Word Word::from_lists(const std::vector<Letter>& letters,
                      const std::vector<double>& durations) {
  if (letters.size() != durations.size()) {
    throw DomainError("word_lists_same_length",
                      "letters and durations must have the same length");
  }
  Word w;
  w.arcs.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    w.arcs.push_back({letters[i], durations[i]});
  }
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) out.push_back(a.letter);
  return out;
}

std::vector<double> Word::durations() const {
  std::vector<double> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) out.push_back(a.duration);
  return out;
}

double Word::total_duration() const {
  double t = 0.0;
  for (const auto& a : arcs) t += a.duration;
  return t;
}

Vec3 Word::letter_totals() const {
  Vec3 totals = Vec3::Zero();
  for (const auto& a : arcs) {
    check_letter(a.letter);
    totals[a.letter - 1] += a.duration;
  }
  return totals;
}

int Word::switch_count() const {
  const Word c = canonicalize(*this);
  return c.empty() ? 0 : static_cast<int>(c.size()) - 1;
}

PqrPoint::PqrPoint(double p, double q, double r) : v_(p, q, r) {
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(v_[i]) || v_[i] < -kRangeTolerance ||
        v_[i] > 1.0 + kRangeTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "section coordinates (" << p << ", " << q << ", " << r
          << ") leave the unit cube";
      throw DomainError("pqr_in_unit_cube", msg.str());
    }
  }
}

Word canonicalize(const Word& w) {
  Word out;
  for (const auto& a : w.arcs) {
    check_letter(a.letter);
    if (!(a.duration >= 0.0) || !std::isfinite(a.duration)) {
      throw DomainError("duration_nonnegative",
                        "arc durations must be finite and nonnegative");
    }
    if (a.duration == 0.0) continue;
    if (!out.arcs.empty() && out.arcs.back().letter == a.letter) {
      out.arcs.back().duration += a.duration;
    } else {
      out.arcs.push_back(a);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.arcs.insert(out.arcs.end(), b.arcs.begin(), b.arcs.end());
  return out;
}

GroupElement endpoint(const Word& w) {
  GroupElement g = GroupElement::identity();
  for (const auto& a : w.arcs) {
    check_letter(a.letter);
    g = flow_const(g, basis(a.letter), a.duration);
  }
  return g;
}

bool is_section(const Word& w, double tol) {
  const Vec3 t = w.letter_totals();
  return (t.array() - 1.0).abs().maxCoeff() <= tol;
}

Vec3 precedence_sums(const Word& w) {
  // p_ij = sum over l < m with i_l = i, i_m = j of t_l t_m.
  double p[3][3] = {{0.0}};
  const auto& arcs = w.arcs;
  for (std::size_t l = 0; l < arcs.size(); ++l) {
    check_letter(arcs[l].letter);
    for (std::size_t m = l + 1; m < arcs.size(); ++m) {
      p[arcs[l].letter - 1][arcs[m].letter - 1] +=
          arcs[l].duration * arcs[m].duration;
    }
  }
  return {p[0][1], p[1][2], p[2][0]};
}

PqrPoint pqr(const Word& w) {
  if (!is_section(w)) {
    const Vec3 t = w.letter_totals();
    std::ostringstream msg;
    msg.precision(17);
    msg << "not a section word: letter totals (T1, T2, T3) = (" << t[0]
        << ", " << t[1] << ", " << t[2] << "), expected all equal to 1";
    throw DomainError("section_word", msg.str());
  }
  return PqrPoint(precedence_sums(w));
}

Vec3 pqr_from_section_element(const GroupElement& g) {
  return {0.5 * (1.0 + g.y[pair_index(1, 2)]),
          0.5 * (1.0 + g.y[pair_index(2, 3)]),
          0.5 * (1.0 - g.y[pair_index(1, 3)])};
}

GroupElement section_element(const Vec3& pqr) {
  GroupElement g;
  g.x = Vec3::Ones();
  g.y[pair_index(1, 2)] = 2.0 * pqr[0] - 1.0;
  g.y[pair_index(2, 3)] = 2.0 * pqr[1] - 1.0;
  g.y[pair_index(1, 3)] = 1.0 - 2.0 * pqr[2];
  return g;
}

Word reverse(const Word& w) {
  Word out = w;
  std::reverse(out.arcs.begin(), out.arcs.end());
  return out;
}

Word to_section(const Word& w) {
  const Vec3 t = w.letter_totals();
  for (int i = 0; i < 3; ++i) {
    if (!(t[i] > 0.0)) {
      throw DomainError("letter_present",
                        "letter " + std::to_string(i + 1) +
                            " has zero total duration; the endpoint lies on a "
                            "two-letter stratum");
    }
  }
  Word out = w;
  for (auto& a : out.arcs) a.duration /= t[a.letter - 1];
  return out;
}

Word relabel(const Word& w, const std::array<Letter, 3>& perm) {
  Word out = w;
  for (auto& a : out.arcs) {
    check_letter(a.letter);
    a.letter = perm[a.letter - 1];
  }
  return out;
}

Word random_word(int n_arcs, std::uint64_t seed) {
  if (n_arcs < 3) {
    throw DomainError("n_arcs_at_least_3",
                      "a section word needs at least 3 arcs");
  }
  Rng rng(seed);
  std::vector<Letter> pattern;
  for (;;) {
    pattern.assign(1, static_cast<Letter>(1 + rng.below(3)));
    for (int i = 1; i < n_arcs; ++i) {
      const Letter prev = pattern.back();
      const Letter step = static_cast<Letter>(1 + rng.below(2));
      pattern.push_back(1 + (prev - 1 + step) % 3);
    }
    bool seen[3] = {false, false, false};
    for (Letter l : pattern) seen[l - 1] = true;
    if (seen[0] && seen[1] && seen[2]) break;
  }
  return fill_section_durations(pattern, rng);
}

Word random_precedence_word(Letter before, Letter after, int max_arcs,
                            std::uint64_t seed) {
  check_letter(before);
  check_letter(after);
  if (before == after) {
    throw DomainError("distinct_letters", "before and after must differ");
  }
  if (max_arcs < 3) {
    throw DomainError("n_arcs_at_least_3",
                      "a section word needs at least 3 arcs");
  }
  const Letter mid = 6 - before - after;
  Rng rng(seed);
  std::vector<Letter> pattern;
  for (;;) {
    const int n = 3 + static_cast<int>(rng.below(max_arcs - 2));
    const int len_a = 1 + static_cast<int>(rng.below(n - 1));
    const int len_b = n - len_a;
    pattern = alternating_block(before, mid, len_a, before, rng);
    const auto tail = alternating_block(mid, after, len_b, after, rng);
    if (!tail.empty() && tail.front() == pattern.back()) {
      // Adjacent `mid` arcs at the junction would merge; drop one.
      pattern.insert(pattern.end(), tail.begin() + 1, tail.end());
    } else {
      pattern.insert(pattern.end(), tail.begin(), tail.end());
    }
    if (std::find(pattern.begin(), pattern.end(), mid) != pattern.end()) break;
  }
  return fill_section_durations(pattern, rng);
}

}  // namespace carnot
