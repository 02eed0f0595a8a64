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

#ifndef CARNOT_WORDS_HPP_
#define CARNOT_WORDS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "carnot/group.hpp"

namespace carnot {

/// Letter index of a basis field X_1, X_2, X_3.
using Letter = int;

struct Arc {
  Letter letter = 1;
  double duration = 0.0;

  bool operator==(const Arc&) const = default;
};

/// Piecewise-constant control taking vertex values e_1, e_2, e_3. Arcs are
/// applied left to right: e^{t_1 X_{i_1}} ... e^{t_n X_{i_n}}.
struct Word {
  std::vector<Arc> arcs;

  Word() = default;
  Word(std::initializer_list<Arc> a) : arcs(a) {}
  explicit Word(std::vector<Arc> a) : arcs(std::move(a)) {}

  /// Builds a word from parallel letter / duration lists.
  static Word from_lists(const std::vector<Letter>& letters,
                         const std::vector<double>& durations);

  std::size_t size() const { return arcs.size(); }
  bool empty() const { return arcs.empty(); }
  std::vector<Letter> letters() const;
  std::vector<double> durations() const;
  double total_duration() const;
  /// Total time spent on each letter, (T_1, T_2, T_3).
  Vec3 letter_totals() const;
  /// Number of switchings of the canonical form.
  int switch_count() const;

  bool operator==(const Word&) const = default;
};

/// Section coordinates (p, q, r) = (p12, p23, p31) of a point of B.
class PqrPoint {
 public:
  static constexpr double kRangeTolerance = 1e-9;

  PqrPoint() = default;
  /// Throws DomainError("pqr_in_unit_cube") outside [0,1]^3 (with tolerance).
  PqrPoint(double p, double q, double r);
  explicit PqrPoint(const Vec3& v) : PqrPoint(v[0], v[1], v[2]) {}

  double p() const { return v_[0]; }
  double q() const { return v_[1]; }
  double r() const { return v_[2]; }
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_ = Vec3::Zero();
};

/// Drops zero arcs and merges neighbours sharing a letter. Throws on negative
/// durations and letters outside {1,2,3}.
Word canonicalize(const Word& w);

Word concat(const Word& a, const Word& b);

/// Left-to-right fold of flow_const from the identity.
GroupElement endpoint(const Word& w);

/// True when every letter total equals 1 within tol.
bool is_section(const Word& w, double tol = 1e-9);

/// (p12, p23, p31) as the raw double sum over ordered arc pairs. Defined for
/// any word; equals pqr(w) on section words.
Vec3 precedence_sums(const Word& w);

/// Section coordinates of a section word. Throws
/// DomainError("section_word") naming the letter totals otherwise.
PqrPoint pqr(const Word& w);

/// (p, q, r) read off a point of the section x = (1,1,1):
/// p12 = (1 + y12)/2, p23 = (1 + y23)/2, p31 = (1 - y13)/2.
Vec3 pqr_from_section_element(const GroupElement& g);

/// Inverse of pqr_from_section_element.
GroupElement section_element(const Vec3& pqr);

Word reverse(const Word& w);

/// Rescales letter i by 1/T_i. Throws DomainError("letter_present") when a
/// letter is absent.
Word to_section(const Word& w);

/// Applies a letter permutation: letter i becomes perm[i-1].
Word relabel(const Word& w, const std::array<Letter, 3>& perm);

/// Random section word with n_arcs arcs (n_arcs >= 3): a uniformly random
/// pattern without adjacent repeats that uses all three letters, and flat
/// Dirichlet durations within each letter.
Word random_word(int n_arcs, std::uint64_t seed);

/// Random section word in which every arc of `before` precedes every arc of
/// `after`, so p_{before,after} = 1. The remaining letter is spread over both
/// sides. Uses between 3 and max_arcs arcs (max_arcs >= 3).
Word random_precedence_word(Letter before, Letter after, int max_arcs,
                            std::uint64_t seed);

}  // namespace carnot

#endif  // CARNOT_WORDS_HPP_
