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

#include "carnot/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "carnot/attainability.hpp"
#include "carnot/boundary_atlas.hpp"
#include "carnot/errors.hpp"
#include "carnot/group.hpp"
#include "carnot/parallel.hpp"
#include "carnot/probability.hpp"
#include "carnot/second_order.hpp"
#include "carnot/words.hpp"

namespace carnot {
namespace {

using nlohmann::json;

// Running worst-error tally for one check.
struct Tally {
  CheckReport& r;

  void record(double err) {
    ++r.samples;
    if (!(err <= r.tolerance)) ++r.violations;
    if (!(err <= r.worst)) r.worst = err;  // NaN sticks
  }
  void finish() { r.passed = r.samples > 0 && r.violations == 0; }
};

CheckReport start(int id, std::string name, double tol) {
  CheckReport r;
  r.id = id;
  r.name = std::move(name);
  r.tolerance = tol;
  return r;
}

GroupElement random_element(Rng& rng) {
  GroupElement g;
  for (int i = 0; i < 3; ++i) {
    g.x[i] = rng.uniform(-1.0, 1.0);
    g.y[i] = rng.uniform(-1.0, 1.0);
  }
  return g;
}

double max_abs_diff(const GroupElement& a, const GroupElement& b) {
  return std::max((a.x - b.x).cwiseAbs().maxCoeff(),
                  (a.y - b.y).cwiseAbs().maxCoeff());
}

int random_arcs(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng.below(span));
}

std::string pattern_key(const Word& w) {
  std::string s;
  for (const auto& a : w.arcs) s += static_cast<char>('0' + a.letter);
  return s;
}

}  // namespace

AdjointCovector random_triangle_covector(Rng& rng) {
  const double sign = rng.below(2) == 0 ? 1.0 : -1.0;
  const double h12 = sign * rng.uniform(0.25, 2.0);
  const double h23 = sign * rng.uniform(0.25, 2.0);
  const double h31 = sign * rng.uniform(0.25, 2.0);
  AdjointCovector a;
  a.R = Vec3(h12, -h31, h23);
  const int face = static_cast<int>(rng.below(3));
  for (int i = 0; i < 3; ++i)
    a.h[i] = i == face ? 1.0 : rng.uniform(-1.0, 0.95);
  return a;
}

Word five_switch_word(const AdjointCovector& a) {
  const double period = switching_times(a).period();
  double horizon = 3.0 * period + 1.0;
  Synthesis s = synthesize(a, horizon);
  while (s.word.size() < 7) {
    horizon *= 2.0;
    s = synthesize(a, horizon);
  }
  Word w;
  w.arcs.assign(s.word.arcs.begin(), s.word.arcs.begin() + 6);
  w.arcs.back().duration *= 0.5;
  return w;
}

CheckReport check_group_axioms(int n_triples, std::uint64_t seed, double tol) {
  CheckReport r = start(1, "group axioms", tol);
  Tally t{r};
  Rng rng(seed);
  const GroupElement e = GroupElement::identity();
  double assoc = 0, ident = 0, inv = 0;
  for (int i = 0; i < n_triples; ++i) {
    const GroupElement a = random_element(rng), b = random_element(rng),
                       c = random_element(rng);
    const double d1 = max_abs_diff(multiply(multiply(a, b), c),
                                   multiply(a, multiply(b, c)));
    const double d2 = std::max(max_abs_diff(multiply(a, e), a),
                               max_abs_diff(multiply(e, a), a));
    const double d3 = std::max(max_abs_diff(multiply(a, inverse(a)), e),
                               max_abs_diff(multiply(inverse(a), a), e));
    assoc = std::max(assoc, d1);
    ident = std::max(ident, d2);
    inv = std::max(inv, d3);
    t.record(std::max({d1, d2, d3}));
  }
  r.details = {{"associativity", assoc}, {"identity", ident}, {"inverse", inv}};
  t.finish();
  return r;
}

CheckReport check_word_calculus(int n_words, std::uint64_t seed, double tol) {
  CheckReport r = start(2, "word calculus", tol);
  Tally t{r};
  Rng rng(seed);
  double hom = 0, rev = 0, add = 0;
  for (int i = 0; i < n_words; ++i) {
    const Word a = random_word(random_arcs(rng, 3, 10), rng.next());
    const Word b = random_word(random_arcs(rng, 3, 10), rng.next());
    const double d1 = max_abs_diff(endpoint(concat(a, b)),
                                   multiply(endpoint(a), endpoint(b)));
    const Vec3 sum = pqr(a).vec() + pqr(reverse(a)).vec();
    const double d2 = (sum - Vec3::Ones()).cwiseAbs().maxCoeff();
    const double d3 = std::abs(endpoint(a).x.sum() - a.total_duration());
    hom = std::max(hom, d1);
    rev = std::max(rev, d2);
    add = std::max(add, d3);
    t.record(std::max({d1, d2, d3}));
  }
  r.details = {{"concatenation", hom}, {"reversal", rev}, {"time", add}};
  t.finish();
  return r;
}

CheckReport check_vertices_and_edges(int n_samples, std::uint64_t seed,
                                     double tol) {
  CheckReport r = start(3, "vertices and edges", tol);
  Tally t{r};
  // Permutation words against the listed coordinates.
  const std::map<std::string, Vec3> expected = {
      {"A1", {1, 0, 0}}, {"B2", {0, 1, 0}}, {"C1", {0, 0, 1}},
      {"A2", {1, 0, 1}}, {"C2", {0, 1, 1}}, {"D1", {1, 1, 0}}};
  json verts = json::object();
  std::vector<Letter> perm = {1, 2, 3};
  int distinct = 0;
  std::map<std::string, int> hits;
  do {
    const Vec3 x = pqr(Word::from_lists(perm, {1, 1, 1})).vec();
    double best = 1e300;
    std::string label;
    for (const auto& [name, v] : expected) {
      const double d = (x - v).cwiseAbs().maxCoeff();
      if (d < best) {
        best = d;
        label = name;
      }
    }
    t.record(best);
    if (hits[label]++ == 0) ++distinct;
    verts[pattern_key(Word::from_lists(perm, {1, 1, 1}))] = label;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (distinct != 6) ++r.violations;

  // Edge families: every sample stays on the facet line found at s = 1/2.
  Rng rng(seed);
  json fams = json::array();
  for (const auto& f : edge_families()) {
    const Vec3 mid = f.point(0.5);
    std::vector<int> fixed;
    for (int k = 0; k < 3; ++k)
      if (std::abs(mid[k]) < 1e-9 || std::abs(mid[k] - 1.0) < 1e-9)
        fixed.push_back(k);
    const bool diagonal = f.kind == PatchKind::kDiagonalEdge;
    if (fixed.size() != (diagonal ? 1u : 2u)) ++r.violations;
    double worst = 0;
    for (int i = 0; i < n_samples; ++i) {
      const Vec3 x = f.point(rng.uniform());
      double err = 0;
      for (int k : fixed)
        err = std::max(err, std::abs(x[k] - std::round(mid[k])));
      if (diagonal && !fixed.empty()) {
        const int k = fixed[0];
        err = std::max(err,
                       std::abs(x[(k + 1) % 3] + x[(k + 2) % 3] - 1.0));
      }
      worst = std::max(worst, err);
      t.record(err);
    }
    const bool ends = !vertex_label(f.point(0.0)).empty() &&
                      !vertex_label(f.point(1.0)).empty();
    if (!ends) ++r.violations;
    fams.push_back(
        {{"id", f.id}, {"worst", worst}, {"endpoints_are_vertices", ends}});
  }
  r.details = {{"vertices", verts}, {"families", fams}};
  t.finish();
  return r;
}

CheckReport check_quadric_identities(int n_samples, std::uint64_t seed,
                                     double tol) {
  CheckReport r = start(4, "quadric identities", tol);
  Tally t{r};
  Rng rng(seed);
  double even = 0, odd = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double a = rng.uniform(), b = rng.uniform();
    const std::vector<double> d = {a, b, 1.0, 1.0 - a, 1.0 - b};
    const Vec3 x = pqr(Word::from_lists({1, 2, 3, 1, 2}, d)).vec();
    const Vec3 y = pqr(Word::from_lists({2, 1, 3, 2, 1}, d)).vec();
    const double e1 = std::abs(x[0] + x[1] * x[2] - 1.0);
    const double e2 =
        std::abs((1.0 - y[0]) + (1.0 - y[1]) * (1.0 - y[2]) - 1.0);
    even = std::max(even, e1);
    odd = std::max(odd, e2);
    t.record(std::max(e1, e2));
  }
  r.details = {{"p+qr=1", even}, {"(1-p)+(1-q)(1-r)=1", odd}};
  t.finish();
  return r;
}

CheckReport check_golden_point(double witness_tol, double maxmin_tol,
                               std::uint64_t seed) {
  CheckReport r = start(5, "golden point", witness_tol);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double a = (3.0 - std::sqrt(5.0)) / 2.0, b = 1.0 - a;
  const Vec3 x =
      pqr(Word::from_lists({1, 2, 3, 1, 2}, {a, b, 1.0, 1.0 - a, 1.0 - b}))
          .vec();
  const double werr = (x - Vec3::Constant(phi)).cwiseAbs().maxCoeff();
  ++r.samples;
  r.worst = werr;
  if (!(werr <= witness_tol)) ++r.violations;

  FitOptions opt;
  opt.seed = seed;
  const MaxMinResult mm = maximize_min_coordinate(opt);
  const double merr = std::abs(mm.value - 0.6180340);
  ++r.samples;
  if (!(merr <= maxmin_tol)) ++r.violations;

  const ProbeOutcome po =
      probe(Vec3::Constant(phi), Vec3::Ones().normalized(), 1e-3, opt);
  ++r.samples;
  if (po != ProbeOutcome::kUnattainableBeyond) ++r.violations;

  r.details = {{"witness_error", werr},
               {"maxmin", mm.value},
               {"maxmin_error", merr},
               {"maxmin_tolerance", maxmin_tol},
               {"maxmin_witness", pattern_key(mm.witness)},
               {"probe", to_string(po)}};
  r.passed = r.violations == 0;
  return r;
}

CheckReport check_adjoint(int n_flows, std::uint64_t seed, double casimir_tol,
                          double tau_rel_tol) {
  CheckReport r = start(6, "casimir and switching times", casimir_tol);
  Rng rng(seed);
  double cworst = 0, tworst = 0;
  long cviol = 0, tviol = 0;
  for (int i = 0; i < n_flows; ++i) {
    AdjointCovector a;
    for (int k = 0; k < 3; ++k) {
      a.h[k] = rng.uniform(-1.0, 1.0);
      a.R[k] = rng.uniform(-1.0, 1.0);
    }
    const Word w = random_word(random_arcs(rng, 3, 10), rng.next());
    const double d = std::abs(casimir(adjoint_flow(a, w)) - casimir(a));
    cworst = std::max(cworst, d);
    if (!(d <= casimir_tol)) ++cviol;
    ++r.samples;

    const AdjointCovector tri = random_triangle_covector(rng);
    const FacePassageTimes tau = switching_times(tri);
    const Word sw = five_switch_word(tri);
    // Arcs 1..4 are complete face passages.
    for (std::size_t k = 1; k + 1 < sw.size(); ++k) {
      const double expect = tau.face(sw.arcs[k].letter);
      const double rel = std::abs(sw.arcs[k].duration - expect) / expect;
      tworst = std::max(tworst, rel);
      if (!(rel <= tau_rel_tol)) ++tviol;
    }
    ++r.samples;
  }
  r.violations = cviol + tviol;
  r.worst = cworst;
  r.details = {{"casimir_worst", cworst},
               {"casimir_tolerance", casimir_tol},
               {"tau_relative_worst", tworst},
               {"tau_relative_tolerance", tau_rel_tol}};
  r.passed = r.samples > 0 && r.violations == 0;
  return r;
}

CheckReport check_second_order(int n_covectors, std::uint64_t seed,
                               double alpha_tol) {
  CheckReport r = start(7, "second-order test", alpha_tol);
  Tally t{r};
  Rng rng(seed);
  long not_optimal = 0, one_dim = 0;
  double tau_sym = 0;
  std::map<std::string, int> patterns;
  for (int i = 0; i < n_covectors; ++i) {
    const AdjointCovector a = random_triangle_covector(rng);
    const Word w = five_switch_word(a);
    ++patterns[pattern_key(w)];
    const SecondOrderReport rep = ag_test(w, a);
    if (rep.verdict == Verdict::kNotOptimal) ++not_optimal;
    const double t2 = w.arcs[1].duration, t3 = w.arcs[2].duration,
                 t4 = w.arcs[3].duration, t5 = w.arcs[4].duration;
    tau_sym = std::max(tau_sym, std::abs(t5 - t2) / t2);
    if (rep.w_basis.cols() != 1) {
      t.record(std::numeric_limits<double>::infinity());
      continue;
    }
    ++one_dim;
    Eigen::VectorXd v = rep.w_basis.col(0);
    v /= v[5];
    Eigen::VectorXd expect(6);
    expect << -t4 / t3, -t2 / t3, -1.0, t4 / t3, t2 / t3, 1.0;
    t.record((v - expect).cwiseAbs().maxCoeff());
  }
  if (not_optimal != n_covectors) r.violations += n_covectors - not_optimal;
  if (!(tau_sym <= 1e-10)) ++r.violations;
  json pats = json::object();
  for (const auto& [k, n] : patterns) pats[k] = n;
  r.details = {{"one_dimensional", one_dim},
               {"not_optimal", not_optimal},
               {"tau5_tau2_relative", tau_sym},
               {"patterns", pats}};
  t.finish();
  return r;
}

CheckReport check_facet_laws(int n_words, std::uint64_t seed, double tol) {
  CheckReport r = start(8, "facet slice laws", tol);
  Tally t{r};
  Rng rng(seed);
  // p = P(1<2), q = P(2<3), r = P(3<1).
  const int pairs[6][2] = {{1, 2}, {2, 3}, {3, 1}, {2, 1}, {3, 2}, {1, 3}};
  std::map<std::string, double> worst;
  for (int i = 0; i < n_words; ++i) {
    const auto& pr = pairs[i % 6];
    const Word w = random_precedence_word(pr[0], pr[1], 8, rng.next());
    const Vec3 x = pqr(w).vec();
    const bool cyclic = i % 6 < 3;
    // Index of the coordinate fixed by the ordered pair.
    const int k = cyclic ? pr[0] - 1 : pr[1] - 1;
    const double v = cyclic ? 1.0 : 0.0;
    const double sum = x[(k + 1) % 3] + x[(k + 2) % 3];
    const double slack = cyclic ? sum - 1.0 : 1.0 - sum;
    const double err = std::max(std::abs(x[k] - v), std::max(slack, 0.0));
    const std::string key =
        std::to_string(pr[0]) + " before " + std::to_string(pr[1]);
    worst[key] = std::max(worst[key], err);
    t.record(err);
  }
  json d = json::object();
  for (const auto& [k, v] : worst) d[k] = v;
  r.details = d;
  t.finish();
  return r;
}

CheckReport check_solver_roundtrip(int n_words, int n_dice, std::uint64_t seed,
                                   double residual_tol, int threads) {
  CheckReport r = start(9, "solver round-trip", residual_tol);
  FitOptions opt;
  opt.tol = 1e-9;
  opt.seed = seed;
  std::vector<double> res(n_words, 0.0);
  std::vector<char> ok(n_words, 0);
  parallel_for(n_words, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, 9, i));
    const Word w = random_word(random_arcs(rng, 3, 8), rng.next());
    const FitResult f = fit(pqr(w), opt);
    res[i] = f.residual;
    ok[i] = f.status == FitStatus::kAttained;
  });
  long word_fail = 0;
  for (int i = 0; i < n_words; ++i) {
    ++r.samples;
    r.worst = std::max(r.worst, res[i]);
    if (!ok[i] || !(res[i] <= residual_tol)) ++word_fail;
  }
  const DiceReport dr = random_dice_check(
      n_dice, 4, derive_seed(seed, 99),
      [&](const PqrPoint& x) { return fit(x, opt); }, threads);
  r.samples += dr.trials;
  r.violations = word_fail + (dr.trials - dr.attained);
  r.details = {{"words", n_words},
               {"words_failed", word_fail},
               {"word_worst_residual", r.worst},
               {"dice", dr.trials},
               {"dice_attained", dr.attained},
               {"dice_worst_residual", dr.worst_residual},
               {"dice_failures", dr.failures}};
  r.passed = r.samples > 0 && r.violations == 0;
  return r;
}

CheckReport check_counterexamples(std::uint64_t seed) {
  CheckReport r = start(10, "counterexample regression", 1e-12);
  FitOptions opt;
  opt.seed = seed;
  struct Case {
    Vec3 target;
    Word witness;
  };
  const Case cases[] = {
      {{1.0, 0.5, 0.5}, Word{{3, 0.5}, {1, 1.0}, {2, 1.0}, {3, 0.5}}},
      {{0.3, 0.3, 1.0},
       Word{{2, 0.3}, {3, 1.0}, {2, 0.4}, {1, 1.0}, {2, 0.3}}}};
  json items = json::array();
  for (const auto& c : cases) {
    const Vec3 wx = pqr(c.witness).vec();
    const double werr = (wx - c.target).cwiseAbs().maxCoeff();
    const FitResult f = fit(PqrPoint(c.target), opt);
    const Vec3& x = c.target;
    r.samples += 2;
    if (!(werr <= r.tolerance)) ++r.violations;
    if (f.status != FitStatus::kAttained) ++r.violations;
    r.worst = std::max(r.worst, werr);
    items.push_back({{"target", {x[0], x[1], x[2]}},
                     {"witness_error", werr},
                     {"status", to_string(f.status)},
                     {"residual", f.residual},
                     {"p+qr", x[0] + x[1] * x[2]},
                     {"q+rp", x[1] + x[2] * x[0]},
                     {"r+pq", x[2] + x[0] * x[1]}});
  }
  r.details = {{"cases", items}};
  r.passed = r.violations == 0;
  return r;
}

std::vector<CheckReport> run_checks(const std::vector<int>& ids, double scale,
                                    std::uint64_t seed, int threads) {
  if (!(scale > 0.0))
    throw DomainError("scale_positive", "sample scale must be positive");
  auto n = [scale](double base) {
    return std::max(1, static_cast<int>(std::lround(base * scale)));
  };
  std::vector<CheckReport> out;
  for (int id : ids) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(id));
    switch (id) {
      case 1: out.push_back(check_group_axioms(n(1e4), s, 1e-12)); break;
      case 2: out.push_back(check_word_calculus(n(1e4), s, 1e-12)); break;
      case 3: out.push_back(check_vertices_and_edges(n(1e3), s, 1e-12)); break;
      case 4: out.push_back(check_quadric_identities(n(1e4), s, 1e-12)); break;
      case 5: out.push_back(check_golden_point(1e-12, 1e-4, s)); break;
      case 6: out.push_back(check_adjoint(n(1e3), s, 1e-12, 1e-10)); break;
      case 7: out.push_back(check_second_order(n(1e3), s, 1e-8)); break;
      case 8: out.push_back(check_facet_laws(n(1e5), s, 1e-12)); break;
      case 9:
        out.push_back(check_solver_roundtrip(n(1e3), n(1e3), s, 1e-8, threads));
        break;
      case 10: out.push_back(check_counterexamples(s)); break;
      default:
        throw DomainError("check_id_range",
                          "check ids run from 1 to 10, got " +
                              std::to_string(id));
    }
  }
  return out;
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"id", r.id},
          {"name", r.name},
          {"passed", r.passed},
          {"samples", r.samples},
          {"violations", r.violations},
          {"worst", r.worst},
          {"tolerance", r.tolerance},
          {"details", r.details}};
}

}  // namespace carnot
