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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Sample counts and tolerances are pinned here, not taken from defaults.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "carnot/experiments.hpp"
#include "carnot/json_io.hpp"

namespace {

using carnot::CheckReport;

constexpr double kTimeBudgetSeconds = 60.0;
constexpr std::uint64_t kSeed = 20260101;

struct Criterion {
  int id;
  const char* title;
  std::function<CheckReport()> run;
};

}  // namespace

int main() {
  using namespace carnot;
  const Criterion criteria[] = {
      {1, "group axioms on 1e4 triples, 1e-12",
       [] { return check_group_axioms(10000, kSeed + 1, 1e-12); }},
      {2, "word calculus on 1e4 words, 1e-12",
       [] { return check_word_calculus(10000, kSeed + 2, 1e-12); }},
      {3, "six vertices and 3-switch families over 1e3 samples, 1e-12",
       [] { return check_vertices_and_edges(1000, kSeed + 3, 1e-12); }},
      {4, "quadric identities on 1e4 parameters, 1e-12",
       [] { return check_quadric_identities(10000, kSeed + 4, 1e-12); }},
      {5, "golden point: witness 1e-12, max-min 0.6180340 +- 1e-4, probe",
       [] { return check_golden_point(1e-12, 1e-4, kSeed + 5); }},
      {6, "Casimir 1e-12 over 1e3 flows, passage times relative 1e-10",
       [] { return check_adjoint(1000, kSeed + 6, 1e-12, 1e-10); }},
      {7, "1e3 triangle covectors: dim W = 1, alpha ratios 1e-8, not-optimal",
       [] { return check_second_order(1000, kSeed + 7, 1e-8); }},
      {8, "facet slice laws on 1e5 constrained words, 1e-12",
       [] { return check_facet_laws(100000, kSeed + 8, 1e-12); }},
      {9, "1e3 hidden words to residual 1e-8, 1e3 dice triples attained",
       [] { return check_solver_roundtrip(1000, 1000, kSeed + 9, 1e-8, 1); }},
      {10, "(1,1/2,1/2) and (0.3,0.3,1) attained",
       [] { return check_counterexamples(kSeed + 10); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string info;
    try {
      const CheckReport r = c.run();
      ok = r.passed;
      info = "samples=" + std::to_string(r.samples) +
             " violations=" + std::to_string(r.violations) +
             " worst=" + format_number(r.worst);
      if (!ok) info += " details=" + dump(r.details);
    } catch (const std::exception& e) {
      info = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    if (secs > kTimeBudgetSeconds) {
      ok = false;
      info += " over time budget";
    }
    std::printf("[%s] criterion %d: %s (%s, %.2f s)\n", ok ? "PASS" : "FAIL",
                c.id, c.title, info.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
