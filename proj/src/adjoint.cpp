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

#include "carnot/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

constexpr double kRateTolerance = 1e-14;
constexpr std::size_t kMaxArcs = 1'000'000;

std::vector<int> tied_indices(const Vec3& h) {
  const double top = h.maxCoeff();
  std::vector<int> tied;
  for (int i = 0; i < 3; ++i) {
    if (h[i] >= top - kTieTolerance) tied.push_back(i);
  }
  return tied;
}

}  // namespace

double AdjointCovector::pair(int i, int j) const {
  if (i == j) return 0.0;
  if (i < j) return R[pair_index(i, j)];
  return -R[pair_index(j, i)];
}

Eigen::Matrix3d AdjointCovector::skew() const {
  Eigen::Matrix3d m;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m(i - 1, j - 1) = pair(i, j);
  }
  return m;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::kBangBang:
      return "bang-bang";
    case Regime::kSingularEdge:
      return "singular-edge";
    case Regime::kSingularVertex:
      return "singular-vertex";
    case Regime::kMixed:
      return "mixed";
  }
  return "unknown";
}

double casimir(const AdjointCovector& a) {
  return a.h[0] * a.h23() + a.h[1] * a.h31() + a.h[2] * a.h12();
}

double casimir_gap(const AdjointCovector& a) {
  return a.h12() + a.h23() + a.h31() - casimir(a);
}

AdjointCovector adjoint_flow(const AdjointCovector& a, const Word& w) {
  const Eigen::Matrix3d m = a.skew();
  AdjointCovector out = a;
  for (const auto& arc : w.arcs) {
    if (arc.letter < 1 || arc.letter > 3) {
      throw DomainError("letter_range", "letter outside {1,2,3}");
    }
    out.h += arc.duration * m.col(arc.letter - 1);
  }
  return out;
}

std::vector<Letter> maximizing_controls(const AdjointCovector& a,
                                        double tie_tol) {
  const double top = a.h.maxCoeff();
  std::vector<Letter> out;
  for (int i = 0; i < 3; ++i) {
    if (a.h[i] >= top - tie_tol) out.push_back(i + 1);
  }
  return out;
}

AdjointCovector normalize(const AdjointCovector& a) {
  const double top = a.h.maxCoeff();
  if (!(top > 0.0)) {
    throw DomainError("covector_normalizable",
                      "max h_i must be positive to reach the level H = 1");
  }
  return {a.h / top, a.R / top};
}

Synthesis synthesize(const AdjointCovector& a, double horizon) {
  if (std::abs(a.h.maxCoeff() - 1.0) > kTieTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "covector is not normalized: max h_i = " << a.h.maxCoeff();
    throw DomainError("covector_normalized", msg.str());
  }
  if (!(horizon >= 0.0)) {
    throw DomainError("duration_nonnegative", "horizon must be nonnegative");
  }

  const Eigen::Matrix3d m = a.skew();
  Synthesis out;
  out.report.casimir = casimir(a);
  out.report.K = casimir_gap(a);

  Vec3 h = a.h;
  double t = 0.0;
  out.events.push_back({0.0, h});
  bool singular = false;

  auto stop_singular = [&](Regime kind, std::vector<Letter> face) {
    singular = true;
    out.report.kind = kind;
    out.report.singular_face = std::move(face);
  };

  while (t < horizon && out.word.size() < kMaxArcs) {
    const std::vector<int> tied = tied_indices(h);
    int letter = tied.front();

    if (tied.size() == 3) {
      // Vertex V: invariant when ker R = span(h23, h31, h12) meets the
      // control simplex.
      const Vec3 kernel(a.h23(), a.h31(), a.h12());
      const bool in_cone = (kernel.array() >= -kRateTolerance).all() ||
                           (kernel.array() <= kRateTolerance).all();
      int leaving = -1;
      for (int i = 0; i < 3 && !in_cone; ++i) {
        bool all_decrease = true;
        for (int j = 0; j < 3; ++j) {
          if (j != i && !(m(j, i) < -kRateTolerance)) all_decrease = false;
        }
        if (all_decrease) {
          leaving = i;
          break;
        }
      }
      if (leaving < 0) {
        stop_singular(Regime::kSingularVertex, {1, 2, 3});
        break;
      }
      letter = leaving;
    } else if (tied.size() == 2) {
      const int i = tied[0];
      const int j = tied[1];
      if (std::abs(m(i, j)) <= kTieTolerance) {
        stop_singular(Regime::kSingularEdge, {i + 1, j + 1});
        break;
      }
      // Pick the face whose control pushes the other tied component down.
      letter = (m(j, i) < 0.0) ? i : j;
    }

    const Eigen::Vector3d rate = m.col(letter);
    double dt = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 3; ++j) {
      if (j == letter || !(rate[j] > kRateTolerance)) continue;
      dt = std::min(dt, (1.0 - h[j]) / rate[j]);
    }
    dt = std::max(dt, 0.0);
    const bool switches = dt < horizon - t;
    const double step = switches ? dt : horizon - t;
    out.word.arcs.push_back({letter + 1, step});
    h += step * rate;
    t += step;
    if (switches) {
      // Snap the arriving component(s) onto the face they reached.
      for (int j = 0; j < 3; ++j) {
        if (j != letter && rate[j] > kRateTolerance &&
            std::abs(h[j] - 1.0) <= 1e-9) {
          h[j] = 1.0;
        }
      }
      h[letter] = std::min(h[letter], 1.0);
    }
    out.events.push_back({t, h});
  }

  out.word = canonicalize(out.word);
  out.report.switches = out.word.switch_count();
  if (singular && !out.word.empty()) out.report.kind = Regime::kMixed;
  out.final_state = {h, a.R};
  return out;
}

bool is_triangle_type(const AdjointCovector& a) {
  const Vec3 c(a.h12(), a.h23(), a.h31());
  return (c.array() > 0.0).all() || (c.array() < 0.0).all();
}

FacePassageTimes switching_times(const AdjointCovector& a) {
  if (!is_triangle_type(a)) {
    throw DomainError("triangle_regime",
                      "h12, h23, h31 must share one strict sign");
  }
  const double s = a.h12() > 0.0 ? 1.0 : -1.0;
  const double h12 = s * a.h12();
  const double h23 = s * a.h23();
  const double h31 = s * a.h31();
  FacePassageTimes out;
  out.K = h12 + h23 + h31 - s * casimir(a);
  if (out.K < -kTieTolerance) {
    throw DomainError("triangle_regime",
                      "casimir gap K is negative; the covector is not on the "
                      "boundary of the quadrant");
  }
  if (std::abs(out.K) <= kTieTolerance) {
    out.K = 0.0;
    return out;
  }
  out.on_face[0] = out.K / (h31 * h12);
  out.on_face[1] = out.K / (h12 * h23);
  out.on_face[2] = out.K / (h23 * h31);
  return out;
}

}  // namespace carnot
