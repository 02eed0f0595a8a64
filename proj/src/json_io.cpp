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

#include "carnot/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      return;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Vec3 vec_from(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 3)
    throw DomainError("json_shape",
                      std::string(field) + " must be an array of 3 numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number())
      throw DomainError("json_shape", std::string(field) + " must be numeric");
    v[i] = j[i].get<double>();
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  write(j, out);
  return out;
}

Json to_json(const Word& w) {
  Json letters = Json::array();
  Json durations = Json::array();
  for (const Arc& a : w.arcs) {
    letters.push_back(a.letter);
    durations.push_back(a.duration);
  }
  return {{"letters", letters}, {"durations", durations}};
}

Json to_json(const GroupElement& g) {
  return {{"x", vec_json(g.x)}, {"y", vec_json(g.y)}};
}

Json to_json(const PqrPoint& x) {
  return {{"p", x.p()}, {"q", x.q()}, {"r", x.r()}};
}

Json to_json(const FitResult& r) {
  Json j = {{"status", to_string(r.status)},
            {"residual", r.residual},
            {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
            {"max_arcs", r.max_arcs},
            {"patterns_tried", r.patterns_tried}};
  if (r.status == FitStatus::kNotFound)
    j["note"] =
        "no witness found within the pattern cap; this is not a proof of "
        "unattainability";
  return j;
}

Json to_json(const AdjointCovector& a) {
  return {{"h", vec_json(a.h)}, {"R", vec_json(a.R)}};
}

Json to_json(const Synthesis& s) {
  Json events = Json::array();
  for (const auto& e : s.events)
    events.push_back({{"t", e.t}, {"h", vec_json(e.h)}});
  Json face = Json::array();
  for (Letter l : s.report.singular_face) face.push_back(l);
  return {{"word", to_json(s.word)},
          {"regime", to_string(s.report.kind)},
          {"casimir", s.report.casimir},
          {"K", s.report.K},
          {"switches", s.report.switches},
          {"singular_face", face},
          {"events", events},
          {"final", to_json(s.final_state)}};
}

Json to_json(const SecondOrderReport& r) {
  Json eig = Json::array();
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i)
    eig.push_back(r.eigenvalues[i]);
  return {{"verdict", to_string(r.verdict)},
          {"switches", r.switches},
          {"kernel_dim", r.w_basis.cols()},
          {"eigenvalues", eig},
          {"g_restricted", matrix_json(r.g_restricted)},
          {"w_basis", matrix_json(r.w_basis)},
          {"constraint_residual", r.constraint_residual}};
}

Word word_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("letters") || !j.contains("durations"))
    throw DomainError("json_shape",
                      "word needs \"letters\" and \"durations\" arrays");
  const Json& l = j["letters"];
  const Json& d = j["durations"];
  if (!l.is_array() || !d.is_array())
    throw DomainError("json_shape", "letters and durations must be arrays");
  std::vector<Letter> letters;
  std::vector<double> durations;
  for (const auto& v : l) {
    if (!v.is_number_integer())
      throw DomainError("letter_range", "letters must be integers 1..3");
    letters.push_back(v.get<int>());
  }
  for (const auto& v : d) {
    if (!v.is_number())
      throw DomainError("json_shape", "durations must be numbers");
    durations.push_back(v.get<double>());
  }
  return canonicalize(Word::from_lists(letters, durations));
}

AdjointCovector covector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("h") || !j.contains("R"))
    throw DomainError("json_shape", "covector needs \"h\" and \"R\"");
  AdjointCovector a;
  a.h = vec_from(j["h"], "h");
  a.R = vec_from(j["R"], "R");
  if (!a.h.allFinite() || !a.R.allFinite())
    throw DomainError("finite_input", "covector entries must be finite");
  return a;
}

DiscreteDistribution distribution_from_json(const Json& j) {
  if (!j.is_array())
    throw DomainError("json_shape", "distribution must be an array of atoms");
  std::vector<Atom> atoms;
  for (const auto& a : j) {
    if (a.is_array() && a.size() == 2 && a[0].is_number() &&
        a[1].is_number()) {
      atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    } else if (a.is_object() && a.contains("value") && a.contains("mass")) {
      atoms.push_back({a["value"].get<double>(), a["mass"].get<double>()});
    } else {
      throw DomainError("json_shape",
                        "atom must be [value, mass] or {value, mass}");
    }
  }
  return DiscreteDistribution(std::move(atoms));
}

}  // namespace carnot
