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

#ifndef CARNOT_JSON_IO_HPP_
#define CARNOT_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "carnot/adjoint.hpp"
#include "carnot/attainability.hpp"
#include "carnot/group.hpp"
#include "carnot/probability.hpp"
#include "carnot/second_order.hpp"
#include "carnot/words.hpp"

namespace carnot {

using Json = nlohmann::json;

/// Shortest form that round-trips is not needed; 17 significant digits are.
std::string format_number(double v);

/// Compact JSON text with every floating value written via format_number.
std::string dump(const Json& j);

Json to_json(const Word& w);
Json to_json(const GroupElement& g);
Json to_json(const PqrPoint& x);
Json to_json(const FitResult& r);
Json to_json(const AdjointCovector& a);
Json to_json(const Synthesis& s);
Json to_json(const SecondOrderReport& r);

/// {"letters": [...], "durations": [...]}; the result is canonicalized.
Word word_from_json(const Json& j);

/// {"h": [h1,h2,h3], "R": [h12,h13,h23]}.
AdjointCovector covector_from_json(const Json& j);

/// [{"value": v, "mass": m}, ...] or [[v, m], ...].
DiscreteDistribution distribution_from_json(const Json& j);

}  // namespace carnot

#endif  // CARNOT_JSON_IO_HPP_
