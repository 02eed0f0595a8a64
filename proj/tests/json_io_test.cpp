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

#include <gtest/gtest.h>

#include "carnot/errors.hpp"

namespace carnot {
namespace {

TEST(JsonIoTest, NumbersUseSeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3), "0.33333333333333331");
  EXPECT_EQ(dump(Json{{"a", 0.3}, {"b", {1, 2.5}}}),
            "{\"a\":0.29999999999999999,\"b\":[1,2.5]}");
}

TEST(JsonIoTest, WordRoundTripIsLossless) {
  const Word w{{1, 0.1}, {3, 1.0 / 3}, {2, 0.7}};
  EXPECT_EQ(word_from_json(Json::parse(dump(to_json(w)))), w);
}

TEST(JsonIoTest, WordInputIsCanonicalized) {
  const Word w = word_from_json(
      Json::parse(R"({"letters":[1,1,2,3],"durations":[0.5,0.5,0,1]})"));
  EXPECT_EQ(w, (Word{{1, 1.0}, {3, 1.0}}));
}

TEST(JsonIoTest, MalformedWordsNameTheInvariant) {
  auto invariant = [](const char* text) {
    try {
      word_from_json(Json::parse(text));
    } catch (const DomainError& e) {
      return e.invariant();
    }
    return std::string("none");
  };
  EXPECT_EQ(invariant(R"({"letters":[1]})"), "json_shape");
  EXPECT_EQ(invariant(R"({"letters":[1.5],"durations":[1]})"),
            "letter_range");
  EXPECT_EQ(invariant(R"({"letters":[1,2],"durations":[1]})"),
            "word_lists_same_length");
  EXPECT_EQ(invariant(R"({"letters":[4],"durations":[1]})"), "letter_range");
}

TEST(JsonIoTest, CovectorAndDistribution) {
  const AdjointCovector a =
      covector_from_json(Json::parse(R"({"h":[1,0,0],"R":[0.5,-0.25,2]})"));
  EXPECT_EQ(a.R, Vec3(0.5, -0.25, 2));
  EXPECT_EQ(dump(to_json(a)), R"({"R":[0.5,-0.25,2],"h":[1,0,0]})");
  const DiscreteDistribution d =
      distribution_from_json(Json::parse(R"([[2,0.5],{"value":1,"mass":0.5}])"));
  EXPECT_EQ(d.atoms().size(), 2u);
  EXPECT_THROW(covector_from_json(Json::parse(R"({"h":[1,0]})")), DomainError);
}

TEST(JsonIoTest, FitResultCarriesNoteWhenNotFound) {
  FitResult r;
  r.max_arcs = 8;
  const Json j = to_json(r);
  EXPECT_EQ(j["status"], "not-found");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_TRUE(j.contains("note"));
}

}  // namespace
}  // namespace carnot
