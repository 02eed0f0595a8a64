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

#include "carnot/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "carnot/json_io.hpp"

namespace carnot {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "carnot_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, PqrOfPermutationWord) {
  const CliRun r = run({"pqr", R"({"letters":[1,2,3],"durations":[1,1,1]})"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"p\":1,\"q\":1,\"r\":0}\n");
}

TEST(CliTest, EndpointOfEmptyWordIsIdentity) {
  const CliRun r = run({"endpoint", R"({"letters":[],"durations":[]})"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"x\":[0,0,0],\"y\":[0,0,0]}\n");
}

TEST(CliTest, MemberAboveCapIsNotFound) {
  const CliRun r = run({"member", "0.7", "0.7", "0.7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["status"], "not-found");
}

TEST(CliTest, MemberCounterexampleAttained) {
  const CliRun r = run({"member", "1", "0.5", "0.5"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "attained");
  EXPECT_LE(j["residual"].get<double>(), 1e-7);
}

TEST(CliTest, DomainErrorsExitOneWithInvariant) {
  CliRun r = run({"pqr", R"({"letters":[1,2],"durations":[1,1]})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["invariant"], "section_word");
  r = run({"pqr", "{not json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["invariant"], "json_well_formed");
  r = run({"member", "2", "0", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["invariant"], "pqr_in_unit_cube");
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"member", "0.5"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"--threads", "0", "pqr", "{}"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, DiceFromDistributions) {
  const CliRun r = run({"dice", R"([[[1,1]],[[-1,0.3],[0.5,0.4],[2,0.3]],[[0,1]]])"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["p"].get<double>(), 0.3, 1e-15);
  EXPECT_EQ(j["r"].get<double>(), 1.0);
}

TEST(CliTest, SimulateAdjointWritesSwitches) {
  const std::string csv = testing::TempDir() + "switches.csv";
  const CliRun r = run({"simulate-adjoint", R"({"h":[1,0.2,-0.5],"R":[0.7,-1.1,0.4]})",
                     "--horizon", "2", "--switch-csv", csv});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["regime"], "bang-bang");
  EXPECT_EQ(j["word"]["letters"], Json::parse("[1,3]"));
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "index,t,h1,h2,h3");
  std::remove(csv.c_str());
}

TEST(CliTest, SecondOrderReport) {
  const CliRun r = run(
      {"second-order",
       R"({"word":{"letters":[1,2,3],"durations":[1.1428571428571428,6.8928571428571432,0.5]},)"
       R"("covector":{"h":[1,0.2,-0.5],"R":[-0.7,1.1,-0.4]}})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"], "inconclusive");
}

TEST(CliTest, AtlasWritesMesh) {
  const std::string obj = testing::TempDir() + "atlas.obj";
  const CliRun r = run({"atlas", "--resolution", "4", "--obj", obj});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["mesh"]["closed"].get<bool>());
  EXPECT_EQ(j["vertices"].size(), 6u);
  std::ifstream in(obj);
  EXPECT_TRUE(in.good());
  std::remove(obj.c_str());
}

TEST(CliTest, McVerifySingleCheck) {
  const CliRun r = run({"mc-verify", "--check", "1,4", "--scale", "0.01"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0]["passed"].get<bool>());
  EXPECT_EQ(run({"mc-verify", "--check", "11"}).code, 1);
}

TEST(CliTest, OutputIsReproducible) {
  const std::vector<std::string> args = {"--seed", "5", "member", "0.4", "0.6",
                                         "0.5"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> threaded = {"--threads", "2", "--seed", "5",
                                             "mc-verify", "--check", "9",
                                             "--scale", "0.01"};
  const std::vector<std::string> serial = {"--seed", "5", "mc-verify",
                                           "--check", "9", "--scale", "0.01"};
  EXPECT_EQ(run(threaded).out, run(serial).out);
}

}  // namespace
}  // namespace carnot
