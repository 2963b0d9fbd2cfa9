// Copyright 2026 The antimatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <functional>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace antimatch {
namespace {

std::string error_of(const std::function<void()>& run) {
  try {
    run();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Json, StableRoundTrip) {
  const auto inst = testing::example1();
  const Json j = to_json(inst);
  EXPECT_EQ(stable_from_json(j), inst);
  EXPECT_EQ(stable_from_json(parse_json(j.dump())), inst);
  EXPECT_EQ(j.dump(), to_json(stable_from_json(j)).dump());
}

TEST(Json, WeightedRoundTrip) {
  const Json j = parse_json(R"({"left": ["a"], "right": ["x", "y"],
                                "edges": [["a", "x"], ["a", "y"]],
                                "weights": [-3, "2.5"]})");
  const auto inst = weighted_from_json(j);
  EXPECT_EQ(inst.weight(0), Rational(-3));
  EXPECT_EQ(inst.weight(1), Rational(5, 2));
  EXPECT_EQ(weighted_from_json(to_json(inst)), inst);
  EXPECT_EQ(to_json(inst)["weights"].dump(), R"([-3,"2.5"])");
}

TEST(Json, HugeWeightsBecomeStrings) {
  const auto f = random_antimatroid(6, 4);
  const auto bundle = represent_weighted(f, build_decoration(f));
  const auto& inst = std::get<WeightedInstance>(bundle.instance);
  const Json j = to_json(inst);
  EXPECT_EQ(weighted_from_json(parse_json(j.dump())), inst);
}

TEST(Json, FamilyRoundTrip) {
  const auto f = testing::example1_family();
  EXPECT_EQ(family_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f).dump(),
            R"({"ground":["v1","v2","v3"],"sets":[[],["v1"],["v2"],["v1","v2"],["v1","v2","v3"]]})");
}

TEST(Json, ReportLayout) {
  const Json j = to_json(enumerate_codomain_mm(testing::example2()));
  EXPECT_EQ(j.dump(),
            R"({"kind":"weighted","family":{"ground":["v1","v2"],"sets":[[],["v1"],["v1","v2"]]},)"
            R"("witnesses":{"{}":[],"{v1}":["u1"],"{v1,v2}":["u1","u3"]}})");
}

TEST(Json, AxiomReportLayout) {
  const auto bad = testing::family({"v1", "v2"}, {{}, {"v1"}, {"v2"}});
  const Json j = to_json(is_antimatroid(bad), bad);
  EXPECT_EQ(j["antimatroid"], false);
  EXPECT_EQ(j["failed_axiom"], "union-closedness");
  EXPECT_EQ(j["witness"].dump(), R"([["v1"],["v2"]])");
}

TEST(Json, MalformedInput) {
  EXPECT_NE(error_of([] { parse_json("{\"left\": [", "f.json"); }).find("f.json: malformed JSON"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_json("{\n  \"a\": ]\n}"); }).find("line 2"), std::string::npos);
  EXPECT_EQ(error_of([] { graph_from_json(parse_json("[]")); }),
            "expected a JSON object at the top level");
  EXPECT_EQ(error_of([] { graph_from_json(parse_json(R"({"left": []})")); }),
            "missing field 'right'");
  EXPECT_EQ(error_of([] { graph_from_json(parse_json(R"({"left": [1], "right": [], "edges": []})")); }),
            "field 'left[0]': expected a string");
  EXPECT_EQ(error_of([] {
              graph_from_json(parse_json(R"({"left": ["a"], "right": ["b"], "edges": [["a"]]})"));
            }),
            "field 'edges[0]': expected [u, v] strings");
  EXPECT_EQ(error_of([] {
              weighted_from_json(parse_json(
                  R"({"left": ["a"], "right": ["b"], "edges": [["a", "b"]], "weights": [1.5]})"));
            }),
            "field 'weights[0]': non-integer weights must be decimal strings");
  EXPECT_NE(error_of([] {
              stable_from_json(parse_json(
                  R"({"left": ["a"], "right": ["b"], "edges": [["a", "b"]], "prefs": {"a": ["c"]}})"));
            }),
            "");
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), InputError);
}

}  // namespace
}  // namespace antimatch
