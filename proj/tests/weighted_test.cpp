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


#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace antimatch {
namespace {

using testing::example2;
using testing::ids;

Matching pairs(const WeightedInstance& inst,
               const std::vector<std::pair<std::string, std::string>>& list) {
  return matching_from_pairs(inst.graph(), list);
}

TEST(ParseWeight, Decimals) {
  EXPECT_EQ(parse_weight("17"), Rational(17));
  EXPECT_EQ(parse_weight("-3"), Rational(-3));
  EXPECT_EQ(parse_weight("3.25"), Rational(13, 4));
  EXPECT_EQ(parse_weight("-0.1"), Rational(-1, 10));
  EXPECT_EQ(parse_weight("+.5"), Rational(1, 2));
  EXPECT_EQ(parse_weight("123456789012345678901234567890"),
            Rational(boost::multiprecision::cpp_int("123456789012345678901234567890")));
  for (const char* bad : {"", "-", "1e3", "1.", "0x10", "1/2", "a", "1.2.3"})
    EXPECT_THROW(parse_weight(bad), InputError) << bad;
}

TEST(FormatWeight, RoundTrips) {
  for (const char* text : {"0", "-7", "3.25", "-0.1", "0.005"})
    EXPECT_EQ(format_weight(parse_weight(text)), text);
  EXPECT_EQ(format_weight(Rational(1, 3)), "1/3");
}

TEST(MatchingWeight, Example2) {
  const auto inst = example2();
  EXPECT_EQ(matching_weight(inst, pairs(inst, {{"u1", "v2"}, {"u3", "v1"}})), Rational(23));
  EXPECT_EQ(matching_weight(inst, Matching{}), Rational(0));
  EXPECT_EQ(matching_weight(inst, pairs(inst, {{"u1", "v1"}})), Rational(20));
  EXPECT_THROW(matching_weight(inst, pairs(inst, {{"u1", "v1"}, {"u2", "v1"}})), InputError);
}

TEST(MaxWeight, Example2) {
  const auto inst = example2();
  const auto& g = inst.graph();
  EXPECT_EQ(max_weight_matching(inst, left_mask(g, {"u1", "u2"})), pairs(inst, {{"u1", "v1"}}));
  EXPECT_EQ(max_weight_matching(inst, left_mask(g, {})), Matching{});
  EXPECT_EQ(max_weight_matching(inst, full_left(g)), pairs(inst, {{"u1", "v2"}, {"u3", "v1"}}));
}

TEST(MaxWeight, Example2InducedAndChoice) {
  const auto inst = example2();
  const auto& g = inst.graph();
  EXPECT_EQ(induced_map_mm(inst, left_mask(g, {"u1", "u2"})), ids({"v1"}));
  EXPECT_TRUE(induced_map_mm(inst, left_mask(g, {})).empty());
  EXPECT_EQ(induced_map_mm(inst, full_left(g)), ids({"v1", "v2"}));
  EXPECT_EQ(choice_function_mm(inst, left_mask(g, {"u1", "u2"})), ids({"u1"}));
  EXPECT_TRUE(choice_function_mm(inst, left_mask(g, {})).empty());
  EXPECT_EQ(choice_function_mm(inst, full_left(g)), ids({"u1", "u3"}));
}

TEST(Oracle, Example2AndNegative) {
  const auto inst = example2();
  const auto& g = inst.graph();
  EXPECT_EQ(oracle_max_weight(inst, full_left(g)), pairs(inst, {{"u1", "v2"}, {"u3", "v1"}}));
  EXPECT_EQ(oracle_max_weight(inst, left_mask(g, {})), Matching{});

  WeightedInstance negative(g, {Rational(-1), Rational(-2), Rational(-3), Rational(-4)});
  for (std::uint64_t s = 0; s < 8; ++s) {
    EXPECT_EQ(oracle_max_weight(negative, left_mask_from_bits(3, s)), Matching{});
    EXPECT_EQ(max_weight_matching(negative, left_mask_from_bits(3, s)), Matching{});
  }
}

TEST(TieBreak, PrefersSmallerEdgeIds) {
  BipartiteGraph g({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  WeightedInstance flat(g, std::vector<Rational>(4, Rational(1)));
  // {ax, by} has ids {0, 3}, {ay, bx} has {1, 2}; 2^1 + 2^2 < 2^0 + 2^3.
  EXPECT_EQ(max_weight_matching(flat, full_left(g)), matching_from_pairs(g, {{"a", "y"}, {"b", "x"}}));
  EXPECT_EQ(oracle_max_weight(flat, full_left(g)), max_weight_matching(flat, full_left(g)));

  WeightedInstance zero(g, std::vector<Rational>(4, Rational(0)));
  EXPECT_EQ(max_weight_matching(zero, full_left(g)), Matching{});
}

TEST(TieBreak, RationalWeightsAreExact) {
  // {ax, by}, {ay, bx} and {ay} all weigh exactly 0.3; {ay} has the smallest
  // id sum. Binary floating point would rank 0.1 + 0.2 above 0.3.
  BipartiteGraph g({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  WeightedInstance inst(g, {parse_weight("0.1"), parse_weight("0.3"), parse_weight("0"),
                            parse_weight("0.2")});
  EXPECT_EQ(max_weight_matching(inst, full_left(g)), matching_from_pairs(g, {{"a", "y"}}));
  EXPECT_EQ(oracle_max_weight(inst, full_left(g)), matching_from_pairs(g, {{"a", "y"}}));
}

TEST(Solver, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_weighted_instance(seed);
    const auto check = check_solver_against_oracle(inst, 36);
    EXPECT_TRUE(check.holds) << seed << ": " << check.failure;
    EXPECT_EQ(check.cases, std::size_t{1} << inst.graph().left_count());
  }
}

TEST(Solver, ExplorationOrderDoesNotMatter) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_weighted_instance(seed, {6, 6, 0.6, -5, 5});
    const auto& g = inst.graph();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.left_count()); s += 3) {
      const LeftMask mask = left_mask_from_bits(g.left_count(), s);
      const Matching reference = max_weight_matching(inst, mask);
      for (std::uint64_t explore = 1; explore <= 4; ++explore)
        EXPECT_EQ(max_weight_matching(inst, mask, SolverOptions{explore}), reference);
    }
  }
}

TEST(WeightedInstance, RejectsBadInput) {
  const auto g = testing::example2_graph();
  EXPECT_THROW(WeightedInstance(g, {Rational(1)}), InputError);
  const auto inst = example2();
  EXPECT_THROW(inst.weight(17), InputError);
  EXPECT_THROW(max_weight_matching(inst, LeftMask(4, false)), InputError);
}

TEST(WeightedProperties, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_weighted_instance(seed, {5, 5});
    const auto table = tabulate_subsets(inst);
    EXPECT_TRUE(check_monotonicity(inst, table).holds) << seed;
    EXPECT_TRUE(check_augmenting_path_shape(inst, table).holds) << seed;
    EXPECT_TRUE(check_choice_function(inst, table).holds) << seed;
  }
}

}  // namespace
}  // namespace antimatch
