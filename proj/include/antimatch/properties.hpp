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

// Exhaustive property checks over all left subsets of small instances:
// monotonicity and saturation of F, the augmenting-path shape of MM when one
// left vertex is added, path independence of Ch, proposal-order
// independence, equal vertex sets across stable matchings, and solver/oracle
// agreement. Used by the tests, the acceptance suite and `antimatch fuzz`.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "antimatch/graph.hpp"
#include "antimatch/induced.hpp"
#include "antimatch/stable.hpp"
#include "antimatch/weighted.hpp"

namespace antimatch {

inline constexpr std::size_t kPropertyLeftLimit = 16;

struct PropertyCheck {
  bool holds = true;
  std::size_t cases = 0;  // number of individual assertions evaluated
  std::string failure;    // first violation

  void fail(std::string what) {
    if (holds) failure = std::move(what);
    holds = false;
  }
};

// SM or MM, matched left bits and matched right bits for every U'.
struct SubsetTable {
  std::size_t left_count = 0;
  std::vector<Matching> matching;
  std::vector<std::uint64_t> chosen;  // Ch(U')
  std::vector<ElementMask> image;     // F(U')
};

template <class Instance>
SubsetTable tabulate_subsets(const Instance& inst) {
  const BipartiteGraph& g = inst.graph();
  const std::size_t n = g.left_count();
  if (n > kPropertyLeftLimit)
    throw LimitError("property checks need at most " + std::to_string(kPropertyLeftLimit) +
                     " left vertices");
  if (g.right_count() > kMaxGroundSize) throw LimitError("too many right vertices");
  SubsetTable table;
  table.left_count = n;
  const std::uint64_t count = std::uint64_t{1} << n;
  table.matching.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    Matching m = detail::solve(inst, left_mask_from_bits(n, s));
    table.chosen.push_back(detail::left_bits(g, m));
    table.image.push_back(detail::right_bits(g, m));
    table.matching.push_back(std::move(m));
  }
  return table;
}

inline std::string subset_text(const BipartiteGraph& g, std::uint64_t bits) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.left_count(); ++i)
    if ((bits >> i) & 1U) out += (out.size() > 1 ? "," : "") + g.left_id(i);
  return out + "}";
}

// For all U2 subset of U1: F(U2) subset of F(U1), and |F(U1)| = |U1| implies
// |F(U2)| = |U2|.
template <class Instance>
PropertyCheck check_monotonicity(const Instance& inst, const SubsetTable& table) {
  const BipartiteGraph& g = inst.graph();
  PropertyCheck check;
  const std::uint64_t count = std::uint64_t{1} << table.left_count;
  for (std::uint64_t u1 = 0; u1 < count; ++u1) {
    const bool saturated = std::popcount(table.image[u1]) == std::popcount(u1);
    for (std::uint64_t u2 = u1;; u2 = (u2 - 1) & u1) {
      ++check.cases;
      if ((table.image[u2] & ~table.image[u1]) != 0)
        check.fail("monotonicity: F(" + subset_text(g, u2) + ") not within F(" +
                   subset_text(g, u1) + ")");
      if (saturated && std::popcount(table.image[u2]) != std::popcount(u2))
        check.fail("saturation: F(" + subset_text(g, u1) + ") saturated but F(" +
                   subset_text(g, u2) + ") is not");
      if (u2 == 0) break;
    }
  }
  return check;
}

template <class Instance>
PropertyCheck check_monotonicity(const Instance& inst) {
  return check_monotonicity(inst, tabulate_subsets(inst));
}

// For U1 = U2 + q: MM(U1) (sym. diff.) MM(U2) is empty or one path ending at q.
inline PropertyCheck check_augmenting_path_shape(const WeightedInstance& inst,
                                                 const SubsetTable& table) {
  const BipartiteGraph& g = inst.graph();
  PropertyCheck check;
  const std::uint64_t count = std::uint64_t{1} << table.left_count;
  for (std::uint64_t u2 = 0; u2 < count; ++u2)
    for (std::size_t q = 0; q < table.left_count; ++q) {
      if ((u2 >> q) & 1U) continue;
      const std::uint64_t u1 = u2 | (std::uint64_t{1} << q);
      ++check.cases;
      const auto parts =
          symmetric_difference_components(g, table.matching[u1], table.matching[u2]);
      if (parts.empty()) continue;
      const std::string& qid = g.left_id(q);
      const bool shaped =
          parts.size() == 1 && parts[0].shape == ComponentShape::path &&
          std::find(parts[0].endpoints.begin(), parts[0].endpoints.end(), qid) !=
              parts[0].endpoints.end();
      if (!shaped)
        check.fail("adding " + qid + " to " + subset_text(g, u2) +
                   " changes MM by something other than one path from " + qid);
    }
  return check;
}

inline PropertyCheck check_augmenting_path_shape(const WeightedInstance& inst) {
  return check_augmenting_path_shape(inst, tabulate_subsets(inst));
}

// Ch(Ch(U1) u U2) = Ch(U1 u U2) for all U1, U2, and |Ch(U1)| <= |Ch(U2)|
// whenever U1 is a subset of U2.
template <class Instance>
PropertyCheck check_choice_function(const Instance& inst, const SubsetTable& table) {
  const BipartiteGraph& g = inst.graph();
  PropertyCheck check;
  const std::uint64_t count = std::uint64_t{1} << table.left_count;
  for (std::uint64_t u1 = 0; u1 < count; ++u1)
    for (std::uint64_t u2 = 0; u2 < count; ++u2) {
      ++check.cases;
      if (table.chosen[table.chosen[u1] | u2] != table.chosen[u1 | u2])
        check.fail("path independence fails for U1=" + subset_text(g, u1) +
                   ", U2=" + subset_text(g, u2));
      if ((u1 & ~u2) == 0 && std::popcount(table.chosen[u1]) > std::popcount(table.chosen[u2]))
        check.fail("size monotonicity fails for " + subset_text(g, u1) + " within " +
                   subset_text(g, u2));
    }
  return check;
}

template <class Instance>
PropertyCheck check_choice_function(const Instance& inst) {
  return check_choice_function(inst, tabulate_subsets(inst));
}

// Deferred acceptance under `orders` random proposal orders per subset gives
// the FIFO result every time.
inline PropertyCheck check_order_independence(const StableMatchingInstance& inst,
                                              std::size_t orders, std::uint64_t seed) {
  const BipartiteGraph& g = inst.graph();
  if (g.left_count() > kPropertyLeftLimit) throw LimitError("too many left vertices");
  PropertyCheck check;
  std::mt19937_64 rng(seed);
  const std::uint64_t count = std::uint64_t{1} << g.left_count();
  for (std::uint64_t s = 0; s < count; ++s) {
    const LeftMask mask = left_mask_from_bits(g.left_count(), s);
    const Matching reference = deferred_acceptance(inst, mask);
    for (std::size_t k = 0; k < orders; ++k) {
      ++check.cases;
      if (deferred_acceptance(inst, mask, ProposalOrder{rng()}) != reference)
        check.fail("proposal order changes SM for U'=" + subset_text(g, s));
    }
  }
  return check;
}

// Every U': the deferred acceptance result is stable in (G, >)_{U' u V}.
inline PropertyCheck check_stability(const StableMatchingInstance& inst) {
  const BipartiteGraph& g = inst.graph();
  if (g.left_count() > kPropertyLeftLimit) throw LimitError("too many left vertices");
  PropertyCheck check;
  const std::uint64_t count = std::uint64_t{1} << g.left_count();
  for (std::uint64_t s = 0; s < count; ++s) {
    const LeftMask mask = left_mask_from_bits(g.left_count(), s);
    std::vector<std::string> keep = left_ids_of(g, mask);
    keep.insert(keep.end(), g.right_ids().begin(), g.right_ids().end());
    const auto sub = restrict_instance(inst, std::span<const std::string>(keep));
    ++check.cases;
    if (!is_stable(sub, deferred_acceptance(inst, mask)))
      check.fail("SM(" + subset_text(g, s) + ") is not stable in the restricted instance");
  }
  return check;
}

// All stable matchings match the same vertices on each side, and the
// deferred acceptance result is one of them.
inline PropertyCheck check_rural_hospitals(const StableMatchingInstance& inst,
                                           std::size_t limit = kDefaultOracleLimit) {
  const BipartiteGraph& g = inst.graph();
  PropertyCheck check;
  const auto all = enumerate_stable_matchings(inst, limit);
  const Matching da = deferred_acceptance(inst, full_left(g));
  ++check.cases;
  if (std::find(all.begin(), all.end(), da) == all.end())
    check.fail("deferred acceptance result missing from the stable matchings");
  for (const auto& m : all) {
    ++check.cases;
    if (matched_left(g, m) != matched_left(g, da) || matched_right(g, m) != matched_right(g, da))
      check.fail("two stable matchings cover different vertex sets");
  }
  return check;
}

// max_weight_matching = oracle_max_weight for every U' whose restricted graph
// is within the oracle limit; `cases` counts the comparisons made.
inline PropertyCheck check_solver_against_oracle(const WeightedInstance& inst,
                                                 std::size_t limit = kDefaultOracleLimit) {
  const BipartiteGraph& g = inst.graph();
  if (g.left_count() > kPropertyLeftLimit) throw LimitError("too many left vertices");
  PropertyCheck check;
  const std::uint64_t count = std::uint64_t{1} << g.left_count();
  for (std::uint64_t s = 0; s < count; ++s) {
    const LeftMask mask = left_mask_from_bits(g.left_count(), s);
    std::size_t edges = 0;
    for (const Edge& e : g.edges()) edges += mask[e.left] ? 1 : 0;
    if (edges > limit) continue;
    ++check.cases;
    if (max_weight_matching(inst, mask) != oracle_max_weight(inst, mask, limit))
      check.fail("solver and oracle disagree on U'=" + subset_text(g, s));
  }
  return check;
}

// Random instances for property campaigns: every possible edge with
// probability edge_probability, uniformly random rankings or integer weights.
struct RandomInstanceShape {
  std::size_t max_left = 6;
  std::size_t max_right = 6;
  double edge_probability = 0.5;
  long min_weight = -50;
  long max_weight = 50;
  std::size_t min_left = 0;
  std::size_t min_right = 0;
};

namespace detail {

inline BipartiteGraph random_graph(std::mt19937_64& rng, const RandomInstanceShape& shape) {
  if (shape.min_left > shape.max_left || shape.min_right > shape.max_right)
    throw InputError("random instance shape: minimum side size above the maximum");
  const std::size_t nl =
      std::uniform_int_distribution<std::size_t>(shape.min_left, shape.max_left)(rng);
  const std::size_t nr =
      std::uniform_int_distribution<std::size_t>(shape.min_right, shape.max_right)(rng);
  std::vector<std::string> left, right;
  for (std::size_t i = 0; i < nl; ++i) left.push_back("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < nr; ++j) right.push_back("v" + std::to_string(j + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  std::bernoulli_distribution coin(shape.edge_probability);
  for (const auto& u : left)
    for (const auto& v : right)
      if (coin(rng)) edges.emplace_back(u, v);
  std::shuffle(edges.begin(), edges.end(), rng);
  return BipartiteGraph(std::move(left), std::move(right), edges);
}

}  // namespace detail

inline StableMatchingInstance random_stable_instance(std::uint64_t seed,
                                                     const RandomInstanceShape& shape = {}) {
  std::mt19937_64 rng(seed);
  BipartiteGraph g = detail::random_graph(rng, shape);
  PreferenceProfile prefs;
  for (const auto& id : g.left_ids()) prefs[id] = neighbors(g, id);
  for (const auto& id : g.right_ids()) prefs[id] = neighbors(g, id);
  for (auto& [id, list] : prefs) std::shuffle(list.begin(), list.end(), rng);
  return StableMatchingInstance(std::move(g), prefs);
}

inline WeightedInstance random_weighted_instance(std::uint64_t seed,
                                                 const RandomInstanceShape& shape = {}) {
  std::mt19937_64 rng(seed);
  BipartiteGraph g = detail::random_graph(rng, shape);
  std::uniform_int_distribution<long> weight(shape.min_weight, shape.max_weight);
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < g.edge_count(); ++k) weights.emplace_back(weight(rng));
  return WeightedInstance(std::move(g), std::move(weights));
}

}  // namespace antimatch
