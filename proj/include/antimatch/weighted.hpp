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

// Weighted matching instances (G, w) with exact arithmetic and a unique
// maximum-weight matching per left subset.
//
// Ties between maximum-weight matchings are broken by maximizing the
// perturbed weight
//
//     w'(e) = W(e) * 2^(B + 1) - 2^id(e),
//
// where W is w scaled to integers by the common denominator of all weights
// and B bounds the edge ids. The perturbation sums to less than 2^B over any
// edge set, so w' orders matchings by true weight first and then prefers the
// matching whose largest differing edge id is absent. Distinct matchings get
// distinct w', which makes MM(G, w; U') well defined for every input.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "antimatch/error.hpp"
#include "antimatch/graph.hpp"

namespace antimatch {

// Exact input weights.
using Rational = boost::multiprecision::cpp_rational;
// Scaled and perturbed weights. Unbounded; the first 1024 bits live inline,
// which covers the representation instances at the sizes exercised here
// without heap traffic in the solver.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<1024, 0>>;

// Integers or plain decimals ("-12", "3.25"). No exponents, no fractions.
inline Rational parse_weight(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  const auto all_digits = [](std::string_view part) {
    return std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac) ||
      (dot != std::string_view::npos && frac.empty()))
    throw InputError("malformed weight '" + std::string(text) + "'");
  boost::multiprecision::cpp_int numerator = 0;
  for (char c : whole) numerator = numerator * 10 + (c - '0');
  boost::multiprecision::cpp_int denominator = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

// Integers print as integers; other values as a terminating decimal when the
// denominator allows it, else as "p/q".
inline std::string format_weight(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::cpp_int;
  const cpp_int num = numerator(value);
  const cpp_int den = denominator(value);
  if (den == 1) return num.str();
  cpp_int d = den;
  std::size_t twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return num.str() + "/" + den.str();
  const std::size_t digits = std::max(twos, fives);
  cpp_int scale = 1;
  for (std::size_t k = 0; k < digits; ++k) scale *= 10;
  const cpp_int scaled = abs(num) * (scale / den);
  std::string body = scaled.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (num < 0 ? "-" : "") + body;
}

class WeightedInstance {
 public:
  WeightedInstance() = default;

  // weights[k] belongs to graph.edges()[k].
  WeightedInstance(BipartiteGraph graph, std::vector<Rational> weights) : graph_(std::move(graph)) {
    if (weights.size() != graph_.edge_count())
      throw InputError("got " + std::to_string(weights.size()) + " weights for " +
                       std::to_string(graph_.edge_count()) + " edges");
    weights_.assign(graph_.edge_id_bound(), Rational(0));
    boost::multiprecision::cpp_int common = 1;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const boost::multiprecision::cpp_int den = boost::multiprecision::denominator(weights[k]);
      common = common / boost::multiprecision::gcd(common, den) * den;
      weights_[graph_.edges()[k].id] = std::move(weights[k]);
    }
    perturbed_.assign(graph_.edge_id_bound(), BigInt(0));
    const BigInt shift = BigInt(1) << (graph_.edge_id_bound() + 1);
    for (const Edge& e : graph_.edges()) {
      const Rational scaled = weights_[e.id] * common;
      perturbed_[e.id] =
          BigInt(boost::multiprecision::numerator(scaled)) * shift - (BigInt(1) << e.id);
    }
  }

  const BipartiteGraph& graph() const { return graph_; }
  const Rational& weight(EdgeId e) const { return weights_.at(checked(e)); }
  // w'(e); see the top of this header.
  const BigInt& perturbed_weight(EdgeId e) const { return perturbed_.at(checked(e)); }

  // In graph().edges() order.
  std::vector<Rational> weights() const {
    std::vector<Rational> out;
    out.reserve(graph_.edge_count());
    for (const Edge& e : graph_.edges()) out.push_back(weights_[e.id]);
    return out;
  }

  friend bool operator==(const WeightedInstance& a, const WeightedInstance& b) {
    return a.graph_ == b.graph_ && a.weights_ == b.weights_;
  }

 private:
  EdgeId checked(EdgeId e) const {
    if (!graph_.has_edge(e)) throw InputError("invalid edge index " + std::to_string(e));
    return e;
  }

  BipartiteGraph graph_;
  std::vector<Rational> weights_;  // by edge id
  std::vector<BigInt> perturbed_;  // by edge id
};

// w(M); w(empty) = 0.
inline Rational matching_weight(const WeightedInstance& inst, const Matching& m) {
  require_matching(inst.graph(), m);
  Rational total = 0;
  for (EdgeId e : m.edges) total += inst.weight(e);
  return total;
}

inline BigInt perturbed_matching_weight(const WeightedInstance& inst, const Matching& m) {
  BigInt total = 0;
  for (EdgeId e : m.edges) total += inst.perturbed_weight(e);
  return total;
}

struct SolverOptions {
  // Shuffles the order in which edges are relaxed. The result must not
  // depend on it.
  std::optional<std::uint64_t> explore_seed;
};

// MM(G, w; U') by successive maximum-gain augmenting paths.
//
// After k augmentations the matching has maximum w' among matchings of size
// k, and the best gain is non-increasing in k, so the first non-positive
// best gain means the current matching is the overall maximum. Gains are
// found with queue-based Bellman-Ford over the alternating residual graph,
// which has no positive cycles while the matching is extreme.
inline Matching max_weight_matching(const WeightedInstance& inst, const LeftMask& u_subset,
                                    const SolverOptions& options = {}) {
  const BipartiteGraph& g = inst.graph();
  require_left_mask(g, u_subset);

  const std::size_t nl = g.left_count();
  const std::size_t nr = g.right_count();
  std::vector<std::size_t> roots;
  std::vector<std::vector<const Edge*>> out_edges(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    if (!u_subset[i]) continue;
    roots.push_back(i);
    for (EdgeId e : g.incident(VertexRef{Side::left, i})) out_edges[i].push_back(&g.edge(e));
  }
  if (options.explore_seed) {
    std::mt19937_64 rng(*options.explore_seed);
    std::shuffle(roots.begin(), roots.end(), rng);
    for (auto& list : out_edges) std::shuffle(list.begin(), list.end(), rng);
  }

  std::vector<const Edge*> mate_left(nl, nullptr);
  std::vector<const Edge*> mate_right(nr, nullptr);
  std::vector<BigInt> gain_left(nl), gain_right(nr);
  std::vector<char> reached_left(nl), reached_right(nr), queued(nl);
  std::vector<const Edge*> via_right(nr);
  std::vector<std::size_t> relaxations(nl);
  std::deque<std::size_t> queue;
  BigInt candidate;

  for (;;) {
    std::fill(reached_left.begin(), reached_left.end(), 0);
    std::fill(reached_right.begin(), reached_right.end(), 0);
    std::fill(relaxations.begin(), relaxations.end(), 0);
    for (std::size_t i : roots)
      if (!mate_left[i]) {
        reached_left[i] = 1;
        gain_left[i] = 0;
        queued[i] = 1;
        queue.push_back(i);
      }

    // Only left vertices are queued; a right vertex is passed through to its
    // mate immediately.
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      queued[i] = 0;
      if (++relaxations[i] > nl + nr + 1)
        throw Error("max_weight_matching: positive alternating cycle");
      for (const Edge* e : out_edges[i]) {
        if (mate_left[i] == e) continue;
        candidate = gain_left[i];
        candidate += inst.perturbed_weight(e->id);
        const std::size_t j = e->right;
        if (reached_right[j] && candidate <= gain_right[j]) continue;
        gain_right[j] = candidate;
        reached_right[j] = 1;
        via_right[j] = e;
        const Edge* back = mate_right[j];
        if (!back) continue;
        candidate -= inst.perturbed_weight(back->id);
        const std::size_t k = back->left;
        if (reached_left[k] && candidate <= gain_left[k]) continue;
        gain_left[k] = candidate;
        reached_left[k] = 1;
        if (!queued[k]) {
          queued[k] = 1;
          queue.push_back(k);
        }
      }
    }

    std::size_t best = kNoIndex;
    for (std::size_t j = 0; j < nr; ++j)
      if (reached_right[j] && !mate_right[j] &&
          (best == kNoIndex || gain_right[j] > gain_right[best]))
        best = j;
    if (best == kNoIndex || gain_right[best] <= 0) break;

    for (std::size_t j = best;;) {
      const Edge* e = via_right[j];
      const Edge* previous = mate_left[e->left];
      mate_left[e->left] = e;
      mate_right[j] = e;
      if (!previous) break;
      j = previous->right;
    }
  }

  std::vector<EdgeId> ids;
  for (const Edge* e : mate_left)
    if (e) ids.push_back(e->id);
  return Matching(std::move(ids));
}

// F(U'): right vertices matched by MM(G, w; U').
inline std::vector<std::string> induced_map_mm(const WeightedInstance& inst,
                                               const LeftMask& u_subset) {
  return matched_right(inst.graph(), max_weight_matching(inst, u_subset));
}

// Ch(U'): left vertices matched by MM(G, w; U').
inline std::vector<std::string> choice_function_mm(const WeightedInstance& inst,
                                                   const LeftMask& u_subset) {
  return matched_left(inst.graph(), max_weight_matching(inst, u_subset));
}

// Same contract as max_weight_matching, by scanning every matching of
// G[U' u V].
inline Matching oracle_max_weight(const WeightedInstance& inst, const LeftMask& u_subset,
                                  std::size_t limit = kDefaultOracleLimit) {
  const BipartiteGraph& g = inst.graph();
  require_left_mask(g, u_subset);
  std::vector<std::string> keep = left_ids_of(g, u_subset);
  keep.insert(keep.end(), g.right_ids().begin(), g.right_ids().end());
  const BipartiteGraph sub = restrict(g, std::span<const std::string>(keep));

  Matching best;
  BigInt best_weight = 0;
  for (auto& m : enumerate_matchings(sub, limit)) {
    BigInt weight = perturbed_matching_weight(inst, m);
    if (weight > best_weight) {
      best_weight = std::move(weight);
      best = std::move(m);
    }
  }
  return best;
}

}  // namespace antimatch
