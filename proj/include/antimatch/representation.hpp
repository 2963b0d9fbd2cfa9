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

// Matching instances whose induced codomain is a prescribed antimatroid.
//
// Both constructions use U = F \ {empty}, V = S and an edge (u, v) for every
// v in u. The stable instance ranks v within u by u's chain order and ranks
// the sets containing v by the total order of the decoration. The weighted
// instance encodes the same orders in disjoint power-of-two weight blocks,
// one block of |V| exponents per left vertex, higher rank b(u) higher block.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antimatch/antimatroid.hpp"
#include "antimatch/error.hpp"
#include "antimatch/graph.hpp"
#include "antimatch/induced.hpp"
#include "antimatch/stable.hpp"
#include "antimatch/weighted.hpp"

namespace antimatch {

enum class WeightFormula {
  // w((u, v_i)) = 2^(|V| b(u) + i): the chain's last element gets the largest
  // weight. Kept to reproduce its failure on {{}, {a}, {a,b}}.
  literal,
  // w((u, v_i)) = 2^(|V| b(u) + |V| + 1 - i): the chain's first element gets
  // the largest weight, so a matched edge (u, v) pays for the whole prefix
  // of u's chain up to v.
  corrected,
};

inline const char* formula_name(WeightFormula f) {
  return f == WeightFormula::literal ? "literal" : "corrected";
}

using RepresentedInstance = std::variant<StableMatchingInstance, WeightedInstance>;

struct RepresentationBundle {
  SetFamily source;
  ChainDecoration decoration;
  RepresentedInstance instance;
  // Nonempty member -> its left vertex id.
  std::map<ElementMask, std::string> left_vertex_labels;

  const BipartiteGraph& graph() const {
    return std::visit([](const auto& inst) -> const BipartiteGraph& { return inst.graph(); },
                      instance);
  }
};

// Left vertex id of a member: "u" followed by its bitmask in decimal.
inline std::string member_label(ElementMask m) { return "u" + std::to_string(m); }

namespace detail {

struct RepresentationGraph {
  BipartiteGraph graph;
  std::map<ElementMask, std::string> labels;
};

inline void require_decorated_antimatroid(const SetFamily& f, const ChainDecoration& deco) {
  if (const auto report = is_antimatroid(f); !report.holds)
    throw AxiomError("not an antimatroid: " + report.describe(f));
  if (const auto problem = check_decoration(f, deco))
    throw InputError("decoration inconsistent with the family: " + *problem);
}

// Left vertices in decoration order; each left vertex's edges in ground order.
inline RepresentationGraph representation_graph(const SetFamily& f, const ChainDecoration& deco) {
  RepresentationGraph out;
  std::vector<std::string> left;
  std::vector<std::pair<std::string, std::string>> edges;
  for (ElementMask u : deco.feasible_order) {
    const std::string label = member_label(u);
    out.labels.emplace(u, label);
    left.push_back(label);
    for (const auto& v : f.ids_of(u)) edges.emplace_back(label, v);
  }
  out.graph = BipartiteGraph(std::move(left), f.ground(), edges);
  return out;
}

}  // namespace detail

inline RepresentationBundle represent_stable(const SetFamily& f, const ChainDecoration& deco) {
  detail::require_decorated_antimatroid(f, deco);
  auto [graph, labels] = detail::representation_graph(f, deco);

  PreferenceProfile prefs;
  for (ElementMask u : deco.feasible_order) {
    auto& list = prefs[labels.at(u)];
    for (std::size_t k : deco.chain.at(u)) list.push_back(f.ground()[k]);
  }
  for (std::size_t k = 0; k < f.ground().size(); ++k) {
    auto& list = prefs[f.ground()[k]];
    for (ElementMask u : deco.feasible_order)
      if ((u >> k) & 1U) list.push_back(labels.at(u));
  }
  StableMatchingInstance inst(std::move(graph), prefs);
  return RepresentationBundle{f, deco, std::move(inst), std::move(labels)};
}

inline RepresentationBundle represent_weighted(const SetFamily& f, const ChainDecoration& deco,
                                               WeightFormula formula = WeightFormula::corrected) {
  detail::require_decorated_antimatroid(f, deco);
  auto [graph, labels] = detail::representation_graph(f, deco);

  const std::size_t width = f.ground().size();
  std::vector<Rational> weights;
  weights.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    const ElementMask u = deco.feasible_order[e.left];
    const auto& chain = deco.chain.at(u);
    const std::size_t position =
        static_cast<std::size_t>(std::find(chain.begin(), chain.end(), e.right) - chain.begin()) + 1;
    const std::size_t base = width * deco.rank.at(u);
    const std::size_t exponent =
        formula == WeightFormula::literal ? base + position : base + width + 1 - position;
    weights.emplace_back(boost::multiprecision::cpp_int(1) << exponent);
  }
  WeightedInstance inst(std::move(graph), std::move(weights));
  return RepresentationBundle{f, deco, std::move(inst), std::move(labels)};
}

// Induced codomain of a represented instance. Uses the exhaustive sweep when
// |U| is within options.sweep_limit and the saturated search otherwise.
inline InducedFamilyReport represented_codomain(const RepresentationBundle& bundle,
                                                SweepOptions options = {}) {
  if (bundle.graph().left_count() > options.sweep_limit)
    options.strategy = SweepStrategy::saturated;
  return std::visit(
      [&](const auto& inst) { return detail::enumerate_codomain(inst, options); },
      bundle.instance);
}

// For a member X with chain v_1 ... v_k, the left subset {u_1, ..., u_k} with
// u_i = {v_1, ..., v_i} has to induce exactly X. Returns the first member
// for which it does not.
inline std::optional<ElementMask> first_unrealized_member(const RepresentationBundle& bundle) {
  const BipartiteGraph& g = bundle.graph();
  for (ElementMask x : bundle.source.members()) {
    if (x == 0) continue;
    LeftMask mask(g.left_count(), false);
    ElementMask prefix = 0;
    for (std::size_t k : bundle.decoration.chain.at(x)) {
      prefix |= ElementMask{1} << k;
      mask[g.vertex(bundle.left_vertex_labels.at(prefix)).index] = true;
    }
    const Matching m = std::visit([&](const auto& inst) { return detail::solve(inst, mask); },
                                  bundle.instance);
    if (detail::right_bits(g, m) != x) return x;
  }
  return std::nullopt;
}

struct RoundtripOptions {
  WeightFormula formula = WeightFormula::corrected;
  std::optional<std::uint64_t> tie_seed;
  SweepOptions sweep;
};

struct RoundtripReport {
  bool equal = false;
  SetFamily codomain;
  std::vector<ElementMask> missing;  // in the family, not induced
  std::vector<ElementMask> extra;    // induced, not in the family
  std::optional<ElementMask> unrealized_member;
};

// Decorate, represent, enumerate the induced codomain, compare with f.
inline RoundtripReport verify_roundtrip(const SetFamily& f, InstanceKind kind,
                                        const RoundtripOptions& options = {}) {
  if (f.size() > 64)
    throw LimitError("sweep limit: roundtrip needs at most 64 members, got " +
                     std::to_string(f.size()));
  const ChainDecoration deco = build_decoration(f, options.tie_seed);
  const RepresentationBundle bundle = kind == InstanceKind::stable
                                          ? represent_stable(f, deco)
                                          : represent_weighted(f, deco, options.formula);
  RoundtripReport report;
  report.unrealized_member = first_unrealized_member(bundle);
  report.codomain = represented_codomain(bundle, options.sweep).family;
  for (ElementMask x : f.members())
    if (!report.codomain.contains(x)) report.missing.push_back(x);
  for (ElementMask x : report.codomain.members())
    if (!f.contains(x)) report.extra.push_back(x);
  report.equal = report.missing.empty() && report.extra.empty();
  return report;
}

}  // namespace antimatch
