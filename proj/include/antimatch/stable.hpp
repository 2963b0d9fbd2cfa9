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

// Stable matching instances (G, >) and the deferred acceptance algorithm.
//
// Queries over a left subset U' run on the restricted instance (G, >)_{U' u V}.
// Every right vertex survives such a restriction and left vertices outside U'
// never propose, so the restriction is realized by masking proposers instead
// of materializing G[U' u V].

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antimatch/error.hpp"
#include "antimatch/graph.hpp"

namespace antimatch {

// vertex id -> neighbor ids, most preferred first.
using PreferenceProfile = std::map<std::string, std::vector<std::string>>;

class StableMatchingInstance {
 public:
  StableMatchingInstance() = default;

  // Every vertex needs exactly one ranking, and each ranking must be a
  // permutation of the vertex's neighbors. Non-neighbors are rejected.
  StableMatchingInstance(BipartiteGraph graph, const PreferenceProfile& prefs)
      : graph_(std::move(graph)) {
    left_prefs_.assign(graph_.left_count(), {});
    right_prefs_.assign(graph_.right_count(), {});
    rank_at_left_.assign(graph_.edge_id_bound(), kNoIndex);
    rank_at_right_.assign(graph_.edge_id_bound(), kNoIndex);

    for (const auto& [id, ranking] : prefs) {
      if (!graph_.find(id)) throw InputError("unknown vertex '" + id + "' in preferences");
    }
    for (std::size_t i = 0; i < graph_.left_count(); ++i)
      load_ranking(VertexRef{Side::left, i}, prefs);
    for (std::size_t j = 0; j < graph_.right_count(); ++j)
      load_ranking(VertexRef{Side::right, j}, prefs);
  }

  const BipartiteGraph& graph() const { return graph_; }

  // Positions in left_ids()/right_ids() order, most preferred first.
  const std::vector<std::size_t>& left_ranking(std::size_t i) const { return left_prefs_.at(i); }
  const std::vector<std::size_t>& right_ranking(std::size_t j) const { return right_prefs_.at(j); }

  // 0 = most preferred.
  std::size_t rank_at_left(EdgeId e) const { return rank_at_left_.at(e); }
  std::size_t rank_at_right(EdgeId e) const { return rank_at_right_.at(e); }

  PreferenceProfile profile() const {
    PreferenceProfile out;
    for (std::size_t i = 0; i < graph_.left_count(); ++i) {
      auto& list = out[graph_.left_id(i)];
      for (std::size_t j : left_prefs_[i]) list.push_back(graph_.right_id(j));
    }
    for (std::size_t j = 0; j < graph_.right_count(); ++j) {
      auto& list = out[graph_.right_id(j)];
      for (std::size_t i : right_prefs_[j]) list.push_back(graph_.left_id(i));
    }
    return out;
  }

  friend bool operator==(const StableMatchingInstance& a, const StableMatchingInstance& b) {
    return a.graph_ == b.graph_ && a.left_prefs_ == b.left_prefs_ &&
           a.right_prefs_ == b.right_prefs_;
  }

 private:
  void load_ranking(VertexRef r, const PreferenceProfile& prefs) {
    const std::string& id = graph_.id(r);
    const auto it = prefs.find(id);
    const auto incident = graph_.incident(r);
    if (it == prefs.end()) {
      if (incident.empty()) return;  // an isolated vertex may omit its empty list
      throw InputError("missing preference list for vertex '" + id + "'");
    }
    const auto& ranking = it->second;
    if (ranking.size() != incident.size())
      throw InputError("preference list of '" + id + "' has " + std::to_string(ranking.size()) +
                       " entries but the vertex has " + std::to_string(incident.size()) +
                       " neighbors");
    auto& dense = r.side == Side::left ? left_prefs_[r.index] : right_prefs_[r.index];
    auto& ranks = r.side == Side::left ? rank_at_left_ : rank_at_right_;
    for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
      const auto other = graph_.find(ranking[pos]);
      std::optional<EdgeId> e;
      if (other && other->side != r.side)
        e = r.side == Side::left ? graph_.find_edge(r.index, other->index)
                                 : graph_.find_edge(other->index, r.index);
      if (!e)
        throw InputError("preference list of '" + id + "' names non-neighbor '" + ranking[pos] +
                         "'");
      if (ranks[*e] != kNoIndex)
        throw InputError("preference list of '" + id + "' repeats '" + ranking[pos] + "'");
      ranks[*e] = pos;
      dense.push_back(other->index);
    }
  }

  BipartiteGraph graph_;
  std::vector<std::vector<std::size_t>> left_prefs_;
  std::vector<std::vector<std::size_t>> right_prefs_;
  std::vector<std::size_t> rank_at_left_;
  std::vector<std::size_t> rank_at_right_;
};

// (G, >)_X: graph restricted to X, rankings filtered in order.
inline StableMatchingInstance restrict_instance(const StableMatchingInstance& inst,
                                                std::span<const std::string> keep) {
  BipartiteGraph sub = restrict(inst.graph(), keep);
  PreferenceProfile prefs;
  for (const auto& [id, ranking] : inst.profile()) {
    if (!sub.find(id)) continue;
    auto& list = prefs[id];
    for (const auto& other : ranking)
      if (sub.find(other)) list.push_back(other);
  }
  return StableMatchingInstance(std::move(sub), prefs);
}

inline StableMatchingInstance restrict_instance(const StableMatchingInstance& inst,
                                                std::initializer_list<std::string> keep) {
  const std::vector<std::string> ids(keep);
  return restrict_instance(inst, std::span<const std::string>(ids));
}

namespace detail {

inline bool blocks(const StableMatchingInstance& inst, const PartnerTable& partners,
                   const Edge& edge) {
  const BipartiteGraph& g = inst.graph();
  const std::size_t mu = partners.of_left[edge.left];
  const std::size_t mv = partners.of_right[edge.right];
  if (mu == edge.right) return false;  // edge is in M
  const bool u_wants =
      mu == kNoIndex || inst.rank_at_left(edge.id) < inst.rank_at_left(*g.find_edge(edge.left, mu));
  const bool v_wants = mv == kNoIndex ||
                       inst.rank_at_right(edge.id) < inst.rank_at_right(*g.find_edge(mv, edge.right));
  return u_wants && v_wants;
}

}  // namespace detail

// [u free or v >_u M(u)] and [v free or u >_v M(v)].
inline bool is_blocking_pair(const StableMatchingInstance& inst, const Matching& m, EdgeId e) {
  const BipartiteGraph& g = inst.graph();
  require_matching(g, m);
  return detail::blocks(inst, PartnerTable(g, m), g.edge(e));
}

inline bool is_stable(const StableMatchingInstance& inst, const Matching& m) {
  require_matching(inst.graph(), m);
  const PartnerTable partners(inst.graph(), m);
  for (const Edge& e : inst.graph().edges())
    if (detail::blocks(inst, partners, e)) return false;
  return true;
}

// How the deferred acceptance loop picks the next proposer from T.
struct ProposalOrder {
  // nullopt: FIFO over T, seeded with U' in left-vertex order; displaced
  // vertices rejoin at the back. Otherwise each pick is uniform over T.
  std::optional<std::uint64_t> seed;
};

namespace detail {

// Runs the deferred acceptance loop on (G, >)_{U' u V}; returns the edge
// matched at each right vertex (kNoIndex when free).
inline std::vector<EdgeId> deferred_acceptance_edges(const StableMatchingInstance& inst,
                                                     const LeftMask& proposers,
                                                     const ProposalOrder& order) {
  const BipartiteGraph& g = inst.graph();
  std::vector<EdgeId> held(g.right_count(), kNoIndex);
  // R_u is the suffix of u's ranking starting at next[u]; rejections always
  // remove the current head.
  std::vector<std::size_t> next(g.left_count(), 0);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < g.left_count(); ++i)
    if (proposers[i]) pending.push_back(i);

  auto propose = [&](std::size_t u) -> std::optional<std::size_t> {
    // One iteration of the loop body for u; returns the vertex that has to
    // go back into T (u itself, a displaced u', or nothing).
    const auto& ranking = inst.left_ranking(u);
    if (next[u] == ranking.size()) return std::nullopt;
    const std::size_t v = ranking[next[u]];
    const EdgeId e = *g.find_edge(u, v);
    if (held[v] == kNoIndex) {
      held[v] = e;
      return std::nullopt;
    }
    const EdgeId current = held[v];
    if (inst.rank_at_right(current) < inst.rank_at_right(e)) {
      ++next[u];
      return u;
    }
    const std::size_t displaced = g.edge(current).left;
    held[v] = e;
    ++next[displaced];
    return displaced;
  };

  if (!order.seed) {
    std::deque<std::size_t> queue(pending.begin(), pending.end());
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      const auto back = propose(u);
      if (back && *back == u) continue;  // u stays at the front of T
      queue.pop_front();
      if (back) queue.push_back(*back);
    }
  } else {
    std::mt19937_64 rng(*order.seed);
    while (!pending.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      const std::size_t k = pick(rng);
      const std::size_t u = pending[k];
      const auto back = propose(u);
      if (back && *back == u) continue;
      pending[k] = pending.back();
      pending.pop_back();
      if (back) pending.push_back(*back);
    }
  }
  return held;
}

}  // namespace detail

// SM(G, >; U'). Independent of `order`.
inline Matching deferred_acceptance(const StableMatchingInstance& inst, const LeftMask& u_subset,
                                    const ProposalOrder& order = {}) {
  require_left_mask(inst.graph(), u_subset);
  std::vector<EdgeId> ids;
  for (EdgeId e : detail::deferred_acceptance_edges(inst, u_subset, order))
    if (e != kNoIndex) ids.push_back(e);
  return Matching(std::move(ids));
}

// F(U'): right vertices matched by SM(G, >; U').
inline std::vector<std::string> induced_map_sm(const StableMatchingInstance& inst,
                                               const LeftMask& u_subset) {
  return matched_right(inst.graph(), deferred_acceptance(inst, u_subset));
}

// Ch(U'): left vertices matched by SM(G, >; U').
inline std::vector<std::string> choice_function_sm(const StableMatchingInstance& inst,
                                                   const LeftMask& u_subset) {
  return matched_left(inst.graph(), deferred_acceptance(inst, u_subset));
}

// Every stable matching of the instance, by filtering enumerate_matchings().
inline std::vector<Matching> enumerate_stable_matchings(const StableMatchingInstance& inst,
                                                        std::size_t limit = kDefaultOracleLimit) {
  std::vector<Matching> out;
  for (auto& m : enumerate_matchings(inst.graph(), limit))
    if (is_stable(inst, m)) out.push_back(std::move(m));
  return out;
}

}  // namespace antimatch
