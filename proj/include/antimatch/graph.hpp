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

// Bipartite graphs G = (U, V; E) with a fixed edge order, matchings, induced
// subgraphs and the path/cycle decomposition of a symmetric difference.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antimatch/error.hpp"

namespace antimatch {

// Position of an edge in the input edge list. Restriction never renumbers.
using EdgeId = std::size_t;

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);
inline constexpr std::size_t kDefaultOracleLimit = 24;

enum class Side { left, right };

struct VertexRef {
  Side side = Side::left;
  std::size_t index = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct Edge {
  EdgeId id = 0;
  std::size_t left = 0;   // position in left_ids()
  std::size_t right = 0;  // position in right_ids()

  friend bool operator==(const Edge&, const Edge&) = default;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Edge ids are assigned in the order of `edges`.
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 const std::vector<std::pair<std::string, std::string>>& edges)
      : left_(std::move(left)), right_(std::move(right)) {
    index_vertices();
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      const auto lu = lookup_.find(u);
      if (lu == lookup_.end() || lu->second.side != Side::left)
        throw InputError("unknown vertex: edge endpoint '" + u + "' is not a left vertex");
      const auto rv = lookup_.find(v);
      if (rv == lookup_.end() || rv->second.side != Side::right)
        throw InputError("unknown vertex: edge endpoint '" + v + "' is not a right vertex");
      edges_.push_back(Edge{edges_.size(), lu->second.index, rv->second.index});
    }
    id_bound_ = edges_.size();
    index_edges();
  }

  std::size_t left_count() const { return left_.size(); }
  std::size_t right_count() const { return right_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Every edge id of this graph (and of the graph it was restricted from)
  // is below this bound.
  std::size_t edge_id_bound() const { return id_bound_; }

  const std::vector<std::string>& left_ids() const { return left_; }
  const std::vector<std::string>& right_ids() const { return right_; }
  const std::string& left_id(std::size_t i) const { return left_.at(i); }
  const std::string& right_id(std::size_t j) const { return right_.at(j); }
  const std::string& id(VertexRef r) const {
    return r.side == Side::left ? left_.at(r.index) : right_.at(r.index);
  }

  std::optional<VertexRef> find(std::string_view id) const {
    const auto it = lookup_.find(std::string(id));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  VertexRef vertex(std::string_view id) const {
    if (auto r = find(id)) return *r;
    throw InputError("unknown vertex '" + std::string(id) + "'");
  }

  // Sorted by id.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(EdgeId e) const { return e < slot_.size() && slot_[e] != kNoIndex; }

  const Edge& edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("invalid edge index " + std::to_string(e));
    return edges_[slot_[e]];
  }

  std::optional<EdgeId> find_edge(std::size_t left, std::size_t right) const {
    for (EdgeId e : incident(VertexRef{Side::left, left}))
      if (edges_[slot_[e]].right == right) return e;
    return std::nullopt;
  }

  EdgeId edge_between(std::string_view u, std::string_view v) const {
    const VertexRef a = vertex(u);
    const VertexRef b = vertex(v);
    if (a.side != Side::left || b.side != Side::right)
      throw InputError("'" + std::string(u) + "','" + std::string(v) + "' is not a (left, right) pair");
    if (auto e = find_edge(a.index, b.index)) return *e;
    throw InputError("no edge (" + std::string(u) + "," + std::string(v) + ")");
  }

  // Edge ids incident to r, ascending.
  std::span<const EdgeId> incident(VertexRef r) const {
    const auto& table = r.side == Side::left ? left_incident_ : right_incident_;
    return table.at(r.index);
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.edges_ == b.edges_ &&
           a.id_bound_ == b.id_bound_;
  }

 private:
  friend BipartiteGraph restrict(const BipartiteGraph&, std::span<const std::string>);

  void index_vertices() {
    lookup_.clear();
    for (std::size_t i = 0; i < left_.size(); ++i)
      if (!lookup_.emplace(left_[i], VertexRef{Side::left, i}).second)
        throw InputError("duplicate vertex id '" + left_[i] + "'");
    for (std::size_t j = 0; j < right_.size(); ++j)
      if (!lookup_.emplace(right_[j], VertexRef{Side::right, j}).second)
        throw InputError("duplicate vertex id '" + right_[j] +
                         "' (left and right sides must be disjoint)");
  }

  void index_edges() {
    slot_.assign(id_bound_, kNoIndex);
    left_incident_.assign(left_.size(), {});
    right_incident_.assign(right_.size(), {});
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      const std::uint64_t key = (static_cast<std::uint64_t>(e.left) << 32) | e.right;
      if (!seen.insert(key).second)
        throw InputError("duplicate edge (" + left_[e.left] + "," + right_[e.right] + ")");
      slot_[e.id] = k;
      left_incident_[e.left].push_back(e.id);
      right_incident_[e.right].push_back(e.id);
    }
  }

  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
  std::size_t id_bound_ = 0;
  std::unordered_map<std::string, VertexRef> lookup_;
  std::vector<std::size_t> slot_;  // edge id -> position in edges_
  std::vector<std::vector<EdgeId>> left_incident_;
  std::vector<std::vector<EdgeId>> right_incident_;
};

// A set of edges stored as ascending edge ids. Whether it is actually a
// matching of some graph is checked by is_matching().
struct Matching {
  std::vector<EdgeId> edges;

  Matching() = default;
  explicit Matching(std::vector<EdgeId> ids) : edges(std::move(ids)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  bool contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

inline Matching matching_from_pairs(
    const BipartiteGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EdgeId> ids;
  ids.reserve(pairs.size());
  for (const auto& [u, v] : pairs) ids.push_back(g.edge_between(u, v));
  return Matching(std::move(ids));
}

// N_G(r), in edge-index order.
inline std::vector<std::string> neighbors(const BipartiteGraph& g, std::string_view r) {
  const VertexRef v = g.vertex(r);
  std::vector<std::string> out;
  for (EdgeId e : g.incident(v)) {
    const Edge& edge = g.edge(e);
    out.push_back(v.side == Side::left ? g.right_id(edge.right) : g.left_id(edge.left));
  }
  return out;
}

// delta_G(r).
inline std::vector<EdgeId> incident_edges(const BipartiteGraph& g, std::string_view r) {
  const auto span = g.incident(g.vertex(r));
  return {span.begin(), span.end()};
}

// G[X]. Vertex order follows g; surviving edges keep their ids.
inline BipartiteGraph restrict(const BipartiteGraph& g, std::span<const std::string> keep) {
  std::vector<char> keep_left(g.left_count(), 0);
  std::vector<char> keep_right(g.right_count(), 0);
  for (const auto& id : keep) {
    const VertexRef r = g.vertex(id);
    (r.side == Side::left ? keep_left : keep_right)[r.index] = 1;
  }
  BipartiteGraph out;
  std::vector<std::size_t> left_pos(g.left_count(), kNoIndex);
  std::vector<std::size_t> right_pos(g.right_count(), kNoIndex);
  for (std::size_t i = 0; i < g.left_count(); ++i)
    if (keep_left[i]) {
      left_pos[i] = out.left_.size();
      out.left_.push_back(g.left_id(i));
    }
  for (std::size_t j = 0; j < g.right_count(); ++j)
    if (keep_right[j]) {
      right_pos[j] = out.right_.size();
      out.right_.push_back(g.right_id(j));
    }
  for (const Edge& e : g.edges())
    if (keep_left[e.left] && keep_right[e.right])
      out.edges_.push_back(Edge{e.id, left_pos[e.left], right_pos[e.right]});
  out.id_bound_ = g.edge_id_bound();
  out.index_vertices();
  out.index_edges();
  return out;
}

inline BipartiteGraph restrict(const BipartiteGraph& g, std::initializer_list<std::string> keep) {
  const std::vector<std::string> ids(keep);
  return restrict(g, std::span<const std::string>(ids));
}

// Throws on ids that are not edges of g.
inline bool is_matching(const BipartiteGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> left_used(g.left_count(), 0);
  std::vector<char> right_used(g.right_count(), 0);
  bool ok = true;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (left_used[e.left] || right_used[e.right]) ok = false;
    left_used[e.left] = right_used[e.right] = 1;
  }
  return ok;
}

inline bool is_matching(const BipartiteGraph& g, const Matching& m) {
  return is_matching(g, std::span<const EdgeId>(m.edges));
}

inline void require_matching(const BipartiteGraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw InputError("edge set is not a matching");
}

// Left partner of each right vertex and vice versa (kNoIndex when free).
struct PartnerTable {
  std::vector<std::size_t> of_left;
  std::vector<std::size_t> of_right;

  PartnerTable(const BipartiteGraph& g, const Matching& m)
      : of_left(g.left_count(), kNoIndex), of_right(g.right_count(), kNoIndex) {
    for (EdgeId id : m.edges) {
      const Edge& e = g.edge(id);
      of_left[e.left] = e.right;
      of_right[e.right] = e.left;
    }
  }
};

inline std::vector<std::string> matched_left(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> hit(g.left_count(), 0);
  for (EdgeId id : m.edges) hit[g.edge(id).left] = 1;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(g.left_id(i));
  return out;
}

inline std::vector<std::string> matched_right(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> hit(g.right_count(), 0);
  for (EdgeId id : m.edges) hit[g.edge(id).right] = 1;
  std::vector<std::string> out;
  for (std::size_t j = 0; j < hit.size(); ++j)
    if (hit[j]) out.push_back(g.right_id(j));
  return out;
}

enum class ComponentShape { path, cycle };

struct Component {
  ComponentShape shape = ComponentShape::path;
  std::vector<EdgeId> edges;           // ascending
  std::vector<std::string> endpoints;  // the two ends of a path; empty for a cycle
};

// Connected components of M1 (symmetric difference) M2, ordered by their
// smallest edge id. Every vertex has degree <= 2 there, so each component is
// a simple path or an even cycle.
inline std::vector<Component> symmetric_difference_components(const BipartiteGraph& g,
                                                              const Matching& m1,
                                                              const Matching& m2) {
  require_matching(g, m1);
  require_matching(g, m2);
  std::vector<EdgeId> diff;
  std::set_symmetric_difference(m1.edges.begin(), m1.edges.end(), m2.edges.begin(),
                                m2.edges.end(), std::back_inserter(diff));

  // Vertices are numbered left first, then right.
  const std::size_t n = g.left_count() + g.right_count();
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId id : diff) {
    const Edge& e = g.edge(id);
    adj[e.left].push_back(id);
    adj[g.left_count() + e.right].push_back(id);
  }
  auto ref_of = [&](std::size_t x) {
    return x < g.left_count() ? VertexRef{Side::left, x}
                              : VertexRef{Side::right, x - g.left_count()};
  };

  std::vector<char> edge_seen(g.edge_id_bound(), 0);
  std::vector<Component> out;
  for (EdgeId start : diff) {
    if (edge_seen[start]) continue;
    Component comp;
    std::vector<std::size_t> stack{g.edge(start).left};
    std::vector<char> vertex_seen(n, 0);
    vertex_seen[stack.back()] = 1;
    std::vector<std::size_t> members;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (EdgeId id : adj[x]) {
        if (!edge_seen[id]) {
          edge_seen[id] = 1;
          comp.edges.push_back(id);
        }
        const Edge& e = g.edge(id);
        const std::size_t y = x < g.left_count() ? g.left_count() + e.right : e.left;
        if (!vertex_seen[y]) {
          vertex_seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.edges.begin(), comp.edges.end());
    std::sort(members.begin(), members.end());
    for (std::size_t x : members)
      if (adj[x].size() == 1) comp.endpoints.push_back(g.id(ref_of(x)));
    comp.shape = comp.endpoints.empty() ? ComponentShape::cycle : ComponentShape::path;
    out.push_back(std::move(comp));
  }
  return out;
}

namespace detail {

inline void enumerate_matchings_rec(const BipartiteGraph& g, std::size_t pos,
                                    std::vector<char>& left_used, std::vector<char>& right_used,
                                    std::vector<EdgeId>& current, std::vector<Matching>& out) {
  if (pos == g.edges().size()) {
    out.emplace_back(current);
    return;
  }
  const Edge& e = g.edges()[pos];
  enumerate_matchings_rec(g, pos + 1, left_used, right_used, current, out);
  if (!left_used[e.left] && !right_used[e.right]) {
    left_used[e.left] = right_used[e.right] = 1;
    current.push_back(e.id);
    enumerate_matchings_rec(g, pos + 1, left_used, right_used, current, out);
    current.pop_back();
    left_used[e.left] = right_used[e.right] = 0;
  }
}

}  // namespace detail

// All matchings of g (the empty one included), by branching on each edge.
inline std::vector<Matching> enumerate_matchings(const BipartiteGraph& g,
                                                 std::size_t limit = kDefaultOracleLimit) {
  if (g.edge_count() > limit)
    throw LimitError("oracle limit: " + std::to_string(g.edge_count()) + " edges exceed " +
                     std::to_string(limit));
  std::vector<Matching> out;
  std::vector<char> left_used(g.left_count(), 0);
  std::vector<char> right_used(g.right_count(), 0);
  std::vector<EdgeId> current;
  detail::enumerate_matchings_rec(g, 0, left_used, right_used, current, out);
  return out;
}

// Membership of each left vertex (in left_ids() order) in a subset U'.
using LeftMask = std::vector<bool>;

inline LeftMask full_left(const BipartiteGraph& g) { return LeftMask(g.left_count(), true); }

// Rejects right vertices and unknown ids.
inline LeftMask left_mask(const BipartiteGraph& g, std::span<const std::string> ids) {
  LeftMask mask(g.left_count(), false);
  for (const auto& id : ids) {
    const auto r = g.find(id);
    if (!r || r->side != Side::left)
      throw InputError("unknown vertex '" + id + "': not a left vertex");
    mask[r->index] = true;
  }
  return mask;
}

inline LeftMask left_mask(const BipartiteGraph& g, std::initializer_list<std::string> ids) {
  const std::vector<std::string> v(ids);
  return left_mask(g, std::span<const std::string>(v));
}

// Bit i of `bits` selects left vertex i; needs left_count() <= 64.
inline LeftMask left_mask_from_bits(std::size_t left_count, std::uint64_t bits) {
  LeftMask mask(left_count, false);
  for (std::size_t i = 0; i < left_count && i < 64; ++i) mask[i] = (bits >> i) & 1U;
  return mask;
}

inline std::vector<std::string> left_ids_of(const BipartiteGraph& g, const LeftMask& mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(g.left_id(i));
  return out;
}

inline void require_left_mask(const BipartiteGraph& g, const LeftMask& mask) {
  if (mask.size() != g.left_count())
    throw InputError("left subset has " + std::to_string(mask.size()) + " entries, graph has " +
                     std::to_string(g.left_count()) + " left vertices");
}

}  // namespace antimatch
