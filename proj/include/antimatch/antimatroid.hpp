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

// Set families (S, F), the antimatroid axioms, and the chain decoration
// (trace d, chain orders, total order on feasible sets, rank b) that the
// matching representations are built from.
//
// Members are bitmasks over the ground set: bit k is ground()[k].

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antimatch/error.hpp"

namespace antimatch {

using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

// Ascending cardinality, then lexicographic on the ascending element lists.
inline bool canonical_less(ElementMask a, ElementMask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const ElementMask diff = a ^ b;
  if (diff == 0) return false;
  // Equal cardinality: the set holding the lowest differing element comes first.
  return (a & (diff & (~diff + 1))) != 0;
}

class SetFamily {
 public:
  SetFamily() = default;

  SetFamily(std::vector<std::string> ground, std::vector<ElementMask> members)
      : ground_(std::move(ground)), members_(std::move(members)) {
    if (ground_.size() > kMaxGroundSize)
      throw LimitError("ground set of " + std::to_string(ground_.size()) +
                       " elements exceeds the cap of " + std::to_string(kMaxGroundSize));
    for (std::size_t k = 0; k < ground_.size(); ++k)
      if (!index_.emplace(ground_[k], k).second)
        throw InputError("duplicate ground element '" + ground_[k] + "'");
    for (ElementMask m : members_)
      if ((m & ~full_mask()) != 0) throw InputError("member is not a subset of the ground set");
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    lookup_.insert(members_.begin(), members_.end());
  }

  static SetFamily from_lists(std::vector<std::string> ground,
                              const std::vector<std::vector<std::string>>& sets) {
    SetFamily scratch(ground, {});
    std::vector<ElementMask> members;
    members.reserve(sets.size());
    for (const auto& set : sets) members.push_back(scratch.mask_of(set));
    return SetFamily(std::move(ground), std::move(members));
  }

  const std::vector<std::string>& ground() const { return ground_; }
  // Deduplicated, in canonical_less order.
  const std::vector<ElementMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementMask m) const { return lookup_.count(m) != 0; }

  ElementMask full_mask() const {
    return ground_.size() == 64 ? ~ElementMask{0} : (ElementMask{1} << ground_.size()) - 1;
  }

  std::size_t element_index(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw InputError("unknown ground element '" + std::string(id) + "'");
    return it->second;
  }

  ElementMask mask_of(const std::vector<std::string>& ids) const {
    ElementMask m = 0;
    for (const auto& id : ids) m |= ElementMask{1} << element_index(id);
    return m;
  }

  std::vector<std::string> ids_of(ElementMask m) const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < ground_.size(); ++k)
      if ((m >> k) & 1U) out.push_back(ground_[k]);
    return out;
  }

  // "{a,b}"; "{}" for the empty set.
  std::string format(ElementMask m) const {
    std::string out = "{";
    bool first = true;
    for (const auto& id : ids_of(m)) {
      if (!first) out += ",";
      out += id;
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<ElementMask> members_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_set<ElementMask> lookup_;
};

struct AccessibilityCheck {
  bool holds = true;
  std::optional<ElementMask> witness;  // a nonempty member with no removable element
};

struct UnionClosureCheck {
  bool holds = true;
  std::optional<std::pair<ElementMask, ElementMask>> witness;  // union is missing
};

inline AccessibilityCheck is_accessible(const SetFamily& f) {
  for (ElementMask x : f.members()) {
    if (x == 0) continue;
    bool removable = false;
    for (ElementMask rest = x; rest != 0 && !removable; rest &= rest - 1)
      removable = f.contains(x & ~(rest & (~rest + 1)));
    if (!removable) return {false, x};
  }
  return {};
}

inline UnionClosureCheck is_union_closed(const SetFamily& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!f.contains(m[i] | m[j])) return {false, std::pair{m[i], m[j]}};
  return {};
}

enum class Axiom { none, contains_empty, accessibility, union_closedness };

struct AxiomReport {
  bool holds = true;
  Axiom failed = Axiom::none;
  std::optional<ElementMask> violating_set;
  std::optional<std::pair<ElementMask, ElementMask>> violating_pair;

  std::string describe(const SetFamily& f) const {
    switch (failed) {
      case Axiom::none:
        return "antimatroid";
      case Axiom::contains_empty:
        return "the empty set is not a member";
      case Axiom::accessibility:
        return "accessibility fails at " + f.format(*violating_set) +
               ": no element can be removed within the family";
      case Axiom::union_closedness:
        return "union-closedness fails: " + f.format(violating_pair->first) + " u " +
               f.format(violating_pair->second) + " is not a member";
    }
    return {};
  }
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::none: return "none";
    case Axiom::contains_empty: return "contains-empty";
    case Axiom::accessibility: return "accessibility";
    case Axiom::union_closedness: return "union-closedness";
  }
  return "";
}

inline AxiomReport is_antimatroid(const SetFamily& f) {
  AxiomReport report;
  if (!f.contains(0)) {
    report.holds = false;
    report.failed = Axiom::contains_empty;
    return report;
  }
  if (const auto unions = is_union_closed(f); !unions.holds) {
    report.holds = false;
    report.failed = Axiom::union_closedness;
    report.violating_pair = unions.witness;
    return report;
  }
  if (const auto access = is_accessible(f); !access.holds) {
    report.holds = false;
    report.failed = Axiom::accessibility;
    report.violating_set = access.witness;
  }
  return report;
}

// { S \ X : X in F }.
inline SetFamily complement_family(const SetFamily& f) {
  std::vector<ElementMask> out;
  out.reserve(f.size());
  for (ElementMask x : f.members()) out.push_back(f.full_mask() & ~x);
  return SetFamily(f.ground(), std::move(out));
}

// Contains S and is closed under intersection.
inline bool is_convex_geometry(const SetFamily& f) {
  if (!f.contains(f.full_mask())) return false;
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!f.contains(m[i] & m[j])) return false;
  return true;
}

// Trace, chain orders, total order and rank for the nonempty members of an
// antimatroid.
struct ChainDecoration {
  // d(X): an element of X whose removal stays in the family (ground index).
  std::map<ElementMask, std::size_t> trace;
  // a_1, ..., a_k with a_i = d(X \ {a_{i+1}, ..., a_k}).
  std::map<ElementMask, std::vector<std::size_t>> chain;
  // Nonempty members, each dominating every later one; a proper subset
  // always comes before its supersets.
  std::vector<ElementMask> feasible_order;
  // b(X) in 1..|F \ {empty}|; b(X) > b(Y) iff X precedes Y.
  std::map<ElementMask, std::size_t> rank;
};

// Default: d(X) is the smallest removable element in ground order. With a
// seed, it is a uniformly random removable element instead.
inline ChainDecoration build_decoration(const SetFamily& f,
                                        std::optional<std::uint64_t> tie_seed = std::nullopt) {
  if (const auto report = is_antimatroid(f); !report.holds)
    throw AxiomError("not an antimatroid: " + report.describe(f));

  std::optional<std::mt19937_64> rng;
  if (tie_seed) rng.emplace(*tie_seed);

  ChainDecoration deco;
  for (ElementMask x : f.members()) {
    if (x == 0) continue;
    std::vector<std::size_t> removable;
    for (std::size_t k = 0; k < f.ground().size(); ++k)
      if (((x >> k) & 1U) && f.contains(x & ~(ElementMask{1} << k))) removable.push_back(k);
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, removable.size() - 1)(*rng);
    deco.trace[x] = removable[pick];
  }
  for (ElementMask x : f.members()) {
    if (x == 0) continue;
    std::vector<std::size_t> order;
    for (ElementMask rest = x; rest != 0; rest &= ~(ElementMask{1} << deco.trace.at(rest)))
      order.push_back(deco.trace.at(rest));
    std::reverse(order.begin(), order.end());
    deco.chain[x] = std::move(order);
    deco.feasible_order.push_back(x);  // members() is already canonical
  }
  const std::size_t n = deco.feasible_order.size();
  for (std::size_t pos = 0; pos < n; ++pos) deco.rank[deco.feasible_order[pos]] = n - pos;
  return deco;
}

// First violated decoration invariant, if any.
inline std::optional<std::string> check_decoration(const SetFamily& f,
                                                   const ChainDecoration& deco) {
  std::vector<ElementMask> nonempty;
  for (ElementMask x : f.members())
    if (x != 0) nonempty.push_back(x);
  if (deco.trace.size() != nonempty.size() || deco.chain.size() != nonempty.size() ||
      deco.rank.size() != nonempty.size() || deco.feasible_order.size() != nonempty.size())
    return "decoration does not cover exactly the nonempty members";
  for (ElementMask x : nonempty) {
    const auto t = deco.trace.find(x);
    if (t == deco.trace.end()) return "no trace for " + f.format(x);
    const ElementMask bit = ElementMask{1} << t->second;
    if ((x & bit) == 0 || !f.contains(x & ~bit)) return "bad trace at " + f.format(x);
    const auto c = deco.chain.find(x);
    if (c == deco.chain.end()) return "no chain for " + f.format(x);
    ElementMask prefix = 0;
    for (std::size_t k : c->second) {
      prefix |= ElementMask{1} << k;
      if (!f.contains(prefix)) return "chain prefix of " + f.format(x) + " is not a member";
    }
    if (prefix != x || c->second.size() != static_cast<std::size_t>(std::popcount(x)))
      return "chain of " + f.format(x) + " is not a permutation of it";
    ElementMask rest = x;
    for (auto it = c->second.rbegin(); it != c->second.rend(); ++it) {
      if (deco.trace.at(rest) != *it) return "chain of " + f.format(x) + " disagrees with d";
      rest &= ~(ElementMask{1} << *it);
    }
  }
  const std::size_t n = deco.feasible_order.size();
  for (std::size_t p = 0; p < n; ++p) {
    const ElementMask x = deco.feasible_order[p];
    const auto r = deco.rank.find(x);
    if (r == deco.rank.end() || r->second != n - p) return "rank disagrees with the total order";
    for (std::size_t q = 0; q < p; ++q) {
      const ElementMask y = deco.feasible_order[q];
      if (y != x && (x & y) == x) return "superset precedes its subset " + f.format(x);
    }
  }
  return std::nullopt;
}

// a, b, c, ... for small ground sets.
inline std::vector<std::string> letter_ground(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + k)) : "e" + std::to_string(k));
  return out;
}

inline std::vector<ElementMask> union_closure(std::vector<ElementMask> members) {
  std::unordered_set<ElementMask> seen(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const ElementMask u = members[i] | members[j];
      if (seen.insert(u).second) members.push_back(u);
    }
  return members;
}

// Grows random chains from the empty set, each starting at a random member
// found so far, and closes the result under union.
inline SetFamily random_antimatroid(std::size_t ground_size, std::uint64_t density_seed) {
  if (ground_size > 16)
    throw LimitError("random_antimatroid supports at most 16 elements");
  std::mt19937_64 rng(density_seed);
  const ElementMask full = (ElementMask{1} << ground_size) - 1;
  for (;;) {
    std::vector<ElementMask> members{0};
    const std::size_t chains =
        ground_size == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, ground_size)(rng);
    for (std::size_t c = 0; c < chains; ++c) {
      ElementMask x = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
      const std::size_t room = ground_size - static_cast<std::size_t>(std::popcount(x));
      if (room == 0) continue;
      const std::size_t length = std::uniform_int_distribution<std::size_t>(1, room)(rng);
      for (std::size_t step = 0; step < length; ++step) {
        std::vector<std::size_t> free;
        for (std::size_t k = 0; k < ground_size; ++k)
          if (((full & ~x) >> k) & 1U) free.push_back(k);
        x |= ElementMask{1} << free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
        members.push_back(x);
      }
    }
    SetFamily f(letter_ground(ground_size), union_closure(std::move(members)));
    if (is_antimatroid(f).holds) return f;
  }
}

namespace detail {

inline void enumerate_antimatroids_rec(const std::vector<ElementMask>& order, std::size_t pos,
                                       std::vector<ElementMask>& chosen,
                                       std::unordered_set<ElementMask>& chosen_set,
                                       std::vector<std::vector<ElementMask>>& out) {
  if (pos == order.size()) {
    out.push_back(chosen);
    return;
  }
  const ElementMask s = order[pos];
  bool accessible = false;
  for (ElementMask rest = s; rest != 0 && !accessible; rest &= rest - 1)
    accessible = chosen_set.count(s & ~(rest & (~rest + 1))) != 0;
  // Every pair of chosen proper subsets was decided earlier, so a union that
  // lands on s is known now and forces s in.
  bool forced = false;
  for (std::size_t i = 0; i < chosen.size() && !forced; ++i) {
    if ((chosen[i] & ~s) != 0 || chosen[i] == s) continue;
    for (std::size_t j = i + 1; j < chosen.size() && !forced; ++j)
      forced = (chosen[j] & ~s) == 0 && (chosen[i] | chosen[j]) == s;
  }
  if (!forced) enumerate_antimatroids_rec(order, pos + 1, chosen, chosen_set, out);
  if (accessible || forced) {
    chosen.push_back(s);
    chosen_set.insert(s);
    enumerate_antimatroids_rec(order, pos + 1, chosen, chosen_set, out);
    chosen_set.erase(s);
    chosen.pop_back();
  }
}

}  // namespace detail

// Every antimatroid on the ground set {a, b, ...} of the given size, elements
// in no member included. Subsets are decided in canonical order; a subset can
// join only if it is accessible, and must join if it is a union of members.
inline std::vector<SetFamily> enumerate_antimatroids(std::size_t ground_size) {
  if (ground_size > 5) throw LimitError("enumerate_antimatroids supports at most 5 elements");
  std::vector<ElementMask> order;
  for (ElementMask s = 1; s < (ElementMask{1} << ground_size); ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), canonical_less);
  std::vector<ElementMask> chosen{0};
  std::unordered_set<ElementMask> chosen_set{0};
  std::vector<std::vector<ElementMask>> raw;
  detail::enumerate_antimatroids_rec(order, 0, chosen, chosen_set, raw);
  std::vector<SetFamily> out;
  out.reserve(raw.size());
  for (auto& members : raw) out.emplace_back(letter_ground(ground_size), std::move(members));
  return out;
}

}  // namespace antimatch
