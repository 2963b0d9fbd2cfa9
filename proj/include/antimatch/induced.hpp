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

// The codomain {F(U') : U' subset of U} of an induced map, for stable and
// weighted instances, and the antimatroid check on it.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antimatch/antimatroid.hpp"
#include "antimatch/error.hpp"
#include "antimatch/graph.hpp"
#include "antimatch/stable.hpp"
#include "antimatch/weighted.hpp"

namespace antimatch {

inline constexpr std::size_t kDefaultSweepLimit = 20;

enum class InstanceKind { stable, weighted };

inline const char* kind_name(InstanceKind k) {
  return k == InstanceKind::stable ? "stable" : "weighted";
}

struct InducedFamilyReport {
  InstanceKind kind = InstanceKind::stable;
  SetFamily family;  // over the right vertices
  // One U' per member: the first in (cardinality, binary) order.
  std::map<ElementMask, std::vector<std::string>> witness;
};

enum class SweepStrategy {
  // All 2^|U| subsets.
  exhaustive,
  // Only subsets U' with |F(U')| = |U'|, grown one vertex at a time. These
  // are closed under taking subsets, and F(U') = F(Ch(U')) with Ch(U')
  // among them, so the codomain and the witnesses come out the same.
  saturated,
};

struct SweepOptions {
  SweepStrategy strategy = SweepStrategy::exhaustive;
  std::size_t sweep_limit = kDefaultSweepLimit;  // max |U| for the exhaustive sweep
};

namespace detail {

inline ElementMask right_bits(const BipartiteGraph& g, const Matching& m) {
  ElementMask bits = 0;
  for (EdgeId e : m.edges) bits |= ElementMask{1} << g.edge(e).right;
  return bits;
}

inline ElementMask left_bits(const BipartiteGraph& g, const Matching& m) {
  ElementMask bits = 0;
  for (EdgeId e : m.edges) bits |= ElementMask{1} << g.edge(e).left;
  return bits;
}

inline Matching solve(const StableMatchingInstance& inst, const LeftMask& mask) {
  return deferred_acceptance(inst, mask);
}

inline Matching solve(const WeightedInstance& inst, const LeftMask& mask) {
  return max_weight_matching(inst, mask);
}

inline InstanceKind kind_of(const StableMatchingInstance&) { return InstanceKind::stable; }
inline InstanceKind kind_of(const WeightedInstance&) { return InstanceKind::weighted; }

// Subsets of n bits with exactly k set, ascending.
inline std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k > n) return out;
  if (k == 0) return {0};
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (n == 64 || s < limit) {
    out.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

template <class Instance>
InducedFamilyReport enumerate_codomain(const Instance& inst, const SweepOptions& options) {
  const BipartiteGraph& g = inst.graph();
  const std::size_t n = g.left_count();
  if (g.right_count() > kMaxGroundSize)
    throw LimitError("sweep limit: " + std::to_string(g.right_count()) +
                     " right vertices exceed the set-family cap");
  if (options.strategy == SweepStrategy::exhaustive && n > options.sweep_limit)
    throw LimitError("sweep limit: " + std::to_string(n) + " left vertices exceed " +
                     std::to_string(options.sweep_limit));
  if (n > 64) throw LimitError("sweep limit: more than 64 left vertices");

  InducedFamilyReport report;
  report.kind = kind_of(inst);
  std::vector<ElementMask> members;
  auto record = [&](std::uint64_t subset, ElementMask image) {
    if (report.witness.count(image)) return;
    members.push_back(image);
    report.witness.emplace(image, left_ids_of(g, left_mask_from_bits(n, subset)));
  };

  if (options.strategy == SweepStrategy::exhaustive) {
    for (std::size_t k = 0; k <= n; ++k)
      for (std::uint64_t subset : subsets_of_size(n, k))
        record(subset, right_bits(g, solve(inst, left_mask_from_bits(n, subset))));
  } else {
    std::vector<std::uint64_t> level{0};
    record(0, 0);
    for (std::size_t k = 1; k <= n && !level.empty(); ++k) {
      const std::unordered_set<std::uint64_t> previous(level.begin(), level.end());
      std::vector<std::pair<std::uint64_t, ElementMask>> next;
      for (std::uint64_t parent : level) {
        const std::size_t start = parent == 0 ? 0 : 64 - std::countl_zero(parent);
        for (std::size_t q = start; q < n; ++q) {
          const std::uint64_t child = parent | (std::uint64_t{1} << q);
          bool closed = true;
          for (std::uint64_t rest = parent; rest != 0 && closed; rest &= rest - 1)
            closed = previous.count(child & ~(rest & (~rest + 1))) != 0;
          if (!closed) continue;
          const Matching m = solve(inst, left_mask_from_bits(n, child));
          if (m.size() == k) next.emplace_back(child, right_bits(g, m));
        }
      }
      std::sort(next.begin(), next.end());
      level.clear();
      for (const auto& [subset, image] : next) {
        record(subset, image);
        level.push_back(subset);
      }
    }
  }
  report.family = SetFamily(g.right_ids(), std::move(members));
  return report;
}

}  // namespace detail

// {F(U') : U' subset of U} for F induced by SM(G, >; .).
inline InducedFamilyReport enumerate_codomain_sm(const StableMatchingInstance& inst,
                                                 const SweepOptions& options = {}) {
  return detail::enumerate_codomain(inst, options);
}

// {F(U') : U' subset of U} for F induced by MM(G, w; .).
inline InducedFamilyReport enumerate_codomain_mm(const WeightedInstance& inst,
                                                 const SweepOptions& options = {}) {
  return detail::enumerate_codomain(inst, options);
}

struct CodomainCheck {
  bool holds = true;
  AxiomReport axioms;
  std::string diagnostic;
};

inline CodomainCheck check_codomain(const InducedFamilyReport& report) {
  CodomainCheck check;
  check.axioms = is_antimatroid(report.family);
  check.holds = check.axioms.holds;
  check.diagnostic = std::string(kind_name(report.kind)) + " codomain: " +
                     check.axioms.describe(report.family);
  return check;
}

}  // namespace antimatch
