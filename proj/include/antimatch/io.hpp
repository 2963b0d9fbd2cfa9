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

// JSON file formats.
//
//   graph     {"left": [ids], "right": [ids], "edges": [[u, v], ...]}
//   stable    graph + "prefs": {id: [neighbor ids, best first], ...}
//   weighted  graph + "weights": [integer or decimal string, ...]
//   family    {"ground": [ids], "sets": [[ids], ...]}
//   report    {"kind": ..., "family": family, "witnesses": {"{v1,v2}": [left ids]}}
//
// The edge array order fixes the edge ids. Output objects keep insertion
// order so that repeated runs produce identical bytes.

#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "antimatch/antimatroid.hpp"
#include "antimatch/error.hpp"
#include "antimatch/graph.hpp"
#include "antimatch/induced.hpp"
#include "antimatch/stable.hpp"
#include "antimatch/weighted.hpp"

namespace antimatch {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object at the top level");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("field '" + where + "': expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string())
      throw InputError("field '" + where + "[" + std::to_string(k) + "]': expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

}  // namespace detail

// Parse errors carry nlohmann's line/column position.
inline Json parse_json(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

inline BipartiteGraph graph_from_json(const Json& j) {
  auto left = detail::string_list(detail::field(j, "left"), "left");
  auto right = detail::string_list(detail::field(j, "right"), "right");
  const Json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw InputError("field 'edges': expected an array of [u, v] pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Json& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("field 'edges[" + std::to_string(k) + "]': expected [u, v] strings");
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return BipartiteGraph(std::move(left), std::move(right), pairs);
}

inline Json to_json(const BipartiteGraph& g) {
  Json j;
  j["left"] = g.left_ids();
  j["right"] = g.right_ids();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.left_id(e.left), g.right_id(e.right)});
  j["edges"] = std::move(edges);
  return j;
}

inline StableMatchingInstance stable_from_json(const Json& j) {
  BipartiteGraph g = graph_from_json(j);
  const Json& prefs = detail::field(j, "prefs");
  if (!prefs.is_object()) throw InputError("field 'prefs': expected an object");
  PreferenceProfile profile;
  for (auto it = prefs.begin(); it != prefs.end(); ++it)
    profile[it.key()] = detail::string_list(it.value(), "prefs." + it.key());
  return StableMatchingInstance(std::move(g), profile);
}

inline Json to_json(const StableMatchingInstance& inst) {
  const BipartiteGraph& g = inst.graph();
  Json j = to_json(g);
  Json prefs = Json::object();
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    Json list = Json::array();
    for (std::size_t r : inst.left_ranking(i)) list.push_back(g.right_id(r));
    prefs[g.left_id(i)] = std::move(list);
  }
  for (std::size_t r = 0; r < g.right_count(); ++r) {
    Json list = Json::array();
    for (std::size_t i : inst.right_ranking(r)) list.push_back(g.left_id(i));
    prefs[g.right_id(r)] = std::move(list);
  }
  j["prefs"] = std::move(prefs);
  return j;
}

inline Rational weight_from_json(const Json& w, const std::string& where) {
  if (w.is_number_integer()) {
    if (w.is_number_unsigned()) return Rational(w.get<std::uint64_t>());
    return Rational(w.get<std::int64_t>());
  }
  if (w.is_string()) return parse_weight(w.get<std::string>());
  if (w.is_number_float())
    throw InputError("field '" + where + "': non-integer weights must be decimal strings");
  throw InputError("field '" + where + "': expected an integer or a decimal string");
}

inline Json weight_to_json(const Rational& w) {
  using boost::multiprecision::cpp_int;
  if (boost::multiprecision::denominator(w) == 1) {
    const cpp_int n = boost::multiprecision::numerator(w);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return Json(static_cast<std::int64_t>(n));
  }
  return Json(format_weight(w));
}

inline WeightedInstance weighted_from_json(const Json& j) {
  BipartiteGraph g = graph_from_json(j);
  const Json& list = detail::field(j, "weights");
  if (!list.is_array()) throw InputError("field 'weights': expected an array");
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < list.size(); ++k)
    weights.push_back(weight_from_json(list[k], "weights[" + std::to_string(k) + "]"));
  return WeightedInstance(std::move(g), std::move(weights));
}

inline Json to_json(const WeightedInstance& inst) {
  Json j = to_json(inst.graph());
  Json weights = Json::array();
  for (const Rational& w : inst.weights()) weights.push_back(weight_to_json(w));
  j["weights"] = std::move(weights);
  return j;
}

inline SetFamily family_from_json(const Json& j) {
  auto ground = detail::string_list(detail::field(j, "ground"), "ground");
  const Json& sets = detail::field(j, "sets");
  if (!sets.is_array()) throw InputError("field 'sets': expected an array of arrays");
  std::vector<std::vector<std::string>> lists;
  for (std::size_t k = 0; k < sets.size(); ++k)
    lists.push_back(detail::string_list(sets[k], "sets[" + std::to_string(k) + "]"));
  return SetFamily::from_lists(std::move(ground), lists);
}

inline Json to_json(const SetFamily& f) {
  Json j;
  j["ground"] = f.ground();
  Json sets = Json::array();
  for (ElementMask m : f.members()) sets.push_back(f.ids_of(m));
  j["sets"] = std::move(sets);
  return j;
}

inline Json to_json(const InducedFamilyReport& report) {
  Json j;
  j["kind"] = kind_name(report.kind);
  j["family"] = to_json(report.family);
  Json witnesses = Json::object();
  for (ElementMask m : report.family.members())
    witnesses[report.family.format(m)] = report.witness.at(m);
  j["witnesses"] = std::move(witnesses);
  return j;
}

inline Json to_json(const AxiomReport& report, const SetFamily& f) {
  Json j;
  j["antimatroid"] = report.holds;
  j["failed_axiom"] = axiom_name(report.failed);
  if (report.violating_set) j["witness"] = Json::array({f.ids_of(*report.violating_set)});
  if (report.violating_pair)
    j["witness"] = Json::array(
        {f.ids_of(report.violating_pair->first), f.ids_of(report.violating_pair->second)});
  j["message"] = report.describe(f);
  return j;
}

}  // namespace antimatch
