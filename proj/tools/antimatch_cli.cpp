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

// antimatch: command-line front end.
//
// Results go to standard output as one JSON document (or to --out), progress
// to standard error. Exit status: 0 success, 1 property violation, 2 input
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antimatch.hpp"

namespace {

using namespace antimatch;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::optional<InstanceKind> kind;
  WeightFormula formula = WeightFormula::corrected;
  std::uint64_t seed = 0;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::size_t sweep_limit = kDefaultSweepLimit;
  std::string output_path;
  // fuzz campaign size
  std::size_t instances = 100;
  std::size_t families = 50;
};

void emit(const RunConfig& config, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path);
  if (!out) throw InputError("cannot write '" + config.output_path + "'");
  out << text;
}

InstanceKind require_kind(const RunConfig& config) {
  if (!config.kind) throw InputError("--kind is required for '" + config.command + "'");
  return *config.kind;
}

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions options;
  options.sweep_limit = config.sweep_limit;
  return options;
}

int run_induce(const RunConfig& config) {
  const Json input = load_json_file(config.input_path);
  const InducedFamilyReport report = require_kind(config) == InstanceKind::stable
                                         ? enumerate_codomain_sm(stable_from_json(input),
                                                                 sweep_options(config))
                                         : enumerate_codomain_mm(weighted_from_json(input),
                                                                 sweep_options(config));
  const CodomainCheck check = check_codomain(report);
  Json doc = to_json(report);
  doc["antimatroid"] = check.holds;
  doc["diagnostic"] = check.diagnostic;
  emit(config, doc);
  return check.holds ? kExitOk : kExitViolation;
}

int run_verify_family(const RunConfig& config) {
  const SetFamily family = family_from_json(load_json_file(config.input_path));
  const AxiomReport report = is_antimatroid(family);
  emit(config, to_json(report, family));
  return report.holds ? kExitOk : kExitViolation;
}

Json bundle_json(const RepresentationBundle& bundle) {
  return std::visit([](const auto& inst) { return to_json(inst); }, bundle.instance);
}

int run_represent(const RunConfig& config) {
  const SetFamily family = family_from_json(load_json_file(config.input_path));
  const ChainDecoration deco =
      build_decoration(family, config.seed == 0 ? std::nullopt : std::optional(config.seed));
  const RepresentationBundle bundle = require_kind(config) == InstanceKind::stable
                                          ? represent_stable(family, deco)
                                          : represent_weighted(family, deco, config.formula);
  emit(config, bundle_json(bundle));
  return kExitOk;
}

Json roundtrip_json(const SetFamily& family, InstanceKind kind, WeightFormula formula,
                    const RoundtripReport& report) {
  Json doc;
  doc["kind"] = kind_name(kind);
  if (kind == InstanceKind::weighted) doc["formula"] = formula_name(formula);
  doc["equal"] = report.equal;
  doc["codomain"] = to_json(report.codomain);
  Json missing = Json::array(), extra = Json::array();
  for (ElementMask m : report.missing) missing.push_back(family.ids_of(m));
  for (ElementMask m : report.extra) extra.push_back(family.ids_of(m));
  doc["missing"] = std::move(missing);
  doc["extra"] = std::move(extra);
  doc["unrealized_member"] =
      report.unrealized_member ? Json(family.ids_of(*report.unrealized_member)) : Json(nullptr);
  return doc;
}

RoundtripOptions roundtrip_options(const RunConfig& config) {
  RoundtripOptions options;
  options.formula = config.formula;
  if (config.seed != 0) options.tie_seed = config.seed;
  options.sweep = sweep_options(config);
  return options;
}

int run_roundtrip(const RunConfig& config) {
  const SetFamily family = family_from_json(load_json_file(config.input_path));
  const InstanceKind kind = require_kind(config);
  const RoundtripReport report = verify_roundtrip(family, kind, roundtrip_options(config));
  emit(config, roundtrip_json(family, kind, config.formula, report));
  return report.equal && !report.unrealized_member ? kExitOk : kExitViolation;
}

// First failing property of an instance, if any.
std::optional<std::string> instance_failure(const StableMatchingInstance& inst,
                                            std::size_t oracle_limit, std::uint64_t seed) {
  if (const auto check = check_codomain(enumerate_codomain_sm(inst)); !check.holds)
    return check.diagnostic;
  const SubsetTable table = tabulate_subsets(inst);
  for (const PropertyCheck& check :
       {check_monotonicity(inst, table), check_choice_function(inst, table),
        check_order_independence(inst, 20, seed), check_stability(inst)})
    if (!check.holds) return check.failure;
  if (inst.graph().edge_count() <= oracle_limit)
    if (const auto check = check_rural_hospitals(inst, oracle_limit); !check.holds)
      return check.failure;
  return std::nullopt;
}

std::optional<std::string> instance_failure(const WeightedInstance& inst,
                                            std::size_t oracle_limit, std::uint64_t) {
  if (const auto check = check_codomain(enumerate_codomain_mm(inst)); !check.holds)
    return check.diagnostic;
  const SubsetTable table = tabulate_subsets(inst);
  for (const PropertyCheck& check :
       {check_monotonicity(inst, table), check_augmenting_path_shape(inst, table),
        check_choice_function(inst, table), check_solver_against_oracle(inst, oracle_limit)})
    if (!check.holds) return check.failure;
  return std::nullopt;
}

std::optional<std::string> family_failure(const SetFamily& family, InstanceKind kind,
                                          const RoundtripOptions& options) {
  const RoundtripReport report = verify_roundtrip(family, kind, options);
  if (report.unrealized_member)
    return "member " + family.format(*report.unrealized_member) + " is not induced by its chain";
  if (!report.equal) {
    std::string text = "codomain differs from the family:";
    for (ElementMask m : report.missing) text += " missing " + family.format(m);
    for (ElementMask m : report.extra) text += " extra " + family.format(m);
    return text;
  }
  return std::nullopt;
}

// Counterexample files hold everything needed to rerun the failed check.
Json counterexample(const std::string& subject, InstanceKind kind, const RunConfig& config,
                    std::uint64_t seed, const std::string& failure, Json payload) {
  Json doc;
  doc["subject"] = subject;
  doc["kind"] = kind_name(kind);
  if (subject == "family") doc["formula"] = formula_name(config.formula);
  doc["seed"] = seed;
  doc["failure"] = failure;
  doc[subject] = std::move(payload);
  return doc;
}

InstanceKind parse_kind(const std::string& text) {
  if (text == "stable") return InstanceKind::stable;
  if (text == "weighted") return InstanceKind::weighted;
  throw InputError("unknown kind '" + text + "'");
}

WeightFormula parse_formula(const std::string& text) {
  if (text == "literal") return WeightFormula::literal;
  if (text == "corrected") return WeightFormula::corrected;
  throw InputError("unknown formula '" + text + "'");
}

int run_fuzz_replay(const RunConfig& config) {
  const Json doc = load_json_file(config.input_path);
  const std::string subject = detail::field(doc, "subject").get<std::string>();
  const InstanceKind kind = parse_kind(detail::field(doc, "kind").get<std::string>());
  const std::uint64_t seed = detail::field(doc, "seed").get<std::uint64_t>();
  std::optional<std::string> failure;
  if (subject == "instance") {
    const Json& payload = detail::field(doc, "instance");
    failure = kind == InstanceKind::stable
                  ? instance_failure(stable_from_json(payload), config.oracle_limit, seed)
                  : instance_failure(weighted_from_json(payload), config.oracle_limit, seed);
  } else if (subject == "family") {
    RoundtripOptions options = roundtrip_options(config);
    if (const auto it = doc.find("formula"); it != doc.end())
      options.formula = parse_formula(it->get<std::string>());
    failure = family_failure(family_from_json(detail::field(doc, "family")), kind, options);
  } else {
    throw InputError("field 'subject': expected \"instance\" or \"family\"");
  }
  Json out;
  out["replayed"] = config.input_path;
  out["reproduced"] = failure.has_value();
  out["failure"] = failure ? Json(*failure) : Json(nullptr);
  std::cout << out.dump(2) << "\n";
  return failure ? kExitViolation : kExitOk;
}

int run_fuzz(const RunConfig& config) {
  if (!config.input_path.empty()) return run_fuzz_replay(config);

  const std::filesystem::path dir = config.output_path.empty() ? "counterexamples"
                                                               : config.output_path;
  std::vector<InstanceKind> kinds;
  if (config.kind) kinds = {*config.kind};
  else kinds = {InstanceKind::stable, InstanceKind::weighted};

  Json files = Json::array();
  std::size_t checked_instances = 0, checked_families = 0;
  auto record = [&](const Json& doc) {
    std::filesystem::create_directories(dir);
    const std::string name = std::string(doc["subject"].get<std::string>()) + "-" +
                             doc["kind"].get<std::string>() + "-" +
                             std::to_string(doc["seed"].get<std::uint64_t>()) + ".json";
    const std::filesystem::path path = dir / name;
    std::ofstream(path) << doc.dump(2) << "\n";
    files.push_back(path.string());
    std::cerr << "counterexample: " << path.string() << "\n";
  };

  for (InstanceKind kind : kinds) {
    for (std::size_t k = 0; k < config.instances; ++k) {
      const std::uint64_t seed = config.seed + k;
      std::optional<std::string> failure;
      Json payload;
      if (kind == InstanceKind::stable) {
        const auto inst = random_stable_instance(seed);
        failure = instance_failure(inst, config.oracle_limit, seed);
        if (failure) payload = to_json(inst);
      } else {
        const auto inst = random_weighted_instance(seed);
        failure = instance_failure(inst, config.oracle_limit, seed);
        if (failure) payload = to_json(inst);
      }
      ++checked_instances;
      if (failure) record(counterexample("instance", kind, config, seed, *failure, payload));
    }
    const RoundtripOptions options = roundtrip_options(config);
    for (std::size_t k = 0; k < config.families; ++k) {
      const std::uint64_t seed = config.seed + k;
      const SetFamily family = random_antimatroid(1 + seed % 6, seed);
      ++checked_families;
      if (auto failure = family_failure(family, kind, options))
        record(counterexample("family", kind, config, seed, *failure, to_json(family)));
    }
    std::cerr << kind_name(kind) << ": done\n";
  }

  Json doc;
  doc["instances"] = checked_instances;
  doc["families"] = checked_families;
  doc["counterexamples"] = files.size();
  doc["files"] = std::move(files);
  std::cout << doc.dump(2) << "\n";
  return doc["counterexamples"].get<std::size_t>() == 0 ? kExitOk : kExitViolation;
}

int run_oracle_check(const RunConfig& config) {
  const Json input = load_json_file(config.input_path);
  Json doc;
  bool ok = true;
  if (require_kind(config) == InstanceKind::weighted) {
    const WeightedInstance inst = weighted_from_json(input);
    const PropertyCheck check = check_solver_against_oracle(inst, config.oracle_limit);
    doc["kind"] = "weighted";
    doc["subsets"] = std::uint64_t{1} << inst.graph().left_count();
    doc["comparisons"] = check.cases;
    doc["agree"] = check.holds;
    doc["failure"] = check.holds ? Json(nullptr) : Json(check.failure);
    ok = check.holds;
  } else {
    const StableMatchingInstance inst = stable_from_json(input);
    const PropertyCheck stable = check_stability(inst);
    const PropertyCheck rural = check_rural_hospitals(inst, config.oracle_limit);
    doc["kind"] = "stable";
    doc["subsets"] = std::uint64_t{1} << inst.graph().left_count();
    doc["comparisons"] = stable.cases + rural.cases;
    doc["agree"] = stable.holds && rural.holds;
    doc["failure"] = stable.holds ? (rural.holds ? Json(nullptr) : Json(rural.failure))
                                  : Json(stable.failure);
    ok = stable.holds && rural.holds;
  }
  emit(config, doc);
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antimatroids induced by stable and maximum-weight bipartite matchings"};
  app.require_subcommand(1);

  RunConfig config;
  std::string kind_text, formula_text = "corrected";

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* input = sub->add_option("input", config.input_path, "Input JSON file");
    if (input_required) input->required()->check(CLI::ExistingFile);
    sub->add_option("--kind", kind_text, "Instance kind")
        ->check(CLI::IsMember({"stable", "weighted"}));
    sub->add_option("--formula", formula_text, "Weight formula for weighted representations")
        ->check(CLI::IsMember({"literal", "corrected"}));
    sub->add_option("--seed", config.seed, "Random seed (0 = deterministic defaults)");
    sub->add_option("--oracle-limit", config.oracle_limit, "Max edges for exhaustive oracles");
    sub->add_option("--sweep-limit", config.sweep_limit,
                    "Max left vertices for the exhaustive subset sweep");
    sub->add_option("--out", config.output_path,
                    "Output file (fuzz: counterexample directory)");
  };

  auto* induce = app.add_subcommand("induce", "Enumerate the induced family of an instance");
  add_common(induce, true);
  auto* verify = app.add_subcommand("verify-family", "Check the antimatroid axioms");
  add_common(verify, true);
  auto* represent = app.add_subcommand("represent", "Build a matching instance for a family");
  add_common(represent, true);
  auto* roundtrip =
      app.add_subcommand("roundtrip", "Represent a family and compare the induced family");
  add_common(roundtrip, true);
  auto* fuzz = app.add_subcommand(
      "fuzz", "Random property campaign, or replay a counterexample file given as input");
  add_common(fuzz, false);
  fuzz->add_option("--instances", config.instances, "Random instances per kind");
  fuzz->add_option("--families", config.families, "Random antimatroids per kind");
  auto* oracle = app.add_subcommand("oracle-check", "Compare solvers with exhaustive oracles");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!kind_text.empty()) config.kind = parse_kind(kind_text);
    config.formula = parse_formula(formula_text);
    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "induce") return run_induce(config);
    if (config.command == "verify-family") return run_verify_family(config);
    if (config.command == "represent") return run_represent(config);
    if (config.command == "roundtrip") return run_roundtrip(config);
    if (config.command == "fuzz") return run_fuzz(config);
    return run_oracle_check(config);
  } catch (const antimatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
