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


// Builds a small stable matching instance, prints the family of right-vertex
// sets it induces, then represents that family again as a weighted instance.

#include <iostream>

#include "antimatch.hpp"

int main() {
  using namespace antimatch;

  BipartiteGraph g({"u1", "u2", "u3"}, {"v1", "v2", "v3"},
                   {{"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u2", "v3"}, {"u3", "v1"},
                    {"u3", "v2"}});
  StableMatchingInstance inst(g, {{"u1", {"v1", "v2"}},
                                  {"u2", {"v1", "v3"}},
                                  {"u3", {"v2", "v1"}},
                                  {"v1", {"u3", "u2", "u1"}},
                                  {"v2", {"u1", "u3"}},
                                  {"v3", {"u2"}}});

  const InducedFamilyReport report = enumerate_codomain_sm(inst);
  std::cout << "induced family:";
  for (ElementMask m : report.family.members()) std::cout << " " << report.family.format(m);
  std::cout << "\nantimatroid: " << (check_codomain(report).holds ? "yes" : "no") << "\n";

  const RepresentationBundle bundle =
      represent_weighted(report.family, build_decoration(report.family));
  std::cout << to_json(std::get<WeightedInstance>(bundle.instance)).dump(2) << "\n";

  const InducedFamilyReport back = represented_codomain(bundle);
  std::cout << "roundtrip equal: " << (back.family == report.family ? "yes" : "no") << "\n";
  return back.family == report.family ? 0 : 1;
}
