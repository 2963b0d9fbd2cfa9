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


// Shared instances for the unit tests.

#pragma once

#include <string>
#include <vector>

#include "antimatch.hpp"

namespace antimatch::testing {

inline BipartiteGraph example1_graph() {
  return BipartiteGraph({"u1", "u2", "u3"}, {"v1", "v2", "v3"},
                        {{"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u2", "v3"}, {"u3", "v1"},
                         {"u3", "v2"}});
}

inline StableMatchingInstance example1() {
  return StableMatchingInstance(example1_graph(), {{"u1", {"v1", "v2"}},
                                                   {"u2", {"v1", "v3"}},
                                                   {"u3", {"v2", "v1"}},
                                                   {"v1", {"u3", "u2", "u1"}},
                                                   {"v2", {"u1", "u3"}},
                                                   {"v3", {"u2"}}});
}

inline BipartiteGraph example2_graph() {
  return BipartiteGraph({"u1", "u2", "u3"}, {"v1", "v2"},
                        {{"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u3", "v1"}});
}

inline WeightedInstance example2() {
  return WeightedInstance(example2_graph(), {Rational(20), Rational(8), Rational(9), Rational(15)});
}

inline SetFamily family(std::vector<std::string> ground,
                        const std::vector<std::vector<std::string>>& sets) {
  return SetFamily::from_lists(std::move(ground), sets);
}

inline SetFamily example1_family() {
  return family({"v1", "v2", "v3"}, {{}, {"v1"}, {"v2"}, {"v1", "v2"}, {"v1", "v2", "v3"}});
}

inline SetFamily example2_family() {
  return family({"v1", "v2"}, {{}, {"v1"}, {"v1", "v2"}});
}

inline SetFamily chain_ab() { return family({"a", "b"}, {{}, {"a"}, {"a", "b"}}); }

inline std::vector<std::string> ids(std::initializer_list<std::string> list) { return list; }

}  // namespace antimatch::testing
