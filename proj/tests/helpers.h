// Copyright 2026 The Surrograph Authors.
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

#ifndef SURROGRAPH_TESTS_HELPERS_H_
#define SURROGRAPH_TESTS_HELPERS_H_

#include <string>
#include <utility>
#include <vector>

#include "surrograph/graph.h"

namespace surrograph::test {

inline LabelSchema binary_schema() { return LabelSchema({Label{"x", {"A", "B"}}}); }

// Graph with one label `x` in {A, B}; values are 0 for A, 1 for B.
inline PropertyGraph labeled(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                             std::vector<std::uint32_t> values) {
  std::vector<Edge> e;
  for (auto [a, b] : edges) e.push_back(Edge{a, b});
  return PropertyGraph(n, std::move(e), binary_schema(), std::move(values));
}

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline PropertyGraph two_triangles_bridge() {
  return labeled(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}},
                 {0, 0, 0, 1, 1, 1});
}

inline std::string data_path(const std::string& name) {
  return std::string(SURROGRAPH_TEST_DATA) + "/" + name;
}

}  // namespace surrograph::test

#endif  // SURROGRAPH_TESTS_HELPERS_H_
