// Copyright 2026 The Cyclobound Authors
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

#ifndef CYCLOBOUND_COUNTS_H_
#define CYCLOBOUND_COUNTS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclobound/graph.h"

namespace cyclobound {

// Exact subgraph counts. A "4-cycle" is any C4 subgraph regardless of
// chords, so K4 contains three of them. All counts are 64-bit; at 64
// vertices the largest (c4 of K64) is 3 * C(64, 4) = 1,906,128.

// |N(u) & N(v)|; for an edge this is the number of triangles through it.
int codegree(const Graph& g, int u, int v);

std::int64_t count_triangles(const Graph& g);

// Half the sum over vertex pairs of C(codegree, 2): each 4-cycle is seen
// once from each of its two diagonals.
std::int64_t count_c4(const Graph& g);

// Reference count over all 4-vertex subsets. Throws for order() > 16.
std::int64_t count_c4_bruteforce(const Graph& g);

struct EdgeCycleCount {
  Edge edge;
  std::int64_t c3 = 0;  // triangles through the edge
  std::int64_t c4 = 0;  // 4-cycles through the edge
};

// One entry per edge, in Graph::edges() order.
using EdgeCycleCounts = std::vector<EdgeCycleCount>;

EdgeCycleCounts per_edge_counts(const Graph& g);

// Number of 4-cycles through vertex v.
std::int64_t vertex_c4(const Graph& g, int v);

std::int64_t count_k4(const Graph& g);

// Exact clique number by bit-parallel branch and bound.
int clique_number(const Graph& g);

std::int64_t sigma2(const Graph& g);

inline constexpr std::int64_t kDefaultCycleCap = 1'000'000;

// Number of simple cycles (length >= 3), or nullopt once the running count
// exceeds `cap`. Throws std::invalid_argument on disconnected input.
std::optional<std::int64_t> count_all_cycles(const Graph& g,
                                             std::int64_t cap = kDefaultCycleCap);

struct InvariantSet {
  int d = 0;
  int e = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool bipartite = false;  // the indicator epsilon
  std::int64_t sigma2 = 0;
  std::int64_t triangles = 0;
  std::int64_t c4 = 0;
  std::int64_t k4 = 0;
  int omega = 0;
  std::optional<std::int64_t> cycle_count;  // census, when within the cap
  std::optional<int> cyclomatic;            // connected graphs only

  int epsilon() const { return bipartite ? 1 : 0; }
};

// Computes every field. The cycle census runs only on connected graphs and
// is skipped entirely when cycle_cap is 0.
InvariantSet compute_invariants(const Graph& g,
                                std::int64_t cycle_cap = kDefaultCycleCap);

}  // namespace cyclobound

#endif  // CYCLOBOUND_COUNTS_H_
