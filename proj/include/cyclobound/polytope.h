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

#ifndef CYCLOBOUND_POLYTOPE_H_
#define CYCLOBOUND_POLYTOPE_H_

#include <cstdint>
#include <optional>

#include "cyclobound/counts.h"
#include "cyclobound/graph.h"

// Combinatorial facts about the edge polytope, the convex hull of the
// vectors e_i + e_j over the edges {i, j}. Nothing here builds the polytope.
namespace cyclobound {

// Number of polytope edges: e(e-1)/2 - 2 c4 + 3 k4.
std::int64_t f1_formula(const InvariantSet& inv);

// Counts pairs of distinct graph edges that are not the two opposite edges
// of some 4-cycle. Throws for order() > 16.
std::int64_t f1_pair_oracle(const Graph& g);

// d - 2 for bipartite graphs, d - 1 otherwise.
int polytope_dimension(const InvariantSet& inv);

struct Simplicity {
  bool is_simplex = false;  // tree, or exactly one cycle and it is odd
  bool is_simple = false;   // simplex, or complete bipartite
};

Simplicity is_simple_polytope(const Graph& g, const InvariantSet& inv);

struct PolytopeFacts {
  std::int64_t f1_formula = 0;
  std::optional<std::int64_t> f1_oracle;  // only up to 16 vertices
  int dimension = 0;
  bool is_simplex = false;
  bool is_simple = false;
};

PolytopeFacts polytope_facts(const Graph& g, const InvariantSet& inv);

}  // namespace cyclobound

#endif  // CYCLOBOUND_POLYTOPE_H_
