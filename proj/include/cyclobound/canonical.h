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

#ifndef CYCLOBOUND_CANONICAL_H_
#define CYCLOBOUND_CANONICAL_H_

#include <vector>

#include "cyclobound/graph.h"

namespace cyclobound {

struct CanonicalLabeling {
  // position[v] is the canonical label of vertex v.
  std::vector<int> position;
  // g relabelled by `position`; identical for all isomorphic inputs.
  Graph graph;
};

// Individualisation-refinement search: equitable partition refinement,
// branching on the first non-singleton cell, pruning children that lie in
// one orbit of the automorphisms found so far that fix the current prefix.
// The canonical graph is the leaf whose adjacency rows are lexicographically
// greatest.
CanonicalLabeling canonical_labeling(const Graph& g);

inline Graph canonical_form(const Graph& g) {
  return canonical_labeling(g).graph;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

// Adjacency rows as a sortable key.
std::vector<VertexSet> adjacency_key(const Graph& g);

// Relabels g so that vertex v becomes position[v].
Graph relabel(const Graph& g, const std::vector<int>& position);

}  // namespace cyclobound

#endif  // CYCLOBOUND_CANONICAL_H_
