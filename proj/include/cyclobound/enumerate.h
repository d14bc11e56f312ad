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

#ifndef CYCLOBOUND_ENUMERATE_H_
#define CYCLOBOUND_ENUMERATE_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclobound/counts.h"
#include "cyclobound/graph.h"

namespace cyclobound {

inline constexpr int kMaxEnumerationOrder = 10;

// Graphs at this order index the shards; everything generated below one of
// them belongs to its shard.
inline constexpr int kShardDepth = 6;

struct Shard {
  int index = 0;
  int count = 1;
};

// Parses "i/k" with 0 <= i < k. Throws std::invalid_argument.
Shard parse_shard(std::string_view text);

// Conjunctive filters; connectivity is implied by the generator.
struct CorpusFilter {
  bool bipartite = false;
  bool non_bipartite = false;
  bool no_k4 = false;
  int min_degree = 0;

  bool accepts(const InvariantSet& inv) const;
};

// Accepts "connected", "bipartite", "non_bipartite", "no_K4" and
// "min_degree>=K", possibly comma separated. Throws std::invalid_argument.
void add_filter(CorpusFilter& filter, std::string_view text);

struct CorpusSpec {
  int min_n = 1;
  int max_n = 1;
  CorpusFilter filter;
  Shard shard;
};

// Throws std::invalid_argument when the range leaves 1..10 or the shard is
// malformed.
void validate(const CorpusSpec& spec);

// Connected children of a connected canonical graph on n-1 vertices that
// pass the canonical-augmentation test: the new vertex must be a
// minimum-degree non-cut vertex, and deleting the canonically chosen such
// vertex must give back the parent up to isomorphism. Children are returned
// in canonical form, deduplicated and sorted.
std::vector<Graph> canonical_children(const Graph& parent);

using GraphVisitor = std::function<void(const Graph&)>;

// Streams one canonical representative per isomorphism class of connected
// graphs with min_n..max_n vertices, depth first, restricted to the shard.
// The order is deterministic.
void for_each_connected_graph(int min_n, int max_n, Shard shard,
                              const GraphVisitor& visit);

// All connected graphs on n vertices, 1 <= n <= 10.
std::vector<Graph> connected_graphs(int n);

}  // namespace cyclobound

#endif  // CYCLOBOUND_ENUMERATE_H_
