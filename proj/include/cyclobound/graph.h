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

#ifndef CYCLOBOUND_GRAPH_H_
#define CYCLOBOUND_GRAPH_H_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclobound {

// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

// All vertices 0..n-1.
inline constexpr VertexSet vertex_range(int n) {
  return n >= 64 ? ~VertexSet{0} : bit(n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

// Calls fn(v) for every vertex in s, in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

// Immutable simple undirected graph on vertices 0..order()-1 with
// order() <= 64. Row v holds the neighbourhood of v as a bit mask.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  // The single-vertex graph.
  Graph() : Graph(1) {}

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws std::invalid_argument for out-of-range endpoints, loops and
  // repeated edges.
  Graph(int n, std::span<const Edge> edges);

  // Rows must be symmetric, loop-free and confined to 0..n-1.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const { return m_; }

  VertexSet row(int v) const { return rows_[v]; }
  VertexSet vertices() const { return vertex_range(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }

  // Edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Returns a fresh graph; the receiver is unchanged.
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 1;
  int m_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

// Raised by parse_graph6 for malformed input.
class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Decodes a graph6 string (no ">>graph6<<" header, no trailing newline).
Graph parse_graph6(std::string_view text);

std::string encode_graph6(const Graph& g);

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

// Vertices reachable from `source` (including it).
VertexSet reachable(const Graph& g, int source, VertexSet allowed);

// Proper 2-colouring as the mask of vertices coloured 1; the smallest vertex
// of every component is coloured 0. Absent when g has an odd cycle.
std::optional<VertexSet> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Vertices of an odd cycle in cyclic order, or empty when bipartite.
std::vector<int> find_odd_cycle(const Graph& g);

// e - d + 1. Throws std::invalid_argument on disconnected input.
int cyclomatic_number(const Graph& g);

struct Block {
  std::vector<Edge> edges;  // in the parent's labels
  VertexSet vertices = 0;
  int order = 0;
  int size = 0;
  bool bipartite = true;

  bool is_bridge() const { return size == 1; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices = 0;
};

// Maximal 2-connected components and bridges. Blocks are ordered by their
// smallest edge. Throws std::invalid_argument on disconnected input.
BlockDecomposition blocks(const Graph& g);

// Subgraph induced on `keep`, relabelled contiguously in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// Throws std::invalid_argument when {u, v} is not an edge.
Graph delete_edge(const Graph& g, int u, int v);

// Throws std::invalid_argument when v is out of range or g has one vertex.
Graph delete_vertex(const Graph& g, int v);

}  // namespace cyclobound

#endif  // CYCLOBOUND_GRAPH_H_
