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

#include "cyclobound/graph.h"

#include <algorithm>
#include <bit>
#include <functional>

namespace cyclobound {
namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order must be in 1..64, got " +
                                std::to_string(n));
  }
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw std::invalid_argument(std::string(what) +
                                " requires a connected graph");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (adjacent(e.u, e.v)) throw std::invalid_argument("repeated edge");
    rows_[e.u] |= bit(e.v);
    rows_[e.v] |= bit(e.u);
    ++m_;
  }
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("expected one adjacency row per vertex");
  }
  Graph g(n);
  int degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    const VertexSet r = rows[u];
    if ((r & ~vertex_range(n)) != 0) {
      throw std::invalid_argument("adjacency row references a missing vertex");
    }
    if ((r >> u) & 1U) throw std::invalid_argument("self-loop");
    for_each_vertex(r, [&](int v) {
      if (((rows[v] >> u) & 1U) == 0) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    });
    g.rows_[u] = r;
    degree_sum += popcount(r);
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(rows_[u] & ~vertex_range(u + 1),
                    [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("invalid edge endpoints");
  }
  if (adjacent(u, v)) throw std::invalid_argument("repeated edge");
  Graph g = *this;
  g.rows_[u] |= bit(v);
  g.rows_[v] |= bit(u);
  ++g.m_;
  return g;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

VertexSet reachable(const Graph& g, int source, VertexSet allowed) {
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  return reachable(g, 0, g.vertices()) == g.vertices();
}

std::optional<VertexSet> bipartition(const Graph& g) {
  VertexSet unseen = g.vertices();
  VertexSet ones = 0;
  while (unseen != 0) {
    // Breadth-first layers from the component's smallest vertex.
    VertexSet layer = bit(std::countr_zero(unseen));
    bool odd = false;
    while (layer != 0) {
      unseen &= ~layer;
      VertexSet next = 0;
      for_each_vertex(layer, [&](int v) { next |= g.row(v); });
      if (odd) ones |= layer;
      // An edge inside a layer closes an odd cycle.
      bool clash = false;
      for_each_vertex(layer, [&](int v) { clash |= (g.row(v) & layer) != 0; });
      if (clash) return std::nullopt;
      layer = next & unseen;
      odd = !odd;
    }
  }
  return ones;
}

std::vector<int> find_odd_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n, -1), depth(n, -1);
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (depth[w] == depth[u]) {
          // Climb both tree paths to their meeting point.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          return left;
        }
      }
    }
  }
  return {};
}

int cyclomatic_number(const Graph& g) {
  require_connected(g, "cyclomatic number");
  return g.size() - g.order() + 1;
}

BlockDecomposition blocks(const Graph& g) {
  require_connected(g, "block decomposition");
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int clock = 0;

  auto close_block = [&](Edge top) {
    Block b;
    while (true) {
      const Edge e = stack.back();
      stack.pop_back();
      b.edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
      b.vertices |= bit(e.u) | bit(e.v);
      if (e == top) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    b.order = popcount(b.vertices);
    b.size = static_cast<int>(b.edges.size());
    b.bipartite = is_bipartite(induced_subgraph(g, b.vertices));
    out.blocks.push_back(std::move(b));
  };

  std::function<void(int, int)> visit = [&](int u, int from) {
    disc[u] = low[u] = clock++;
    int children = 0;
    for_each_vertex(g.row(u), [&](int w) {
      if (disc[w] < 0) {
        ++children;
        stack.push_back({u, w});
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (from >= 0 || children > 1) out.cut_vertices |= bit(u);
          close_block({u, w});
        }
      } else if (w != from && disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  visit(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges < b.edges; });
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  if (keep == 0) throw std::invalid_argument("induced subgraph is empty");
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { label[v] = next++; });
  std::vector<VertexSet> rows(next, 0);
  for_each_vertex(keep, [&](int v) {
    for_each_vertex(g.row(v) & keep,
                    [&](int w) { rows[label[v]] |= bit(label[w]); });
  });
  return Graph::from_rows(next, rows);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() ||
      !g.adjacent(u, v)) {
    throw std::invalid_argument("cannot delete a non-edge");
  }
  std::vector<VertexSet> rows(g.order());
  for (int w = 0; w < g.order(); ++w) rows[w] = g.row(w);
  rows[u] &= ~bit(v);
  rows[v] &= ~bit(u);
  return Graph::from_rows(g.order(), rows);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (g.order() == 1) {
    throw std::invalid_argument("cannot delete the only vertex");
  }
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

}  // namespace cyclobound
