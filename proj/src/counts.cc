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

#include "cyclobound/counts.h"

#include <stdexcept>

namespace cyclobound {
namespace {

constexpr std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// Vertices strictly greater than v.
constexpr VertexSet above(int v) { return v >= 63 ? 0 : ~vertex_range(v + 1); }

void expand_clique(const Graph& g, int size, VertexSet candidates, int& best) {
  if (candidates == 0) {
    if (size > best) best = size;
    return;
  }
  while (candidates != 0) {
    if (size + popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    expand_clique(g, size + 1, candidates & g.row(v), best);
  }
}

struct CycleCensus {
  const Graph& g;
  std::int64_t cap;
  std::int64_t count = 0;
  bool overflow = false;

  // Extends the path root -> ... -> tail. `second` is the path's second
  // vertex; a cycle is counted only when closed through a tail larger than
  // `second`, which fixes one orientation.
  void extend(int root, int second, int tail, int length, VertexSet used) {
    if (overflow) return;
    const VertexSet allowed = above(root) & ~used;
    if (length >= 3 && g.adjacent(tail, root) && tail > second) {
      if (++count > cap) {
        overflow = true;
        return;
      }
    }
    for_each_vertex(g.row(tail) & allowed, [&](int next) {
      extend(root, length == 1 ? next : second, next, length + 1,
             used | bit(next));
    });
  }
};

}  // namespace

int codegree(const Graph& g, int u, int v) {
  return popcount(g.row(u) & g.row(v));
}

std::int64_t count_triangles(const Graph& g) {
  std::int64_t t = 0;
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.row(u) & above(u), [&](int v) {
      t += popcount(g.row(u) & g.row(v) & above(v));
    });
  }
  return t;
}

std::int64_t count_c4(const Graph& g) {
  std::int64_t twice = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      twice += choose2(codegree(g, u, v));
    }
  }
  return twice / 2;
}

std::int64_t count_c4_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 16) {
    throw std::invalid_argument("brute-force 4-cycle count is limited to 16 vertices");
  }
  std::int64_t total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // The three cyclic arrangements of {a,b,c,d}.
          const bool abcd = g.adjacent(a, b) && g.adjacent(b, c) &&
                            g.adjacent(c, d) && g.adjacent(d, a);
          const bool abdc = g.adjacent(a, b) && g.adjacent(b, d) &&
                            g.adjacent(d, c) && g.adjacent(c, a);
          const bool acbd = g.adjacent(a, c) && g.adjacent(c, b) &&
                            g.adjacent(b, d) && g.adjacent(d, a);
          total += int{abcd} + int{abdc} + int{acbd};
        }
  return total;
}

EdgeCycleCounts per_edge_counts(const Graph& g) {
  EdgeCycleCounts out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const int u = e.u, v = e.v;
    EdgeCycleCount c{e, codegree(g, u, v), 0};
    // Cycles u - v - b - a - u.
    for_each_vertex(g.row(u) & ~bit(v), [&](int a) {
      c.c4 += popcount(g.row(a) & g.row(v) & ~bit(u));
    });
    out.push_back(c);
  }
  return out;
}

std::int64_t vertex_c4(const Graph& g, int v) {
  std::int64_t total = 0;
  const VertexSet nbrs = g.row(v);
  for_each_vertex(nbrs, [&](int a) {
    for_each_vertex(nbrs & above(a), [&](int b) {
      total += codegree(g, a, b) - 1;
    });
  });
  return total;
}

std::int64_t count_k4(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.row(u) & above(u), [&](int v) {
      const VertexSet common = g.row(u) & g.row(v) & above(v);
      for_each_vertex(common, [&](int w) {
        total += popcount(common & g.row(w) & above(w));
      });
    });
  }
  return total;
}

int clique_number(const Graph& g) {
  int best = 1;
  expand_clique(g, 0, g.vertices(), best);
  return best;
}

std::int64_t sigma2(const Graph& g) {
  std::int64_t s = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    s += d * d;
  }
  return s;
}

std::optional<std::int64_t> count_all_cycles(const Graph& g, std::int64_t cap) {
  if (!is_connected(g)) {
    throw std::invalid_argument("cycle census requires a connected graph");
  }
  CycleCensus census{g, cap};
  for (int root = 0; root < g.order(); ++root) {
    census.extend(root, -1, root, 1, bit(root));
    if (census.overflow) return std::nullopt;
  }
  return census.count;
}

InvariantSet compute_invariants(const Graph& g, std::int64_t cycle_cap) {
  InvariantSet inv;
  inv.d = g.order();
  inv.e = g.size();
  const DegreeProfile profile = degree_profile(g);
  inv.min_degree = profile.min_degree;
  inv.max_degree = profile.max_degree;
  inv.connected = is_connected(g);
  inv.bipartite = is_bipartite(g);
  inv.sigma2 = sigma2(g);
  inv.triangles = count_triangles(g);
  inv.c4 = count_c4(g);
  inv.k4 = count_k4(g);
  inv.omega = clique_number(g);
  if (inv.connected) {
    inv.cyclomatic = inv.e - inv.d + 1;
    if (cycle_cap > 0) inv.cycle_count = count_all_cycles(g, cycle_cap);
  }
  return inv;
}

}  // namespace cyclobound
