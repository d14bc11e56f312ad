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

#include "cyclobound/polytope.h"

#include <stdexcept>
#include <vector>

#include "cyclobound/bounds.h"

namespace cyclobound {

std::int64_t f1_formula(const InvariantSet& inv) {
  const std::int64_t e = inv.e;
  return e * (e - 1) / 2 - 2 * inv.c4 + 3 * inv.k4;
}

std::int64_t f1_pair_oracle(const Graph& g) {
  if (g.order() > 16) {
    throw std::invalid_argument("edge-pair oracle is limited to 16 vertices");
  }
  const std::vector<Edge> edges = g.edges();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      const bool disjoint = a != c && a != d && b != c && b != d;
      const bool opposite =
          disjoint && ((g.adjacent(a, c) && g.adjacent(b, d)) ||
                       (g.adjacent(a, d) && g.adjacent(b, c)));
      if (!opposite) ++count;
    }
  }
  return count;
}

int polytope_dimension(const InvariantSet& inv) {
  return inv.bipartite ? inv.d - 2 : inv.d - 1;
}

Simplicity is_simple_polytope(const Graph& g, const InvariantSet& inv) {
  Simplicity s;
  const bool tree = inv.connected && inv.e == inv.d - 1;
  const bool unicyclic_odd = inv.connected && inv.e == inv.d && !inv.bipartite;
  s.is_simplex = tree || unicyclic_odd;
  s.is_simple = s.is_simplex || complete_bipartite_sides(g).has_value();
  return s;
}

PolytopeFacts polytope_facts(const Graph& g, const InvariantSet& inv) {
  PolytopeFacts f;
  f.f1_formula = f1_formula(inv);
  if (g.order() <= 16) f.f1_oracle = f1_pair_oracle(g);
  f.dimension = polytope_dimension(inv);
  const Simplicity s = is_simple_polytope(g, inv);
  f.is_simplex = s.is_simplex;
  f.is_simple = s.is_simple;
  return f;
}

}  // namespace cyclobound
