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

#include "cyclobound/bounds.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclobound {
namespace {

BoundEntry inapplicable(BoundId id, std::int64_t observed) {
  BoundEntry b;
  b.id = id;
  b.observed = observed;
  return b;
}

BoundEntry evaluated(BoundId id, std::int64_t observed, Rational bound,
                     bool strict = false) {
  BoundEntry b;
  b.id = id;
  b.applicable = true;
  b.strict = strict;
  b.observed = observed;
  b.bound = bound;
  b.slack = bound - Rational(observed);
  b.equality = b.slack->sign() == 0;
  return b;
}

void require_connected(const InvariantSet& inv, const char* what) {
  if (!inv.connected) {
    throw std::invalid_argument(std::string(what) +
                                " requires a connected graph");
  }
}

// Vertices of degree two whose component in the degree-two subgraph is a
// path hanging between two distinct outside vertices.
std::vector<VertexSet> degree_two_ears(const Graph& g) {
  VertexSet twos = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) twos |= bit(v);
  }
  std::vector<VertexSet> ears;
  VertexSet left = twos;
  while (left != 0) {
    const VertexSet comp = reachable(g, std::countr_zero(left), twos);
    left &= ~comp;
    int inner_edges = 0;
    VertexSet attach = 0;
    for_each_vertex(comp, [&](int v) {
      inner_edges += popcount(g.row(v) & comp);
      attach |= g.row(v) & ~comp;
    });
    inner_edges /= 2;
    if (inner_edges == popcount(comp) - 1 && popcount(attach) == 2 &&
        comp != g.vertices()) {
      ears.push_back(comp);
    }
  }
  return ears;
}

}  // namespace

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::kOddCycleBinomial: return "a";
    case BoundId::kBipartiteBinomial: return "b";
    case BoundId::kBipartiteEdgeProduct: return "c";
    case BoundId::kOddNoK4Product: return "d";
    case BoundId::kWithK4Strict: return "e";
    case BoundId::kSigma2Average: return "f";
    case BoundId::kSigma2DegreeRange: return "g";
    case BoundId::kC4MinusK4: return "c4_minus_k4";
  }
  return "?";
}

std::string_view bound_statement(BoundId id) {
  switch (id) {
    case BoundId::kOddCycleBinomial:
      return "c4 <= C(e-d+1,2) if G has an odd cycle";
    case BoundId::kBipartiteBinomial:
      return "c4 <= C(e-d+2,2) if G is bipartite";
    case BoundId::kBipartiteEdgeProduct:
      return "c4 <= e(e-d+1)/4 if G is bipartite";
    case BoundId::kOddNoK4Product:
      return "c4 <= e(e-d)/4 if G has an odd cycle and no K4";
    case BoundId::kWithK4Strict:
      return "c4 < e(e-d)/4 + 3k4/2 if G contains K4";
    case BoundId::kSigma2Average:
      return "sigma2 <= e(2e/(d-1) + d-2) if d >= 2";
    case BoundId::kSigma2DegreeRange:
      return "sigma2 <= 2e(Delta+delta) - d*Delta*delta";
    case BoundId::kC4MinusK4:
      return "c4 - k4 <= C(e-d+1,2) if G has an odd cycle";
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (BoundId id : kAllBounds) {
    if (bound_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::kOddCycle: return "odd_cycle";
    case Tag::kK2mPlusPath: return "K2m_plus_path";
    case Tag::kBlocksK2mOddCycleBridges: return "blocks_K2m_oddcycle_bridges";
    case Tag::kCompleteBipartiteK2D2: return "complete_bipartite_K2_d2";
    case Tag::kUnicyclicOdd: return "unicyclic_odd";
    case Tag::kTree: return "tree";
    case Tag::kCompleteGraph: return "complete_graph";
    case Tag::kCompleteBipartite: return "complete_bipartite";
  }
  return "?";
}

const BoundEntry& BoundReport::at(BoundId id) const {
  for (const BoundEntry& b : entries) {
    if (b.id == id) return b;
  }
  throw std::out_of_range("bound not present in report");
}

bool BoundReport::any_violation() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const BoundEntry& b) { return b.violated(); });
}

BoundReport evaluate_bounds(const Graph& g, const InvariantSet& inv) {
  require_connected(inv, "bound evaluation");
  const std::int64_t d = inv.d, e = inv.e;
  const std::int64_t lo = inv.min_degree, hi = inv.max_degree;
  const bool bip = inv.bipartite;
  BoundReport r;
  auto& out = r.entries;

  using enum BoundId;
  out.push_back(bip ? inapplicable(kOddCycleBinomial, inv.c4)
                    : evaluated(kOddCycleBinomial, inv.c4, binom2(e - d + 1)));
  out.push_back(bip ? evaluated(kBipartiteBinomial, inv.c4, binom2(e - d + 2))
                    : inapplicable(kBipartiteBinomial, inv.c4));
  out.push_back(bip ? evaluated(kBipartiteEdgeProduct, inv.c4,
                                Rational(e * (e - d + 1), 4))
                    : inapplicable(kBipartiteEdgeProduct, inv.c4));
  out.push_back(!bip && inv.k4 == 0
                    ? evaluated(kOddNoK4Product, inv.c4, Rational(e * (e - d), 4))
                    : inapplicable(kOddNoK4Product, inv.c4));
  out.push_back(inv.k4 >= 1
                    ? evaluated(kWithK4Strict, inv.c4,
                                Rational(e * (e - d), 4) + Rational(3 * inv.k4, 2),
                                /*strict=*/true)
                    : inapplicable(kWithK4Strict, inv.c4));
  out.push_back(d >= 2 ? evaluated(kSigma2Average, inv.sigma2,
                                   Rational(e) * (Rational(2 * e, d - 1) +
                                                  Rational(d - 2)))
                       : inapplicable(kSigma2Average, inv.sigma2));
  out.push_back(evaluated(kSigma2DegreeRange, inv.sigma2,
                          2 * e * (hi + lo) - d * hi * lo));
  out.push_back(bip ? inapplicable(kC4MinusK4, inv.c4 - inv.k4)
                    : evaluated(kC4MinusK4, inv.c4 - inv.k4, binom2(e - d + 1)));

  if (r.at(kOddCycleBinomial).equality || r.at(kBipartiteBinomial).equality) {
    r.tags = classify_equality(g, r);
  }
  return r;
}

BoundReport evaluate_bounds(const Graph& g) {
  return evaluate_bounds(g, compute_invariants(g, /*cycle_cap=*/0));
}

Rational omegadelta_bound(const Graph& g, const InvariantSet& inv, int alpha,
                          int beta) {
  (void)g;
  require_connected(inv, "the parametric 4-cycle bound");
  if (inv.min_degree < 2) {
    throw std::invalid_argument("minimum degree must be at least 2, got " +
                                std::to_string(inv.min_degree));
  }
  if (alpha < 2 || alpha > inv.min_degree) {
    throw std::invalid_argument("alpha must satisfy 2 <= alpha <= delta = " +
                                std::to_string(inv.min_degree) + ", got " +
                                std::to_string(alpha));
  }
  if (beta < inv.omega) {
    throw std::invalid_argument("beta must be at least omega = " +
                                std::to_string(inv.omega) + ", got " +
                                std::to_string(beta));
  }
  const std::int64_t d = inv.d, e = inv.e, a = alpha;
  const std::int64_t gap = 2 * e - a * d;
  return Rational(gap * gap, 8) * (Rational(1) - Rational(1, beta)) +
         Rational(e * (d - a * a + 1), 4) +
         Rational(a - 2, 4) * Rational(inv.sigma2);
}

Rational omegadelta_bound(const Graph& g, int alpha, int beta) {
  return omegadelta_bound(g, compute_invariants(g, /*cycle_cap=*/0), alpha,
                          beta);
}

bool is_complete(const Graph& g) {
  const std::int64_t d = g.order();
  return g.size() == d * (d - 1) / 2;
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  const auto ones = bipartition(g);
  if (!ones) return std::nullopt;
  const int a = popcount(*ones);
  const int b = g.order() - a;
  if (a == 0 || b == 0 || g.size() != a * b) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

bool is_k2m(const Graph& g) {
  const auto sides = complete_bipartite_sides(g);
  return sides && sides->first == 2 && sides->second >= 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_k2m_plus_path(const Graph& g) {
  if (!is_connected(g) || is_bipartite(g)) return false;
  // A path of length one: a single added edge.
  for (const Edge& e : g.edges()) {
    if (is_k2m(delete_edge(g, e.u, e.v))) return true;
  }
  // Longer paths: an ear of degree-two vertices.
  for (VertexSet ear : degree_two_ears(g)) {
    if (is_k2m(induced_subgraph(g, g.vertices() & ~ear))) return true;
  }
  return false;
}

bool has_k2m_odd_cycle_bridge_blocks(const Graph& g) {
  if (!is_connected(g)) return false;
  const BlockDecomposition bd = blocks(g);
  int k2m = 0, odd_cycles = 0;
  for (const Block& b : bd.blocks) {
    if (b.is_bridge()) continue;
    const Graph h = induced_subgraph(g, b.vertices);
    if (is_k2m(h)) {
      ++k2m;
    } else if (is_cycle_graph(h) && h.order() % 2 == 1) {
      ++odd_cycles;
    } else {
      return false;
    }
  }
  return k2m == 1 && odd_cycles == 1;
}

TagSet structural_tags(const Graph& g) {
  TagSet tags;
  if (!is_connected(g)) return tags;
  const int d = g.order(), e = g.size();
  const bool bip = is_bipartite(g);
  if (is_cycle_graph(g) && d % 2 == 1) tags.insert(Tag::kOddCycle);
  if (is_k2m_plus_path(g)) tags.insert(Tag::kK2mPlusPath);
  if (has_k2m_odd_cycle_bridge_blocks(g)) {
    tags.insert(Tag::kBlocksK2mOddCycleBridges);
  }
  const auto sides = complete_bipartite_sides(g);
  if (sides && sides->first == 2 && d >= 3) {
    tags.insert(Tag::kCompleteBipartiteK2D2);
  }
  if (e == d && !bip) tags.insert(Tag::kUnicyclicOdd);
  if (e == d - 1) tags.insert(Tag::kTree);
  if (is_complete(g)) tags.insert(Tag::kCompleteGraph);
  if (sides) tags.insert(Tag::kCompleteBipartite);
  return tags;
}

TagSet classify_equality(const Graph& g, const BoundReport& report) {
  if (!report.at(BoundId::kOddCycleBinomial).equality &&
      !report.at(BoundId::kBipartiteBinomial).equality) {
    throw std::invalid_argument(
        "classification needs equality in the binomial bound");
  }
  return structural_tags(g);
}

bool in_odd_extremal_classes(const TagSet& tags) {
  return tags.contains(Tag::kOddCycle) || tags.contains(Tag::kK2mPlusPath) ||
         tags.contains(Tag::kBlocksK2mOddCycleBridges);
}

SufficientConditions sufficient_conditions(const Graph& g,
                                           const InvariantSet& inv) {
  (void)g;
  require_connected(inv, "sufficient-condition check");
  const std::int64_t d = inv.d, e = inv.e;
  const std::int64_t lo = inv.min_degree, hi = inv.max_degree;
  SufficientConditions s;
  s.balanced_degrees = lo >= 4 && 4 * hi <= 3 * d + 1;
  s.min_degree_12 = lo >= 12;
  s.mid_range = 5 <= lo && lo <= hi && hi <= d - 2 && 10 <= d && d <= 24;
  s.dominating_vertex = hi == d - 1;
  s.sparse_min_degree = lo >= 3 && e < lo * (d - lo);
  if (lo >= 2) {
    const Rational threshold = Rational((lo + 2) * d - (3 * lo + 1), 2) +
                               Rational(1, 2 * (lo - 1));
    s.dense_enough = Rational(e) >= threshold;
  }
  s.min_degree_at_most_3 = lo <= 3;
  return s;
}

std::string_view composition_condition_name(CompositionCondition c) {
  switch (c) {
    case CompositionCondition::kNone: return "none";
    case CompositionCondition::kBridgesOnly: return "bridges_only";
    case CompositionCondition::kBipartiteOddCycleBridges:
      return "bipartite_oddcycle_bridges";
  }
  return "?";
}

BlockCompositionResult block_composition_check(const Graph& g,
                                               const BlockDecomposition& bd) {
  if (!is_connected(g)) {
    throw std::invalid_argument("block composition requires a connected graph");
  }
  if (bd.blocks.size() < 2) {
    throw std::invalid_argument("block composition needs at least two blocks");
  }
  BlockCompositionResult r;
  r.observed = count_c4(g);
  int non_bridges = 0, bipartite_blocks = 0, odd_cycle_blocks = 0;
  for (const Block& b : bd.blocks) {
    const Graph h = induced_subgraph(g, b.vertices);
    const std::int64_t c4 = count_c4(h);
    const std::int64_t bound =
        binom2(b.size - b.order + 1 + (b.bipartite ? 1 : 0));
    r.block_sum += c4;
    r.blocks_within_bound &= c4 <= bound;
    r.all_blocks_equal &= c4 == bound;
    if (b.is_bridge()) continue;
    ++non_bridges;
    if (b.bipartite) ++bipartite_blocks;
    if (is_cycle_graph(h) && h.order() % 2 == 1) ++odd_cycle_blocks;
  }
  const bool bip = is_bipartite(g);
  r.composed_bound = binom2(g.size() - g.order() + 1 + (bip ? 1 : 0));
  r.equality = r.observed == r.composed_bound;
  if (non_bridges <= 1) {
    r.condition = CompositionCondition::kBridgesOnly;
  } else if (non_bridges == 2 && bipartite_blocks == 1 &&
             odd_cycle_blocks == 1) {
    r.condition = CompositionCondition::kBipartiteOddCycleBridges;
  }
  return r;
}

}  // namespace cyclobound
