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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyclobound/bounds.h"
#include "cyclobound/enumerate.h"
#include "cyclobound/families.h"
#include "oracles.h"

namespace cyclobound {
namespace {

// Edge pairs minus the pairs that are opposite sides of some 4-cycle,
// counted from the explicit list of 4-cycles.
std::int64_t f1_from_cycle_list(const Graph& g) {
  std::set<std::pair<Edge, Edge>> opposite;
  for (const auto& c : oracle::four_cycles(g)) {
    opposite.insert(std::minmax(c[0], c[2]));
    opposite.insert(std::minmax(c[1], c[3]));
  }
  const std::int64_t e = g.size();
  return e * (e - 1) / 2 - static_cast<std::int64_t>(opposite.size());
}

TEST(F1, KnownPolytopes) {
  // The edge polytope of K4 is an octahedron.
  const InvariantSet k4 = compute_invariants(families::complete(4));
  EXPECT_EQ(f1_formula(k4), 12);
  EXPECT_EQ(f1_pair_oracle(families::complete(4)), 12);
  // A tree gives a simplex: every pair of vertices is an edge.
  const InvariantSet tree = compute_invariants(families::star(5));
  EXPECT_EQ(f1_formula(tree), 10);
  // C4 gives a square.
  EXPECT_EQ(f1_formula(compute_invariants(families::cycle(4))), 4);
}

TEST(F1, FormulaMatchesOraclesOnRandomGraphs) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    const std::int64_t formula = f1_formula(compute_invariants(g, 0));
    EXPECT_EQ(formula, f1_pair_oracle(g));
    EXPECT_EQ(formula, f1_from_cycle_list(g));
  }
  EXPECT_THROW(f1_pair_oracle(Graph(17)), std::invalid_argument);
}

TEST(F1, FormulaMatchesPairOracleOnSmallCorpus) {
  int graphs = 0;
  for_each_connected_graph(1, 6, Shard{}, [&](const Graph& g) {
    ++graphs;
    EXPECT_EQ(f1_formula(compute_invariants(g, 0)), f1_pair_oracle(g)) << encode_graph6(g);
  });
  EXPECT_EQ(graphs, 1 + 1 + 2 + 6 + 21 + 112);
}

TEST(Dimension, DependsOnBipartiteness) {
  EXPECT_EQ(polytope_dimension(compute_invariants(families::cycle(6))), 4);
  EXPECT_EQ(polytope_dimension(compute_invariants(families::cycle(5))), 4);
  EXPECT_EQ(polytope_dimension(compute_invariants(families::complete(5))), 4);
}

TEST(Simplicity, KnownFamilies) {
  auto simple = [](const Graph& g) { return is_simple_polytope(g, compute_invariants(g)); };
  EXPECT_TRUE(simple(families::path(5)).is_simplex);
  EXPECT_TRUE(simple(families::cycle(5)).is_simplex);
  EXPECT_FALSE(simple(families::cycle(6)).is_simplex);
  EXPECT_TRUE(simple(families::complete_bipartite(3, 4)).is_simple);
  EXPECT_TRUE(simple(families::cycle(4)).is_simple);
  EXPECT_FALSE(simple(families::complete(4)).is_simple);
  EXPECT_FALSE(simple(families::petersen()).is_simple);
}

TEST(Simplicity, SimpleExactlyWhenEdgeProductBoundIsTight) {
  for_each_connected_graph(2, 7, Shard{}, [&](const Graph& g) {
    const InvariantSet inv = compute_invariants(g, 0);
    const BoundReport r = evaluate_bounds(g, inv);
    const PolytopeFacts f = polytope_facts(g, inv);
    bool tight = false;
    if (inv.bipartite) tight = r.at(BoundId::kBipartiteEdgeProduct).equality;
    else if (inv.k4 == 0) tight = r.at(BoundId::kOddNoK4Product).equality;
    EXPECT_EQ(f.is_simple, tight) << encode_graph6(g);
    // A simple polytope has dim edges at each of its e vertices.
    if (f.is_simple) EXPECT_EQ(2 * f.f1_formula, std::int64_t{inv.e} * f.dimension);
    EXPECT_GE(2 * f.f1_formula, std::int64_t{inv.e} * f.dimension);
  });
}

}  // namespace
}  // namespace cyclobound
