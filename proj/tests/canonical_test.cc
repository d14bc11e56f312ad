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

#include "cyclobound/canonical.h"

#include <gtest/gtest.h>

#include <random>

#include "cyclobound/families.h"
#include "oracles.h"

namespace cyclobound {
namespace {

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const Graph h = oracle::random_permutation_of(rng, g);
    EXPECT_EQ(canonical_form(g), canonical_form(h)) << encode_graph6(g);
  }
}

TEST(Canonical, HighlySymmetricGraphs) {
  std::mt19937_64 rng(83);
  const Graph graphs[] = {families::petersen(), families::complete_bipartite(5, 5),
                          families::cycle(24), Graph(12), families::complete(16)};
  for (const Graph& g : graphs) {
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(canonical_form(oracle::random_permutation_of(rng, g)), canonical_form(g));
    }
  }
}

TEST(Canonical, LabellingIsAPermutationProducingTheForm) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 15), 0.4);
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> sorted = lab.position;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.order(); ++i) EXPECT_EQ(sorted[i], i);
    EXPECT_EQ(relabel(g, lab.position), lab.graph);
  }
}

TEST(Canonical, SeparatesClassesLikePermutationOracle) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(isomorphic(a, b),
              oracle::permutation_min_key(a) == oracle::permutation_min_key(b));
  }
}

TEST(Canonical, DistinguishesCospectralLikePairs) {
  // Same degree sequence (2,2,2,2,2,2): C6 versus two triangles.
  const Graph c6 = families::cycle(6);
  const std::vector<Edge> two{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_FALSE(isomorphic(c6, Graph(6, two)));
}

}  // namespace
}  // namespace cyclobound
