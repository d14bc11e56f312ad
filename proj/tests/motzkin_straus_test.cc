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

#include "cyclobound/motzkin_straus.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cyclobound/counts.h"
#include "cyclobound/families.h"
#include "oracles.h"

namespace cyclobound {
namespace {

TEST(EdgeForm, UniformPointOnCompleteGraph) {
  const Graph k4 = families::complete(4);
  const std::vector<double> x(4, 0.25);
  EXPECT_DOUBLE_EQ(edge_form(k4, x), 6 * 0.0625);
}

TEST(Replicator, AttainsCliqueValueOnCompleteGraphs) {
  for (int d = 3; d <= 10; ++d) {
    const ReplicatorResult r = replicator_maximize(families::complete(d));
    EXPECT_NEAR(r.point.value, 0.5 * (1.0 - 1.0 / d), 1e-9) << d;
    EXPECT_TRUE(r.converged);
  }
}

TEST(Replicator, FiveCycleLeavesTheSymmetricStart) {
  const ReplicatorResult r = replicator_maximize(families::cycle(5));
  EXPECT_NEAR(r.point.value, 0.25, 1e-9);
  EXPECT_GT(r.iterations, 1);
  EXPECT_TRUE(r.converged);
}

TEST(Replicator, AscendsAndStaysOnSimplex) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + static_cast<int>(rng() % 12), 0.4);
    double previous = -1;
    bool ascending = true, on_simplex = true;
    const ReplicatorResult r = replicator_maximize(
        g, 2000, kDefaultStepTolerance, [&](int, const SimplexVector& p) {
          if (p.value < previous - 1e-14) ascending = false;
          previous = p.value;
          const double sum = std::accumulate(p.x.begin(), p.x.end(), 0.0);
          if (std::abs(sum - 1.0) > kSimplexTolerance) on_simplex = false;
          for (double xi : p.x) on_simplex = on_simplex && xi >= 0;
        });
    EXPECT_TRUE(ascending);
    EXPECT_TRUE(on_simplex);
    EXPECT_GE(r.worst_step_gain, -1e-14);
    EXPECT_LE(r.worst_simplex_error, kSimplexTolerance);
    EXPECT_NEAR(r.point.value, edge_form(g, r.point.x), 1e-15);
    EXPECT_LE(r.point.value, motzkin_straus_value(clique_number(g)) + kBoundSlack);
  }
}

TEST(Replicator, IsDeterministic) {
  const Graph g = families::petersen();
  const ReplicatorResult a = replicator_maximize(g);
  const ReplicatorResult b = replicator_maximize(g);
  EXPECT_EQ(a.point.x, b.point.x);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Replicator, RejectsBadArguments) {
  EXPECT_THROW(replicator_maximize(Graph(3)), std::invalid_argument);
  EXPECT_THROW(replicator_maximize(families::complete(3), 0), std::invalid_argument);
  EXPECT_THROW(replicator_maximize(families::complete(3), 10, 0.0), std::invalid_argument);
}

TEST(Replicator, IterationCapStopsUnconverged) {
  const ReplicatorResult r = replicator_maximize(families::cycle(7), 3);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_FALSE(r.converged);
}

TEST(MotzkinStrausValue, Formula) {
  EXPECT_DOUBLE_EQ(motzkin_straus_value(1), 0.0);
  EXPECT_DOUBLE_EQ(motzkin_straus_value(2), 0.25);
  EXPECT_DOUBLE_EQ(motzkin_straus_value(4), 0.375);
}

TEST(DegreePoint, ExactValueMatchesDirectSum) {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 8), 0.5);
    const InvariantSet inv = compute_invariants(g, 0);
    for (int alpha = 2; alpha <= inv.min_degree; ++alpha) {
      const std::int64_t denom = 2 * inv.e - alpha * inv.d;
      if (denom <= 0) continue;
      ++checked;
      Rational direct;
      for (const Edge& e : g.edges()) {
        direct += Rational(g.degree(e.u) - alpha, denom) * Rational(g.degree(e.v) - alpha, denom);
      }
      EXPECT_EQ(degree_point_value(g, alpha), direct);
      EXPECT_LE(degree_point_value(g, alpha), Rational(inv.omega - 1, 2 * inv.omega));
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(DegreePoint, ChecksCoverAdmissibleAlphas) {
  const Graph k6 = families::complete(6);
  const auto checks = degree_point_checks(k6, 6);
  ASSERT_EQ(checks.size(), 3U);  // alpha = 2..4; alpha = 5 gives 2e = alpha d
  for (const DegreePointCheck& c : checks) {
    EXPECT_TRUE(c.within_bound);
    EXPECT_EQ(c.value, Rational(5, 12));
  }
}

TEST(Certificate, AcceptsSolverOutputAndRejectsInflatedValue) {
  const Graph c5 = families::cycle(5);
  SimplexVector sv = replicator_maximize(c5).point;
  EXPECT_TRUE(ms_certificate(c5, sv, 2));
  sv.value = 0.26;
  EXPECT_FALSE(ms_certificate(c5, sv, 2));
}

}  // namespace
}  // namespace cyclobound
