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

#ifndef CYCLOBOUND_MOTZKIN_STRAUS_H_
#define CYCLOBOUND_MOTZKIN_STRAUS_H_

#include <functional>
#include <span>
#include <vector>

#include "cyclobound/graph.h"
#include "cyclobound/rational.h"

namespace cyclobound {

// Maximises the edge form sum_{ij in E} x_i x_j over the probability simplex
// with replicator dynamics. This is the only floating-point code in the
// library; the clique number always comes from the exact solver.

inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kBoundSlack = 1e-9;
inline constexpr double kDefaultStepTolerance = 1e-12;
inline constexpr int kDefaultMaxIterations = 100'000;

struct SimplexVector {
  std::vector<double> x;
  double value = 0;
};

// sum over edges of x_i x_j.
double edge_form(const Graph& g, std::span<const double> x);

struct ReplicatorResult {
  SimplexVector point;
  int iterations = 0;
  bool converged = false;  // stopped on tolerance rather than the cap
  double worst_step_gain = 0;    // most negative per-step value change seen
  double worst_simplex_error = 0;  // largest |sum x - 1| after an update
};

using ReplicatorObserver =
    std::function<void(int iteration, const SimplexVector& point)>;

// Starts from the uniform point plus 1e-6 (i+1)/n, renormalised. Iterates
// x_i <- x_i (Ax)_i / (2 value) until both the value change and the largest
// coordinate change fall below tol, or max_iters is reached. Throws
// std::invalid_argument for edgeless graphs, max_iters < 1 or tol <= 0.
ReplicatorResult replicator_maximize(const Graph& g,
                                     int max_iters = kDefaultMaxIterations,
                                     double tol = kDefaultStepTolerance,
                                     const ReplicatorObserver& observer = {});

// (1 - 1/omega) / 2.
double motzkin_straus_value(int omega);

// Exact edge form at x_i = (deg(i) - alpha) / (2e - alpha d). Requires
// 2 <= alpha <= delta and 2e > alpha d.
Rational degree_point_value(const Graph& g, int alpha);

struct DegreePointCheck {
  int alpha = 0;
  Rational value;
  bool within_bound = false;
};

// Every admissible alpha in 2..delta with 2e > alpha d.
std::vector<DegreePointCheck> degree_point_checks(const Graph& g, int omega);

// sv.value <= (1 - 1/omega)/2 + 1e-9 and every degree point is within the
// exact bound.
bool ms_certificate(const Graph& g, const SimplexVector& sv, int omega);

}  // namespace cyclobound

#endif  // CYCLOBOUND_MOTZKIN_STRAUS_H_
