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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclobound {
namespace {

// (Ax)_i for every i.
void neighbour_sums(const Graph& g, std::span<const double> x,
                    std::vector<double>& out) {
  for (int i = 0; i < g.order(); ++i) {
    double s = 0;
    for_each_vertex(g.row(i), [&](int j) { s += x[j]; });
    out[i] = s;
  }
}

}  // namespace

double edge_form(const Graph& g, std::span<const double> x) {
  double total = 0;
  for (int i = 0; i < g.order(); ++i) {
    double s = 0;
    for_each_vertex(g.row(i) & ~vertex_range(i + 1), [&](int j) { s += x[j]; });
    total += x[i] * s;
  }
  return total;
}

ReplicatorResult replicator_maximize(const Graph& g, int max_iters, double tol,
                                     const ReplicatorObserver& observer) {
  if (g.size() == 0) {
    throw std::invalid_argument("replicator dynamics needs at least one edge");
  }
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

  const int n = g.order();
  std::vector<double> x(n), next(n), ax(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 / n + 1e-6 * (i + 1) / n;
  const double start_sum = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& xi : x) xi /= start_sum;

  ReplicatorResult r;
  neighbour_sums(g, x, ax);
  double value = 0.5 * std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
  for (int it = 1; it <= max_iters; ++it) {
    const double twice = 2 * value;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      next[i] = x[i] * ax[i] / twice;
      sum += next[i];
    }
    r.worst_simplex_error = std::max(r.worst_simplex_error, std::abs(sum - 1));
    double max_move = 0;
    for (int i = 0; i < n; ++i) {
      next[i] /= sum;
      max_move = std::max(max_move, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    neighbour_sums(g, x, ax);
    const double updated =
        0.5 * std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    r.worst_step_gain = std::min(r.worst_step_gain, updated - value);
    const double gain = std::abs(updated - value);
    value = updated;
    r.iterations = it;
    if (observer) observer(it, SimplexVector{x, value});
    if (gain < tol && max_move < tol) {
      r.converged = true;
      break;
    }
  }
  r.point = SimplexVector{std::move(x), value};
  return r;
}

double motzkin_straus_value(int omega) { return 0.5 * (1.0 - 1.0 / omega); }

Rational degree_point_value(const Graph& g, int alpha) {
  const std::int64_t d = g.order(), e = g.size();
  const std::int64_t total = 2 * e - alpha * d;
  int min_degree = g.degree(0);
  for (int v = 1; v < g.order(); ++v) min_degree = std::min(min_degree, g.degree(v));
  if (alpha < 2 || alpha > min_degree || total <= 0) {
    throw std::invalid_argument("degree point needs 2 <= alpha <= delta and 2e > alpha d");
  }
  std::int64_t numerator = 0;
  for (const Edge& edge : g.edges()) {
    numerator += std::int64_t{g.degree(edge.u) - alpha} * (g.degree(edge.v) - alpha);
  }
  return Rational(numerator, total * total);
}

std::vector<DegreePointCheck> degree_point_checks(const Graph& g, int omega) {
  std::vector<DegreePointCheck> checks;
  int min_degree = g.degree(0);
  for (int v = 1; v < g.order(); ++v) min_degree = std::min(min_degree, g.degree(v));
  const Rational bound = Rational(omega - 1, 2 * omega);
  for (int alpha = 2; alpha <= min_degree; ++alpha) {
    if (2 * g.size() <= alpha * g.order()) continue;
    DegreePointCheck c;
    c.alpha = alpha;
    c.value = degree_point_value(g, alpha);
    c.within_bound = c.value <= bound;
    checks.push_back(c);
  }
  return checks;
}

bool ms_certificate(const Graph& g, const SimplexVector& sv, int omega) {
  if (sv.value > motzkin_straus_value(omega) + kBoundSlack) return false;
  const auto checks = degree_point_checks(g, omega);
  return std::all_of(checks.begin(), checks.end(),
                     [](const DegreePointCheck& c) { return c.within_bound; });
}

}  // namespace cyclobound
