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

#include "cyclobound/verify.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <tuple>

#include "cyclobound/polytope.h"

namespace cyclobound {
namespace {

constexpr std::size_t kBatchSize = 2048;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Recorder {
 public:
  Recorder(GraphFindings& f, const std::string& graph6, int d, int e)
      : f_(f), graph6_(graph6), d_(d), e_(e) {}

  void fail(std::string check, std::string observed, std::string bound) {
    f_.violations.push_back(
        {graph6_, d_, e_, std::move(check), std::move(observed), std::move(bound)});
  }
  void fail(std::string check, std::int64_t observed, const Rational& bound) {
    fail(std::move(check), std::to_string(observed), bound.str());
  }

 private:
  GraphFindings& f_;
  const std::string& graph6_;
  int d_, e_;
};

void check_edge_counts(const Graph& g, const InvariantSet& inv, Recorder& rec) {
  std::int64_t c3_sum = 0, c4_sum = 0;
  for (const EdgeCycleCount& c : per_edge_counts(g)) {
    c3_sum += c.c3;
    c4_sum += c.c4;
    const std::int64_t cap =
        std::int64_t{g.degree(c.edge.u) - 1} * (g.degree(c.edge.v) - 1) - c.c3;
    if (c.c4 > cap) rec.fail("per_edge_pointwise", c.c4, cap);
  }
  if (c4_sum != 4 * inv.c4) rec.fail("per_edge_c4_sum", c4_sum, 4 * inv.c4);
  if (c3_sum != 3 * inv.triangles) {
    rec.fail("per_edge_c3_sum", c3_sum, 3 * inv.triangles);
  }
  if (3 * inv.k4 > inv.c4) rec.fail("k4_c4", 3 * inv.k4, inv.c4);
}

void check_polytope(const Graph& g, const InvariantSet& inv,
                    const BoundReport& report, Recorder& rec) {
  const PolytopeFacts facts = polytope_facts(g, inv);
  if (facts.f1_oracle && *facts.f1_oracle != facts.f1_formula) {
    rec.fail("f1_identity", *facts.f1_oracle, facts.f1_formula);
  }
  if (2 * facts.f1_formula < std::int64_t{inv.e} * facts.dimension) {
    rec.fail("f1_floor", facts.f1_formula, Rational(std::int64_t{inv.e} * facts.dimension, 2));
  }
  // Attaining the edge-product bound is the same as simplicity.
  bool attained = false;
  if (inv.bipartite) {
    attained = report.at(BoundId::kBipartiteEdgeProduct).equality;
    const bool expected = inv.e == inv.d - 1 || complete_bipartite_sides(g).has_value();
    if (attained != expected) {
      rec.fail("edge_product_equality", inv.c4, *report.at(BoundId::kBipartiteEdgeProduct).bound);
    }
  } else if (inv.k4 == 0) {
    attained = report.at(BoundId::kOddNoK4Product).equality;
    if (attained != (inv.e == inv.d)) {
      rec.fail("edge_product_equality", inv.c4, *report.at(BoundId::kOddNoK4Product).bound);
    }
  }
  if (facts.is_simple != attained) {
    rec.fail("simple_polytope", facts.is_simple ? "simple" : "not simple",
             attained ? "attained" : "not attained");
  }
}

void check_census(const InvariantSet& inv, Recorder& rec) {
  if (!inv.cycle_count || !inv.cyclomatic) return;
  const std::int64_t cyc = *inv.cyclomatic;
  const std::int64_t c = *inv.cycle_count;
  if (c < cyc) rec.fail("cycle_census_lower", c, cyc);
  if (cyc < 62 && c > (std::int64_t{1} << cyc) - 1) {
    rec.fail("cycle_census_upper", c, (std::int64_t{1} << cyc) - 1);
  }
}

void check_parametric(const Graph& g, const InvariantSet& inv, Recorder& rec) {
  if (inv.min_degree < 2) return;
  for (int alpha = 2; alpha <= inv.min_degree; ++alpha) {
    std::optional<Rational> previous;
    for (int beta = inv.omega; beta <= inv.d; ++beta) {
      const Rational b = omegadelta_bound(g, inv, alpha, beta);
      if (b < Rational(inv.c4)) rec.fail("omegadelta", inv.c4, b);
      if (previous && b < *previous) rec.fail("omegadelta_monotone", b.str(), previous->str());
      previous = b;
    }
  }
  const Rational at_delta = omegadelta_bound(g, inv, inv.min_degree, inv.omega);
  const auto sides = complete_bipartite_sides(g);
  const bool extremal = is_complete(g) || (sides && sides->first == sides->second);
  if ((at_delta == Rational(inv.c4)) != extremal) {
    rec.fail("omegadelta_equality", inv.c4, at_delta);
  }
}

void check_motzkin_straus(const Graph& g, const InvariantSet& inv,
                          const VerifyOptions& options, Recorder& rec) {
  if (!options.motzkin_straus || inv.e == 0) return;
  const ReplicatorResult r = replicator_maximize(g, options.ms_max_iters);
  if (!ms_certificate(g, r.point, inv.omega)) {
    rec.fail("motzkin_straus", format_double(r.point.value),
             format_double(motzkin_straus_value(inv.omega)));
  }
  if (r.worst_step_gain < -1e-14) {
    rec.fail("replicator_ascent", format_double(r.worst_step_gain), "-1e-14");
  }
  if (r.worst_simplex_error > kSimplexTolerance) {
    rec.fail("replicator_simplex", format_double(r.worst_simplex_error), "1e-12");
  }
}

void check_classification(const Graph& g, const InvariantSet& inv,
                          const BoundReport& report, Recorder& rec) {
  if (inv.min_degree < 2) return;
  const TagSet tags = structural_tags(g);
  if (inv.bipartite) {
    const BoundEntry& b = report.at(BoundId::kBipartiteBinomial);
    if (b.equality != tags.contains(Tag::kCompleteBipartiteK2D2)) {
      rec.fail("bipartite_equality_class", inv.c4, *b.bound);
    }
  } else if (inv.k4 == 0) {
    const BoundEntry& a = report.at(BoundId::kOddCycleBinomial);
    if (a.equality != in_odd_extremal_classes(tags)) {
      rec.fail("odd_equality_classes", inv.c4, *a.bound);
    }
  }
}

template <typename T>
void sort_by_graph(std::vector<T>& items) {
  std::sort(items.begin(), items.end(), [](const T& a, const T& b) {
    return std::tie(a.d, a.e, a.graph6) < std::tie(b.d, b.e, b.graph6);
  });
}

// Streams the corpus in batches; inspect() runs on each graph, in parallel
// when `parallel` is set, and merge() sees the results in stream order.
template <typename Result, typename Inspect, typename Merge>
void scan_corpus(const CorpusSpec& spec, int threads, bool parallel,
                 const Inspect& inspect, const Merge& merge) {
  validate(spec);
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Graph> batch;
  std::vector<Result> results;
  auto flush = [&] {
    const long count = static_cast<long>(batch.size());
    results.assign(batch.size(), Result{});
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
      for (long i = 0; i < count; ++i) results[i] = inspect(batch[i]);
    } else {
      for (long i = 0; i < count; ++i) results[i] = inspect(batch[i]);
    }
    for (Result& r : results) merge(r);
    batch.clear();
  };
  for_each_connected_graph(spec.min_n, spec.max_n, spec.shard,
                           [&](const Graph& g) {
                             batch.push_back(g);
                             if (batch.size() == kBatchSize) flush();
                           });
  flush();
}

VerificationReport run_verification(const CorpusSpec& spec,
                                    const VerifyOptions& options,
                                    bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  scan_corpus<GraphFindings>(
      spec, options.threads, parallel,
      [&](const Graph& g) { return inspect_graph(g, spec.filter, options); },
      [&](GraphFindings& f) {
        if (!f.scanned) return;
        ++report.graphs_scanned;
        for (auto& v : f.violations) report.violations.push_back(std::move(v));
        for (auto& c : f.equality_cases) {
          if (f.novel) report.novel_extremals.push_back(c.graph6);
          report.equality_cases.push_back(std::move(c));
        }
      });
  sort_by_graph(report.equality_cases);
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return std::tie(a.d, a.e, a.graph6, a.check) <
                            std::tie(b.d, b.e, b.graph6, b.check);
                   });
  std::sort(report.novel_extremals.begin(), report.novel_extremals.end(),
            [](const std::string& a, const std::string& b) {
              return std::pair(a.size(), a) < std::pair(b.size(), b);
            });
  report.novel_extremals.erase(
      std::unique(report.novel_extremals.begin(), report.novel_extremals.end()),
      report.novel_extremals.end());
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

GraphFindings inspect_graph(const Graph& g, const CorpusFilter& filter,
                            const VerifyOptions& options) {
  GraphFindings f;
  const InvariantSet inv = compute_invariants(g, options.cycle_cap);
  if (!inv.connected || !filter.accepts(inv)) return f;
  f.scanned = true;
  const std::string graph6 = encode_graph6(g);
  Recorder rec(f, graph6, inv.d, inv.e);
  try {
    const BoundReport report = evaluate_bounds(g, inv);
    for (const BoundEntry& b : report.entries) {
      if (b.violated()) rec.fail(std::string(bound_name(b.id)), b.observed, *b.bound);
    }
    for (BoundId id : {BoundId::kOddCycleBinomial, BoundId::kBipartiteBinomial}) {
      if (!report.at(id).equality) continue;
      f.equality_cases.push_back({graph6, inv.d, inv.e, id, report.tags});
      // The structural classes describe minimum degree 2 and above.
      f.novel = inv.min_degree >= 2 && report.tags.empty();
    }
    check_edge_counts(g, inv, rec);
    check_polytope(g, inv, report, rec);
    check_census(inv, rec);
    check_parametric(g, inv, rec);
    check_motzkin_straus(g, inv, options, rec);
    if (inv.e >= 2) {
      const BlockDecomposition bd = blocks(g);
      if (bd.blocks.size() >= 2) {
        const BlockCompositionResult r = block_composition_check(g, bd);
        if (!r.ok()) rec.fail("block_composition", r.observed, r.composed_bound);
      }
    }
    check_classification(g, inv, report, rec);
  } catch (const std::exception& ex) {
    rec.fail("internal_error", ex.what(), "");
  }
  return f;
}

VerificationReport verify_corpus(const CorpusSpec& spec,
                                 const VerifyOptions& options) {
  return run_verification(spec, options, /*parallel=*/true);
}

VerificationReport verify_corpus_serial(const CorpusSpec& spec,
                                        const VerifyOptions& options) {
  return run_verification(spec, options, /*parallel=*/false);
}

std::vector<EqualityCase> find_equality(const CorpusSpec& spec, BoundId bound,
                                        int threads) {
  std::vector<EqualityCase> out;
  scan_corpus<std::optional<EqualityCase>>(
      spec, threads, /*parallel=*/true,
      [&](const Graph& g) -> std::optional<EqualityCase> {
        const InvariantSet inv = compute_invariants(g, /*cycle_cap=*/0);
        if (!spec.filter.accepts(inv)) return std::nullopt;
        const BoundEntry& b = evaluate_bounds(g, inv).at(bound);
        if (!b.applicable || !b.equality) return std::nullopt;
        return EqualityCase{encode_graph6(g), inv.d, inv.e, bound,
                            structural_tags(g)};
      },
      [&](std::optional<EqualityCase>& c) {
        if (c) out.push_back(std::move(*c));
      });
  sort_by_graph(out);
  return out;
}

}  // namespace cyclobound
