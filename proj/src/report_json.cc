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

#include "cyclobound/report_json.h"

#include <stdexcept>
#include <string>

namespace cyclobound {
namespace {

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

Json tag_list(const TagSet& tags) {
  Json out = Json::array();
  for (Tag t : tags) out.push_back(tag_name(t));
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Json rational_json(const std::optional<Rational>& r) {
  return r ? rational_json(*r) : Json(nullptr);
}

Json invariants_json(const InvariantSet& inv) {
  Json j;
  j["d"] = inv.d;
  j["e"] = inv.e;
  j["min_degree"] = inv.min_degree;
  j["max_degree"] = inv.max_degree;
  j["connected"] = inv.connected;
  j["bipartite"] = inv.bipartite;
  j["epsilon"] = inv.epsilon();
  j["sigma2"] = inv.sigma2;
  j["triangles"] = inv.triangles;
  j["c4"] = inv.c4;
  j["k4"] = inv.k4;
  j["omega"] = inv.omega;
  j["cycle_count"] = optional_json(inv.cycle_count);
  j["cyclomatic"] = optional_json(inv.cyclomatic);
  return j;
}

Json bound_entry_json(const BoundEntry& entry, const TagSet& tags) {
  Json j;
  j["id"] = bound_name(entry.id);
  j["statement"] = bound_statement(entry.id);
  j["applicable"] = entry.applicable;
  j["strict"] = entry.strict;
  j["observed"] = entry.observed;
  j["bound"] = rational_json(entry.bound);
  j["slack"] = rational_json(entry.slack);
  j["equality"] = entry.equality;
  if (entry.id == BoundId::kOddCycleBinomial ||
      entry.id == BoundId::kBipartiteBinomial) {
    j["tags"] = entry.equality ? tag_list(tags) : Json::array();
  }
  return j;
}

Json bounds_json(const BoundReport& report) {
  Json out = Json::array();
  for (const BoundEntry& e : report.entries) {
    out.push_back(bound_entry_json(e, report.tags));
  }
  return out;
}

Json polytope_json(const PolytopeFacts& facts) {
  Json j;
  j["f1_formula"] = facts.f1_formula;
  j["f1_oracle"] = optional_json(facts.f1_oracle);
  j["dimension"] = facts.dimension;
  j["is_simplex"] = facts.is_simplex;
  j["is_simple"] = facts.is_simple;
  return j;
}

Json blocks_json(const Graph& g, const BlockDecomposition& bd) {
  Json j;
  j["count"] = bd.blocks.size();
  j["cut_vertices"] = vertex_list(bd.cut_vertices);
  Json list = Json::array();
  for (const Block& b : bd.blocks) {
    Json item;
    item["vertices"] = vertex_list(b.vertices);
    item["order"] = b.order;
    item["size"] = b.size;
    item["bipartite"] = b.bipartite;
    item["bridge"] = b.is_bridge();
    item["c4"] = count_c4(induced_subgraph(g, b.vertices));
    list.push_back(std::move(item));
  }
  j["blocks"] = std::move(list);
  if (bd.blocks.size() >= 2) {
    const BlockCompositionResult r = block_composition_check(g, bd);
    Json c;
    c["block_sum"] = r.block_sum;
    c["composed_bound"] = r.composed_bound;
    c["additive"] = r.additive();
    c["blocks_within_bound"] = r.blocks_within_bound;
    c["all_blocks_equal"] = r.all_blocks_equal;
    c["equality"] = r.equality;
    c["condition"] = composition_condition_name(r.condition);
    c["consistent"] = r.consistent();
    j["composition"] = std::move(c);
  } else {
    j["composition"] = nullptr;
  }
  return j;
}

Json sufficient_conditions_json(const SufficientConditions& sc) {
  Json j;
  j["balanced_degrees"] = sc.balanced_degrees;
  j["min_degree_12"] = sc.min_degree_12;
  j["mid_range"] = sc.mid_range;
  j["dominating_vertex"] = sc.dominating_vertex;
  j["sparse_min_degree"] = sc.sparse_min_degree;
  j["dense_enough"] = optional_json(sc.dense_enough);
  j["min_degree_at_most_3"] = sc.min_degree_at_most_3;
  return j;
}

Json replicator_json(const Graph& g, const ReplicatorResult& result, int omega) {
  Json j;
  j["value"] = result.point.value;
  j["bound"] = motzkin_straus_value(omega);
  j["omega"] = omega;
  j["within_bound"] = result.point.value <= motzkin_straus_value(omega) + kBoundSlack;
  j["certificate"] = ms_certificate(g, result.point, omega);
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["worst_step_gain"] = result.worst_step_gain;
  j["worst_simplex_error"] = result.worst_simplex_error;
  j["x"] = result.point.x;
  Json points = Json::array();
  for (const DegreePointCheck& c : degree_point_checks(g, omega)) {
    points.push_back(
        {{"alpha", c.alpha}, {"value", c.value.str()}, {"within_bound", c.within_bound}});
  }
  j["degree_points"] = std::move(points);
  return j;
}

Json analysis_document(const Graph& g, const AnalysisOptions& options) {
  const InvariantSet inv = compute_invariants(g, options.cycle_cap);
  if (!inv.connected && !options.allow_disconnected) {
    throw std::invalid_argument(
        "graph is disconnected (pass --allow-disconnected to analyse anyway)");
  }
  Json doc;
  doc["graph6"] = encode_graph6(g);
  doc["invariants"] = invariants_json(inv);
  if (inv.connected) {
    doc["bounds"] = bounds_json(evaluate_bounds(g, inv));
    doc["polytope"] = polytope_json(polytope_facts(g, inv));
    doc["blocks"] = blocks_json(g, blocks(g));
    doc["sufficient_conditions"] =
        sufficient_conditions_json(sufficient_conditions(g, inv));
  } else {
    doc["bounds"] = nullptr;
    doc["polytope"] = nullptr;
    doc["blocks"] = nullptr;
    doc["sufficient_conditions"] = nullptr;
  }
  if (options.motzkin_straus) {
    doc["ms"] = inv.e == 0 ? Json(nullptr)
                           : replicator_json(g,
                                             replicator_maximize(g, options.ms_max_iters,
                                                                 options.ms_tol),
                                             inv.omega);
  }
  return doc;
}

Json corpus_json(const CorpusSpec& spec) {
  Json filters = Json::array();
  if (spec.filter.bipartite) filters.push_back("bipartite");
  if (spec.filter.non_bipartite) filters.push_back("non_bipartite");
  if (spec.filter.no_k4) filters.push_back("no_K4");
  if (spec.filter.min_degree > 0) {
    filters.push_back("min_degree>=" + std::to_string(spec.filter.min_degree));
  }
  Json j;
  j["min_n"] = spec.min_n;
  j["max_n"] = spec.max_n;
  j["filters"] = std::move(filters);
  j["shard"] = std::to_string(spec.shard.index) + "/" + std::to_string(spec.shard.count);
  return j;
}

Json equality_cases_json(const std::vector<EqualityCase>& cases) {
  Json out = Json::array();
  for (const EqualityCase& c : cases) {
    Json j;
    j["graph6"] = c.graph6;
    j["d"] = c.d;
    j["e"] = c.e;
    j["bound"] = bound_name(c.bound);
    j["tags"] = tag_list(c.tags);
    out.push_back(std::move(j));
  }
  return out;
}

Json verification_json(const CorpusSpec& spec, const VerificationReport& report,
                       bool include_timing) {
  Json j;
  j["corpus"] = corpus_json(spec);
  j["graphs_scanned"] = report.graphs_scanned;
  j["clean"] = report.clean();
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"graph6", v.graph6},
                          {"d", v.d},
                          {"e", v.e},
                          {"check", v.check},
                          {"observed", v.observed},
                          {"bound", v.bound_value}});
  }
  j["violations"] = std::move(violations);
  j["equality_cases"] = equality_cases_json(report.equality_cases);
  j["novel_extremals"] = report.novel_extremals;
  if (include_timing) j["runtime_ms"] = report.runtime_ms;
  return j;
}

}  // namespace cyclobound
