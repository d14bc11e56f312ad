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

#ifndef CYCLOBOUND_REPORT_JSON_H_
#define CYCLOBOUND_REPORT_JSON_H_

#include <optional>
#include <vector>

#include "cyclobound/bounds.h"
#include "cyclobound/counts.h"
#include "cyclobound/enumerate.h"
#include "cyclobound/graph.h"
#include "cyclobound/motzkin_straus.h"
#include "cyclobound/polytope.h"
#include "cyclobound/verify.h"
#include "json.hpp"

namespace cyclobound {

// Key order is part of the output format, so documents use ordered_json.
// Rationals are written as "num/den" strings.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json rational_json(const std::optional<Rational>& r);  // null when absent

Json invariants_json(const InvariantSet& inv);
Json bound_entry_json(const BoundEntry& entry, const TagSet& tags);
Json bounds_json(const BoundReport& report);
Json polytope_json(const PolytopeFacts& facts);
Json blocks_json(const Graph& g, const BlockDecomposition& bd);
Json sufficient_conditions_json(const SufficientConditions& sc);
Json replicator_json(const Graph& g, const ReplicatorResult& result, int omega);

struct AnalysisOptions {
  bool allow_disconnected = false;
  bool motzkin_straus = false;
  int ms_max_iters = kDefaultMaxIterations;
  double ms_tol = kDefaultStepTolerance;
  std::int64_t cycle_cap = kDefaultCycleCap;
};

// Keys: graph6, invariants, bounds, polytope, blocks, sufficient_conditions
// and, when requested, ms. Sections that need a connected graph are null for
// disconnected input. Throws std::invalid_argument on disconnected input
// unless allow_disconnected is set.
Json analysis_document(const Graph& g, const AnalysisOptions& options);

Json corpus_json(const CorpusSpec& spec);
Json equality_cases_json(const std::vector<EqualityCase>& cases);
// runtime_ms is written only when include_timing is set, so that repeated
// runs produce identical bytes.
Json verification_json(const CorpusSpec& spec, const VerificationReport& report,
                       bool include_timing);

}  // namespace cyclobound

#endif  // CYCLOBOUND_REPORT_JSON_H_
