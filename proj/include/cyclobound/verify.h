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

#ifndef CYCLOBOUND_VERIFY_H_
#define CYCLOBOUND_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cyclobound/bounds.h"
#include "cyclobound/counts.h"
#include "cyclobound/enumerate.h"
#include "cyclobound/graph.h"
#include "cyclobound/motzkin_straus.h"

namespace cyclobound {

// A failed check on one graph. `check` is a bound id ("a".."g",
// "c4_minus_k4") or the name of a structural check, e.g. "f1_identity".
struct Violation {
  std::string graph6;
  int d = 0;
  int e = 0;
  std::string check;
  std::string observed;
  std::string bound_value;
};

struct EqualityCase {
  std::string graph6;
  int d = 0;
  int e = 0;
  BoundId bound{};
  TagSet tags;
};

struct VerificationReport {
  std::int64_t graphs_scanned = 0;
  std::vector<Violation> violations;
  std::vector<EqualityCase> equality_cases;  // bounds a and b
  std::vector<std::string> novel_extremals;  // attained, no tag, delta >= 2
  std::int64_t runtime_ms = 0;

  bool clean() const { return violations.empty(); }
};

struct VerifyOptions {
  int threads = 0;  // 0: OpenMP default
  bool motzkin_straus = true;
  int ms_max_iters = kDefaultMaxIterations;
  std::int64_t cycle_cap = kDefaultCycleCap;
};

// Everything verify_corpus learns about one graph.
struct GraphFindings {
  bool scanned = false;  // passed the filter
  std::vector<Violation> violations;
  std::vector<EqualityCase> equality_cases;
  bool novel = false;
};

// Runs every check on g. Filtered-out graphs come back with scanned unset.
GraphFindings inspect_graph(const Graph& g, const CorpusFilter& filter,
                            const VerifyOptions& options);

// The checks: every applicable bound; per-edge cycle sums and the pointwise
// per-edge bound; the polytope edge-count identity, vertex-edge floor and
// simplicity coupling; the cycle census range; the parametric bound over all
// admissible (alpha, beta) with beta in omega..d, its monotonicity in beta
// and its equality class; the Motzkin-Straus certificate; block composition
// for graphs with two or more blocks; and both equality classifications.
//
// Graphs are generated by one producer and inspected in batches by an
// OpenMP worker team. The result does not depend on the thread count.
VerificationReport verify_corpus(const CorpusSpec& spec,
                                 const VerifyOptions& options = {});

// Single-threaded reference with the same output.
VerificationReport verify_corpus_serial(const CorpusSpec& spec,
                                        const VerifyOptions& options = {});

// Graphs attaining the given bound, with their structural tags, sorted by
// (d, e, graph6). Strict bounds are never attained.
std::vector<EqualityCase> find_equality(const CorpusSpec& spec, BoundId bound,
                                        int threads = 0);

}  // namespace cyclobound

#endif  // CYCLOBOUND_VERIFY_H_
