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

#ifndef CYCLOBOUND_BOUNDS_H_
#define CYCLOBOUND_BOUNDS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "cyclobound/counts.h"
#include "cyclobound/graph.h"
#include "cyclobound/rational.h"

namespace cyclobound {

// The inequalities checked by evaluate_bounds. Short ids are what the CLI
// and JSON documents use.
enum class BoundId {
  kOddCycleBinomial,      // "a": c4 <= C(e-d+1, 2), non-bipartite
  kBipartiteBinomial,     // "b": c4 <= C(e-d+2, 2), bipartite
  kBipartiteEdgeProduct,  // "c": c4 <= e(e-d+1)/4, bipartite
  kOddNoK4Product,        // "d": c4 <= e(e-d)/4, non-bipartite, no K4
  kWithK4Strict,          // "e": c4 < e(e-d)/4 + 3 k4 / 2, k4 >= 1
  kSigma2Average,         // "f": sigma2 <= e (2e/(d-1) + d - 2), d >= 2
  kSigma2DegreeRange,     // "g": sigma2 <= 2e(Delta+delta) - d Delta delta
  kC4MinusK4,             // "c4_minus_k4": c4 - k4 <= C(e-d+1, 2), data only
};

inline constexpr std::array kAllBounds = {
    BoundId::kOddCycleBinomial,  BoundId::kBipartiteBinomial,
    BoundId::kBipartiteEdgeProduct, BoundId::kOddNoK4Product,
    BoundId::kWithK4Strict,      BoundId::kSigma2Average,
    BoundId::kSigma2DegreeRange, BoundId::kC4MinusK4,
};

std::string_view bound_name(BoundId id);
std::string_view bound_statement(BoundId id);
// Accepts the short ids "a".."g" and "c4_minus_k4".
std::optional<BoundId> parse_bound_id(std::string_view name);

struct BoundEntry {
  BoundId id{};
  bool applicable = false;
  bool strict = false;
  std::int64_t observed = 0;
  std::optional<Rational> bound;  // absent when not applicable
  std::optional<Rational> slack;  // bound - observed
  bool equality = false;

  // A non-strict bound fails on negative slack, a strict one on slack <= 0.
  bool violated() const {
    if (!applicable) return false;
    return strict ? slack->sign() <= 0 : slack->sign() < 0;
  }
};

// Structural classes of extremal graphs.
enum class Tag {
  kOddCycle,
  kK2mPlusPath,
  kBlocksK2mOddCycleBridges,
  kCompleteBipartiteK2D2,
  kUnicyclicOdd,
  kTree,
  kCompleteGraph,
  kCompleteBipartite,
};

using TagSet = std::set<Tag>;

std::string_view tag_name(Tag t);

struct BoundReport {
  std::vector<BoundEntry> entries;  // one per BoundId, in kAllBounds order
  TagSet tags;  // filled when bound a or b is attained

  const BoundEntry& at(BoundId id) const;
  bool any_violation() const;
};

// Throws std::invalid_argument on disconnected input.
BoundReport evaluate_bounds(const Graph& g, const InvariantSet& inv);
BoundReport evaluate_bounds(const Graph& g);

// (2e - alpha d)^2 / 8 * (1 - 1/beta) + e (d - alpha^2 + 1) / 4
//   + (alpha - 2) / 4 * sigma2.
// Requires a connected graph, delta >= 2, 2 <= alpha <= delta and
// beta >= omega; throws std::invalid_argument naming the violated condition.
Rational omegadelta_bound(const Graph& g, const InvariantSet& inv, int alpha,
                          int beta);
Rational omegadelta_bound(const Graph& g, int alpha, int beta);

bool is_complete(const Graph& g);
// Side sizes (smaller first) when g is connected complete bipartite.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);
// K_{2,m} with m >= 2.
bool is_k2m(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_k2m_plus_path(const Graph& g);
bool has_k2m_odd_cycle_bridge_blocks(const Graph& g);

// Every tag whose structural description g satisfies.
TagSet structural_tags(const Graph& g);

// Tags of an extremal graph. Throws std::invalid_argument unless the report
// shows equality in bound a or b.
TagSet classify_equality(const Graph& g, const BoundReport& report);

// True when tags contain one of the three odd-cycle extremal classes.
bool in_odd_extremal_classes(const TagSet& tags);

struct SufficientConditions {
  bool balanced_degrees = false;  // delta >= 4 and Delta <= (3d+1)/4
  bool min_degree_12 = false;     // delta >= 12
  bool mid_range = false;         // 5 <= delta <= Delta <= d-2, 10 <= d <= 24
  bool dominating_vertex = false;   // Delta = d-1
  bool sparse_min_degree = false;   // delta >= 3 and e < delta (d - delta)
  // e >= ((delta+2)d - (3 delta + 1))/2 + 1/(2(delta-1)); absent at delta 1.
  std::optional<bool> dense_enough;
  bool min_degree_at_most_3 = false;  // delta <= 3
};

SufficientConditions sufficient_conditions(const Graph& g,
                                           const InvariantSet& inv);

enum class CompositionCondition {
  kNone,
  kBridgesOnly,               // all blocks but one are bridges
  kBipartiteOddCycleBridges,  // one bipartite block, one odd cycle, bridges
};

std::string_view composition_condition_name(CompositionCondition c);

struct BlockCompositionResult {
  std::int64_t observed = 0;          // c4(G)
  std::int64_t block_sum = 0;         // sum of c4 over blocks
  std::int64_t composed_bound = 0;    // C(e - d + 1 + epsilon, 2)
  bool blocks_within_bound = true;
  bool all_blocks_equal = true;
  bool equality = false;
  CompositionCondition condition = CompositionCondition::kNone;

  bool additive() const { return observed == block_sum; }
  // Equality holds exactly when every block is tight and a condition holds.
  bool consistent() const {
    return equality ==
           (all_blocks_equal && condition != CompositionCondition::kNone);
  }
  bool ok() const { return additive() && blocks_within_bound && consistent(); }
};

// Throws std::invalid_argument for disconnected input or a single block.
BlockCompositionResult block_composition_check(const Graph& g,
                                               const BlockDecomposition& bd);

}  // namespace cyclobound

#endif  // CYCLOBOUND_BOUNDS_H_
