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

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "cyclobound/canonical.h"
#include "cyclobound/families.h"
#include "cyclobound/report_json.h"

namespace cyclobound {
namespace {

CorpusSpec corpus(int max_n) {
  CorpusSpec s;
  s.max_n = max_n;
  return s;
}

std::string as_json(const CorpusSpec& spec, const VerificationReport& r) {
  return verification_json(spec, r, /*include_timing=*/false).dump();
}

TEST(Verify, SmallCorpusIsClean) {
  const VerificationReport r = verify_corpus(corpus(7));
  EXPECT_EQ(r.graphs_scanned, 996);
  EXPECT_TRUE(r.clean()) << r.violations.front().check << " on "
                         << r.violations.front().graph6;
  EXPECT_TRUE(r.novel_extremals.empty());
}

TEST(Verify, OutputIndependentOfThreadCountAndMatchesSerial) {
  const CorpusSpec spec = corpus(7);
  const std::string serial = as_json(spec, verify_corpus_serial(spec));
  for (int threads : {1, 2, 4}) {
    VerifyOptions options;
    options.threads = threads;
    EXPECT_EQ(as_json(spec, verify_corpus(spec, options)), serial) << threads;
  }
}

TEST(Verify, EqualityCasesAreSorted) {
  const VerificationReport r = verify_corpus(corpus(6));
  ASSERT_FALSE(r.equality_cases.empty());
  EXPECT_TRUE(std::is_sorted(
      r.equality_cases.begin(), r.equality_cases.end(),
      [](const EqualityCase& a, const EqualityCase& b) {
        return std::tie(a.d, a.e, a.graph6) < std::tie(b.d, b.e, b.graph6);
      }));
}

TEST(Verify, FiltersRestrictTheScan) {
  CorpusSpec spec = corpus(7);
  add_filter(spec.filter, "bipartite");
  const VerificationReport bip = verify_corpus(spec);
  spec.filter = {};
  add_filter(spec.filter, "non_bipartite");
  const VerificationReport odd = verify_corpus(spec);
  EXPECT_EQ(bip.graphs_scanned + odd.graphs_scanned, 996);
  for (const EqualityCase& c : bip.equality_cases) EXPECT_EQ(c.bound, BoundId::kBipartiteBinomial);
  for (const EqualityCase& c : odd.equality_cases) EXPECT_EQ(c.bound, BoundId::kOddCycleBinomial);
}

TEST(Verify, ShardsAddUp) {
  std::int64_t total = 0;
  for (int i = 0; i < 3; ++i) {
    CorpusSpec spec = corpus(7);
    spec.shard = Shard{i, 3};
    total += verify_corpus(spec).graphs_scanned;
  }
  EXPECT_EQ(total, 996);
}

TEST(InspectGraph, FilteredGraphIsNotScanned) {
  CorpusFilter f;
  add_filter(f, "bipartite");
  EXPECT_FALSE(inspect_graph(families::complete(3), f, {}).scanned);
  const GraphFindings k23 = inspect_graph(families::complete_bipartite(2, 3), f, {});
  EXPECT_TRUE(k23.scanned);
  EXPECT_TRUE(k23.violations.empty());
  ASSERT_EQ(k23.equality_cases.size(), 1U);
  EXPECT_FALSE(k23.novel);
}

TEST(InspectGraph, PetersenAndLargerGraphsAreClean) {
  for (const Graph& g : {families::petersen(), families::complete(12),
                         families::complete_bipartite(6, 7), families::cycle(20)}) {
    const GraphFindings f = inspect_graph(g, {}, {});
    EXPECT_TRUE(f.violations.empty()) << encode_graph6(g) << ": " << f.violations.front().check;
  }
}

TEST(FindEquality, BoundAUpToSixVertices) {
  const std::vector<EqualityCase> cases = find_equality(corpus(6), BoundId::kOddCycleBinomial);
  auto has = [&](const Graph& g) {
    const std::string s = encode_graph6(canonical_form(g));
    return std::any_of(cases.begin(), cases.end(),
                       [&](const EqualityCase& c) { return c.graph6 == s; });
  };
  for (const Graph& g : {families::complete(3), families::cycle(5), families::complete(4),
                         families::complete(5), families::complete(6)}) {
    EXPECT_TRUE(has(g)) << encode_graph6(g);
  }
  EXPECT_FALSE(has(families::bowtie()));
  for (const EqualityCase& c : cases) EXPECT_EQ(c.bound, BoundId::kOddCycleBinomial);
}

TEST(FindEquality, StrictBoundIsNeverAttained) {
  EXPECT_TRUE(find_equality(corpus(7), BoundId::kWithK4Strict).empty());
}

TEST(FindEquality, BipartiteWithMinDegreeTwoIsK2m) {
  CorpusSpec spec = corpus(8);
  add_filter(spec.filter, "bipartite,min_degree>=2");
  const std::vector<EqualityCase> cases = find_equality(spec, BoundId::kBipartiteBinomial);
  ASSERT_EQ(cases.size(), 5U);  // K_{2,2} .. K_{2,6}
  for (const EqualityCase& c : cases) {
    EXPECT_TRUE(is_k2m(parse_graph6(c.graph6))) << c.graph6;
  }
}

}  // namespace
}  // namespace cyclobound
