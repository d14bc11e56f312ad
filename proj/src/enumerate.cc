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

#include "cyclobound/enumerate.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>

#include "cyclobound/canonical.h"

namespace cyclobound {
namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string("invalid ") + what + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

// Vertices whose removal leaves the graph connected.
VertexSet non_cut_vertices(const Graph& g) {
  if (g.order() == 1) return g.vertices();
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet rest = g.vertices() & ~bit(v);
    const int start = std::countr_zero(rest);
    if (reachable(g, start, rest) == rest) out |= bit(v);
  }
  return out;
}

class Walker {
 public:
  Walker(int min_n, int max_n, Shard shard, const GraphVisitor& visit)
      : min_n_(min_n), max_n_(max_n), shard_(shard), visit_(visit) {}

  void run() { descend(Graph(1), /*owned=*/false); }

 private:
  // `owned` is set once an ancestor at the shard depth belongs to us.
  void descend(const Graph& g, bool owned) {
    const int k = g.order();
    bool mine = owned;
    if (k <= kShardDepth) {
      const int idx = level_index_[k]++;
      mine = idx % shard_.count == shard_.index;
      if (k == kShardDepth && !mine) return;
    }
    if (mine && k >= min_n_) visit_(g);
    if (k == max_n_) return;
    for (const Graph& child : canonical_children(g)) {
      descend(child, k >= kShardDepth ? mine : false);
    }
  }

  int min_n_, max_n_;
  Shard shard_;
  const GraphVisitor& visit_;
  std::array<int, kShardDepth + 1> level_index_{};
};

}  // namespace

Shard parse_shard(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("shard must look like i/k");
  }
  Shard s{parse_int(text.substr(0, slash), "shard index"),
          parse_int(text.substr(slash + 1), "shard count")};
  if (s.count < 1 || s.index < 0 || s.index >= s.count) {
    throw std::invalid_argument("shard needs 0 <= i < k");
  }
  return s;
}

bool CorpusFilter::accepts(const InvariantSet& inv) const {
  if (bipartite && !inv.bipartite) return false;
  if (non_bipartite && inv.bipartite) return false;
  if (no_k4 && inv.k4 > 0) return false;
  return inv.min_degree >= min_degree;
}

void add_filter(CorpusFilter& filter, std::string_view text) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    constexpr std::string_view kMinDegree = "min_degree>=";
    if (token == "connected") {
      // Every generated graph is connected.
    } else if (token == "bipartite") {
      filter.bipartite = true;
    } else if (token == "non_bipartite") {
      filter.non_bipartite = true;
    } else if (token == "no_K4") {
      filter.no_k4 = true;
    } else if (token.starts_with(kMinDegree)) {
      filter.min_degree = std::max(
          filter.min_degree,
          parse_int(token.substr(kMinDegree.size()), "minimum degree"));
    } else {
      throw std::invalid_argument("unknown filter '" + std::string(token) + "'");
    }
  }
}

void validate(const CorpusSpec& spec) {
  if (spec.min_n < 1 || spec.max_n > kMaxEnumerationOrder ||
      spec.min_n > spec.max_n) {
    throw std::invalid_argument("vertex range must lie within 1.." +
                                std::to_string(kMaxEnumerationOrder) +
                                " (got " + std::to_string(spec.min_n) + ".." +
                                std::to_string(spec.max_n) + ")");
  }
  if (spec.shard.count < 1 || spec.shard.index < 0 ||
      spec.shard.index >= spec.shard.count) {
    throw std::invalid_argument("shard needs 0 <= i < k");
  }
}

std::vector<Graph> canonical_children(const Graph& parent) {
  const int n = parent.order() + 1;
  if (n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration is limited to 10 vertices");
  }
  const int added = n - 1;
  std::vector<VertexSet> rows(n);
  std::map<std::vector<VertexSet>, Graph> found;
  for (VertexSet mask = 1; mask < bit(added); ++mask) {
    for (int v = 0; v < added; ++v) rows[v] = parent.row(v) | ((mask >> v & 1U) << added);
    rows[added] = mask;
    const Graph child = Graph::from_rows(n, rows);

    // The new vertex is never a cut vertex since the parent is connected.
    const VertexSet candidates_all = non_cut_vertices(child);
    int low = n;
    for_each_vertex(candidates_all,
                    [&](int v) { low = std::min(low, child.degree(v)); });
    if (child.degree(added) != low) continue;
    VertexSet candidates = 0;
    for_each_vertex(candidates_all, [&](int v) {
      if (child.degree(v) == low) candidates |= bit(v);
    });

    CanonicalLabeling lab = canonical_labeling(child);
    int chosen = -1;
    for_each_vertex(candidates, [&](int v) {
      if (chosen < 0 || lab.position[v] > lab.position[chosen]) chosen = v;
    });
    if (chosen != added &&
        !(canonical_form(delete_vertex(child, chosen)) == parent)) {
      continue;
    }
    found.emplace(adjacency_key(lab.graph), std::move(lab.graph));
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

void for_each_connected_graph(int min_n, int max_n, Shard shard,
                              const GraphVisitor& visit) {
  validate(CorpusSpec{min_n, max_n, {}, shard});
  Walker(min_n, max_n, shard, visit).run();
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, n, Shard{}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cyclobound
