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

#include "cyclobound/canonical.h"

#include <algorithm>
#include <array>
#include <numeric>

namespace cyclobound {
namespace {

// Ordered partition of the vertex set; each cell is a vertex mask.
using Partition = std::vector<VertexSet>;

constexpr std::size_t kMaxStoredAutomorphisms = 256;

// Splits every cell by the number of neighbours each vertex has in every
// current cell, until nothing splits. Sub-cells are ordered by that count
// vector, which keeps the result independent of vertex labels.
void refine(const Graph& g, Partition& cells) {
  std::array<std::array<std::uint8_t, Graph::kMaxOrder>, Graph::kMaxOrder>
      counts;
  while (true) {
    const std::size_t k = cells.size();
    for_each_vertex(g.vertices(), [&](int v) {
      for (std::size_t c = 0; c < k; ++c) {
        counts[v][c] = static_cast<std::uint8_t>(popcount(g.row(v) & cells[c]));
      }
    });
    auto less = [&](int a, int b) {
      return std::lexicographical_compare(counts[a].begin(),
                                          counts[a].begin() + k,
                                          counts[b].begin(),
                                          counts[b].begin() + k);
    };
    auto same = [&](int a, int b) {
      return std::equal(counts[a].begin(), counts[a].begin() + k,
                        counts[b].begin());
    };
    Partition next;
    next.reserve(g.order());
    for (VertexSet cell : cells) {
      if (popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<int> members;
      for_each_vertex(cell, [&](int v) { members.push_back(v); });
      std::stable_sort(members.begin(), members.end(), less);
      VertexSet part = bit(members[0]);
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (same(members[i - 1], members[i])) {
          part |= bit(members[i]);
        } else {
          next.push_back(part);
          part = bit(members[i]);
        }
      }
      next.push_back(part);
    }
    const bool stable = next.size() == cells.size();
    cells.swap(next);
    if (stable) return;
  }
}

struct DisjointSets {
  std::array<int, Graph::kMaxOrder> parent{};

  explicit DisjointSets(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    Partition cells{g_.vertices()};
    refine(g_, cells);
    std::vector<int> prefix;
    descend(cells, prefix);
    CanonicalLabeling out{best_position_, relabel(g_, best_position_)};
    return out;
  }

 private:
  void descend(const Partition& cells, std::vector<int>& prefix) {
    const auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) {
      return popcount(c) > 1;
    });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for_each_vertex(*target, [&](int w) {
      if (pruned(prefix, tried, w)) return;
      tried.push_back(w);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + at);
      child.push_back(bit(w));
      child.push_back(cells[at] & ~bit(w));
      child.insert(child.end(), cells.begin() + at + 1, cells.end());
      refine(g_, child);
      prefix.push_back(w);
      descend(child, prefix);
      prefix.pop_back();
    });
  }

  // True when w shares an orbit with an already explored sibling under the
  // automorphisms found so far that fix every vertex of the prefix.
  bool pruned(const std::vector<int>& prefix, const std::vector<int>& tried,
              int w) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    DisjointSets sets(g_.order());
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g_.order(); ++v) sets.unite(v, gamma[v]);
    }
    const int root = sets.find(w);
    return std::any_of(tried.begin(), tried.end(),
                       [&](int t) { return sets.find(t) == root; });
  }

  void leaf(const Partition& cells) {
    std::vector<int> position(g_.order());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      position[std::countr_zero(cells[i])] = static_cast<int>(i);
    }
    std::vector<VertexSet> key = adjacency_key(relabel(g_, position));
    if (!have_best_ || key > best_key_) {
      have_best_ = true;
      best_key_ = std::move(key);
      best_position_ = std::move(position);
      return;
    }
    if (key == best_key_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      // Both labellings give the same graph, so mapping each vertex to the
      // best leaf's vertex at the same position is an automorphism.
      std::vector<int> best_vertex(g_.order());
      for (int v = 0; v < g_.order(); ++v) best_vertex[best_position_[v]] = v;
      std::vector<int> gamma(g_.order());
      for (int v = 0; v < g_.order(); ++v) gamma[v] = best_vertex[position[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<VertexSet> best_key_;
  std::vector<int> best_position_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<VertexSet> adjacency_key(const Graph& g) {
  std::vector<VertexSet> key(g.order());
  for (int v = 0; v < g.order(); ++v) key[v] = g.row(v);
  return key;
}

Graph relabel(const Graph& g, const std::vector<int>& position) {
  std::vector<VertexSet> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for_each_vertex(g.row(v), [&](int w) { rows[position[v]] |= bit(position[w]); });
  }
  return Graph::from_rows(g.order(), rows);
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

}  // namespace cyclobound
