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

#include "cyclobound/families.h"

#include <vector>

namespace cyclobound::families {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph complete_bipartite(int l, int m) {
  std::vector<Edge> e;
  for (int u = 0; u < l; ++u)
    for (int v = l; v < l + m; ++v) e.push_back({u, v});
  return Graph(l + m, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});           // outer 5-cycle
    e.push_back({i, i + 5});                 // spokes
    e.push_back({5 + i, 5 + (i + 2) % 5});   // inner pentagram
  }
  return Graph(10, e);
}

Graph bowtie() {
  const Edge e[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  return Graph(5, e);
}

Graph clique_plus_vertex(int d, int k) {
  if (k < 0 || k > d - 1) throw std::invalid_argument("k out of range");
  std::vector<Edge> e;
  for (int u = 0; u < d - 1; ++u)
    for (int v = u + 1; v < d - 1; ++v) e.push_back({u, v});
  for (int u = 0; u < k; ++u) e.push_back({u, d - 1});
  return Graph(d, e);
}

}  // namespace cyclobound::families
