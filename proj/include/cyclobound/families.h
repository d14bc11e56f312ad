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

#ifndef CYCLOBOUND_FAMILIES_H_
#define CYCLOBOUND_FAMILIES_H_

#include "cyclobound/graph.h"

// Named graphs used throughout tests and the acceptance suite.
namespace cyclobound::families {

Graph complete(int n);
// Sides {0..l-1} and {l..l+m-1}.
Graph complete_bipartite(int l, int m);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();
// Two triangles sharing vertex 0.
Graph bowtie();
// K_{d-1} on 0..d-2 plus vertex d-1 joined to 0..k-1.
Graph clique_plus_vertex(int d, int k);

}  // namespace cyclobound::families

#endif  // CYCLOBOUND_FAMILIES_H_
