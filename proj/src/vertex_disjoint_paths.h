// Copyright 2026 The Authors.
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

#ifndef SPPOS_SRC_VERTEX_DISJOINT_PATHS_H_
#define SPPOS_SRC_VERTEX_DISJOINT_PATHS_H_

#include <span>
#include <vector>

namespace sppos::internal {

// Maximum number of pairwise vertex-disjoint paths in a directed graph from
// any vertex of `starts` to any vertex of `ends`. Every vertex, including
// endpoints, is used by at most one path.
int MaxVertexDisjointPaths(const std::vector<std::vector<int>>& out_edges,
                           std::span<const int> starts,
                           std::span<const int> ends);

}  // namespace sppos::internal

#endif  // SPPOS_SRC_VERTEX_DISJOINT_PATHS_H_
