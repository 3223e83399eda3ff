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

#include "vertex_disjoint_paths.h"

namespace sppos::internal {
namespace {

// Unit-capacity residual graph with augmenting-path search. Flows here are
// bounded by k, so plain DFS augmentation is enough.
class UnitFlow {
 public:
  explicit UnitFlow(int num_nodes) : adjacency_(num_nodes) {}

  void AddArc(int from, int to) {
    adjacency_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    adjacency_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int MaxFlow(int source, int sink) {
    int flow = 0;
    while (true) {
      visited_.assign(adjacency_.size(), false);
      if (!Augment(source, sink)) break;
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int capacity;
  };

  bool Augment(int node, int sink) {
    if (node == sink) return true;
    visited_[node] = true;
    for (int id : adjacency_[node]) {
      Arc& arc = arcs_[id];
      if (arc.capacity == 0 || visited_[arc.to]) continue;
      if (Augment(arc.to, sink)) {
        arc.capacity -= 1;
        arcs_[id ^ 1].capacity += 1;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<Arc> arcs_;
  std::vector<bool> visited_;
};

}  // namespace

int MaxVertexDisjointPaths(const std::vector<std::vector<int>>& out_edges,
                           std::span<const int> starts,
                           std::span<const int> ends) {
  const int num_vertices = static_cast<int>(out_edges.size());
  // Vertex v splits into 2v (in) and 2v+1 (out) joined by a unit arc.
  const int source = 2 * num_vertices;
  const int sink = source + 1;
  UnitFlow flow(sink + 1);
  for (int v = 0; v < num_vertices; ++v) {
    flow.AddArc(2 * v, 2 * v + 1);
    for (int w : out_edges[v]) flow.AddArc(2 * v + 1, 2 * w);
  }
  for (int v : starts) flow.AddArc(source, 2 * v);
  for (int v : ends) flow.AddArc(2 * v + 1, sink);
  return flow.MaxFlow(source, sink);
}

}  // namespace sppos::internal
