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

#include "sppos/le_diagram.h"

#include <algorithm>
#include <sstream>

#include "sppos/errors.h"
#include "vertex_disjoint_paths.h"

namespace sppos {

LeDiagram::LeDiagram(int k, int n, std::vector<int> shape,
                     std::vector<std::vector<bool>> filling)
    : k_(k), n_(n), shape_(std::move(shape)), filling_(std::move(filling)) {
  CheckGroundSize(n_);
  if (k_ < 0 || k_ > n_) {
    throw InvalidInputError("Le-diagram needs 0 <= k <= n");
  }
  if (static_cast<int>(shape_.size()) > k_) {
    throw InvalidInputError("shape has more than k = " + std::to_string(k_) +
                            " parts");
  }
  if (filling_.size() != shape_.size() &&
      static_cast<int>(filling_.size()) != k_) {
    throw InvalidInputError("filling needs one row per shape part");
  }
  shape_.resize(k_, 0);
  filling_.resize(k_);
  for (int r = 0; r < k_; ++r) {
    if (shape_[r] < 0 || shape_[r] > width()) {
      throw InvalidInputError("shape part " + std::to_string(shape_[r]) +
                              " outside [0, n-k]");
    }
    if (r > 0 && shape_[r] > shape_[r - 1]) {
      throw InvalidInputError("shape is not weakly decreasing");
    }
    if (static_cast<int>(filling_[r].size()) != shape_[r]) {
      throw InvalidInputError("filling row " + std::to_string(r + 1) +
                              " has " + std::to_string(filling_[r].size()) +
                              " cells, shape says " +
                              std::to_string(shape_[r]));
    }
  }
}

LeDiagram LeDiagram::Full(int k, int n) {
  if (k < 0 || k > n) throw InvalidInputError("Le-diagram needs 0 <= k <= n");
  return LeDiagram(k, n, std::vector<int>(k, n - k),
                   std::vector<std::vector<bool>>(
                       k, std::vector<bool>(n - k, true)));
}

int LeDiagram::ColumnLength(int col) const {
  int length = 0;
  while (length < k_ && shape_[length] >= col) ++length;
  return length;
}

bool LeDiagram::HasCell(Cell c) const {
  return c.row >= 1 && c.row <= k_ && c.col >= 1 && c.col <= shape_[c.row - 1];
}

bool LeDiagram::HasBullet(Cell c) const {
  return HasCell(c) && filling_[c.row - 1][c.col - 1];
}

int LeDiagram::BulletCount() const {
  int count = 0;
  for (const auto& row : filling_) {
    count += static_cast<int>(std::count(row.begin(), row.end(), true));
  }
  return count;
}

LeDiagram LeDiagram::WithBullet(Cell c, bool bullet) const {
  if (!HasCell(c)) throw InvalidInputError("cell outside the shape");
  LeDiagram out = *this;
  out.filling_[c.row - 1][c.col - 1] = bullet;
  return out;
}

std::optional<std::string> FindLeViolation(const LeDiagram& d) {
  for (int r = 2; r <= d.k(); ++r) {
    for (int c = 2; c <= d.RowLength(r); ++c) {
      if (d.HasBullet({r, c})) continue;
      for (int above = 1; above < r; ++above) {
        if (!d.HasBullet({above, c})) continue;
        for (int left = 1; left < c; ++left) {
          if (d.HasBullet({r, left})) {
            std::ostringstream os;
            os << "Le condition fails at (" << r << "," << c
               << "): bullets at (" << above << "," << c << ") and (" << r
               << "," << left << ")";
            return os.str();
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool IsLe(const LeDiagram& d) { return !FindLeViolation(d).has_value(); }

BoundaryLabels ComputeBoundaryLabels(const LeDiagram& d) {
  BoundaryLabels out;
  out.source_of_row.assign(d.k(), 0);
  out.sink_of_col.assign(d.width(), 0);
  out.position_of_label.assign(d.n(), 0);
  Mask sources = 0;
  Mask sinks = 0;
  int label = 0;
  int x = d.width();
  auto walk_left_to = [&](int target) {
    for (; x > target; --x) {
      ++label;
      sinks |= Bit(label);
      out.sink_of_col[x - 1] = label;
      out.position_of_label[label - 1] = x;
    }
  };
  for (int r = 1; r <= d.k(); ++r) {
    walk_left_to(d.RowLength(r));
    ++label;
    sources |= Bit(label);
    out.source_of_row[r - 1] = label;
    out.position_of_label[label - 1] = r;
  }
  walk_left_to(0);
  out.sources = Subset::FromMask(d.n(), sources);
  out.sinks = Subset::FromMask(d.n(), sinks);
  return out;
}

PlanarNetwork BuildNetwork(const LeDiagram& d) {
  if (auto violation = FindLeViolation(d)) throw PreconditionError(*violation);
  const BoundaryLabels labels = ComputeBoundaryLabels(d);
  PlanarNetwork net;
  net.n = d.n();
  net.sources = labels.sources;
  net.sinks = labels.sinks;
  std::vector<std::vector<int>> vertex_of(d.k(),
                                          std::vector<int>(d.width(), -1));
  for (int r = 1; r <= d.k(); ++r) {
    for (int c = 1; c <= d.RowLength(r); ++c) {
      if (!d.HasBullet({r, c})) continue;
      vertex_of[r - 1][c - 1] = d.n() + static_cast<int>(net.bullets.size());
      net.bullets.push_back({r, c});
    }
  }
  net.out_edges.assign(d.n() + net.bullets.size(), {});
  for (int r = 1; r <= d.k(); ++r) {
    int from = PlanarNetwork::LabelVertex(labels.source_of_row[r - 1]);
    for (int c = d.RowLength(r); c >= 1; --c) {
      const int v = vertex_of[r - 1][c - 1];
      if (v < 0) continue;
      net.out_edges[from].push_back(v);
      from = v;
    }
  }
  for (int c = 1; c <= d.width(); ++c) {
    int from = -1;
    for (int r = 1; r <= d.ColumnLength(c); ++r) {
      const int v = vertex_of[r - 1][c - 1];
      if (v < 0) continue;
      if (from >= 0) net.out_edges[from].push_back(v);
      from = v;
    }
    if (from >= 0) {
      net.out_edges[from].push_back(
          PlanarNetwork::LabelVertex(labels.sink_of_col[c - 1]));
    }
  }
  return net;
}

bool IsLeftDownOriented(const LeDiagram& d, const PlanarNetwork& network) {
  const BoundaryLabels labels = ComputeBoundaryLabels(d);
  const int n = network.n;
  for (int u = 0; u < network.num_vertices(); ++u) {
    for (int v : network.out_edges[u]) {
      if (v < n) {
        // Only a bullet may feed a sink, from inside that sink's column.
        if (u < n || !network.sinks.contains(v + 1)) return false;
        if (network.bullets[u - n].col != labels.position_of_label[v])
          return false;
        continue;
      }
      const Cell to = network.bullets[v - n];
      if (u < n) {
        // Source entering its own row.
        if (!network.sources.contains(u + 1)) return false;
        if (to.row != labels.position_of_label[u]) return false;
        continue;
      }
      const Cell from = network.bullets[u - n];
      const bool leftward = from.row == to.row && to.col < from.col;
      const bool downward = from.col == to.col && to.row > from.row;
      if (!leftward && !downward) return false;
    }
  }
  return true;
}

bool RealizesByDisjointPaths(const PlanarNetwork& network,
                             const Subset& target) {
  if (target.n() != network.n || target.size() != network.sources.size()) {
    return false;
  }
  std::vector<int> starts;
  std::vector<int> ends;
  for (int s : network.sources.members()) {
    if (!target.contains(s)) starts.push_back(PlanarNetwork::LabelVertex(s));
  }
  for (int t : network.sinks.members()) {
    if (target.contains(t)) ends.push_back(PlanarNetwork::LabelVertex(t));
  }
  return internal::MaxVertexDisjointPaths(network.out_edges, starts, ends) ==
         static_cast<int>(starts.size());
}

Matroid RealizableSets(const LeDiagram& d) {
  const PlanarNetwork network = BuildNetwork(d);
  std::vector<Mask> bases;
  for (const Subset& candidate : AllKSubsets(d.n(), d.k())) {
    if (RealizesByDisjointPaths(network, candidate)) {
      bases.push_back(candidate.mask());
    }
  }
  return Matroid(d.n(), std::move(bases));
}

std::vector<Cell> CellNumbering(int k, int n) {
  if (k < 2 || k > n - 1) {
    throw DomainError("cell numbering needs 2 <= k <= n-1");
  }
  const int width = n - k;
  std::vector<Cell> cells(n);
  cells[0] = {k, width};
  for (int label = 2; label <= width + 1; ++label) {
    cells[label - 1] = {1, width + 2 - label};
  }
  for (int label = width + 1; label <= n; ++label) {
    cells[label - 1] = {label - width, 1};
  }
  return cells;
}

LeDiagram BuildSparsePavingDiagram(const Subset& a, int k) {
  const int n = a.n();
  const std::vector<Cell> numbering = CellNumbering(k, n);
  std::vector<int> shape(k, n - k);
  std::vector<std::vector<bool>> filling(k, std::vector<bool>(n - k, true));
  for (int i : a.members()) {
    const Cell c = numbering[i - 1];
    filling[c.row - 1][c.col - 1] = false;
  }
  if (a.contains(1)) {
    shape[k - 1] -= 1;
    filling[k - 1].pop_back();
  }
  return LeDiagram(k, n, std::move(shape), std::move(filling));
}

std::string RenderAscii(const LeDiagram& d) {
  const BoundaryLabels labels = ComputeBoundaryLabels(d);
  const int field = static_cast<int>(std::to_string(d.n()).size());
  auto emit = [field](const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) line += ' ';
      line += std::string(field - fields[i].size(), ' ') + fields[i];
    }
    line.erase(line.find_last_not_of(' ') + 1);
    return line + '\n';
  };
  std::string out;
  for (int r = 1; r <= d.k(); ++r) {
    std::vector<std::string> fields;
    for (int c = 1; c <= d.width(); ++c) {
      if (!d.HasCell({r, c})) {
        fields.emplace_back("");
      } else {
        fields.emplace_back(d.HasBullet({r, c}) ? "*" : ".");
      }
    }
    fields.push_back(std::to_string(labels.source_of_row[r - 1]));
    out += emit(fields);
  }
  std::vector<std::string> bottom;
  for (int c = 1; c <= d.width(); ++c) {
    bottom.push_back(std::to_string(labels.sink_of_col[c - 1]));
  }
  out += emit(bottom);
  return out;
}

}  // namespace sppos
