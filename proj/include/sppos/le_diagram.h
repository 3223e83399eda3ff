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

#ifndef SPPOS_LE_DIAGRAM_H_
#define SPPOS_LE_DIAGRAM_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sppos/matroid.h"
#include "sppos/subset.h"

namespace sppos {

// Row 1 is the top row and column 1 the left column.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A Young diagram inside the k x (n-k) box, left justified with the largest
// part on top, with each cell either holding a bullet or empty. The Le
// condition itself is checked by IsLe, not by construction.
class LeDiagram {
 public:
  // `shape` has at most k weakly decreasing parts, each at most n-k; missing
  // parts are zero. `filling[r-1]` has one entry per cell of row r. Throws
  // InvalidInputError on a malformed shape or filling.
  LeDiagram(int k, int n, std::vector<int> shape,
            std::vector<std::vector<bool>> filling);

  // The k x (n-k) rectangle with a bullet in every cell.
  static LeDiagram Full(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }
  // Exactly k parts, trailing zeros included.
  const std::vector<int>& shape() const { return shape_; }
  int RowLength(int row) const { return shape_[row - 1]; }
  int ColumnLength(int col) const;

  bool HasCell(Cell c) const;
  bool HasBullet(Cell c) const;
  int BulletCount() const;

  LeDiagram WithBullet(Cell c, bool bullet) const;

  friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

 private:
  int k_;
  int n_;
  std::vector<int> shape_;
  std::vector<std::vector<bool>> filling_;
};

// Describes the first quadruple breaking the Le condition (bullets at (i,j')
// and (i',j) with i < i', j < j' but none at (i',j')), or nullopt.
std::optional<std::string> FindLeViolation(const LeDiagram& d);
bool IsLe(const LeDiagram& d);

// Labels 1..n along the boundary path from the box's top-right corner to its
// bottom-left corner. Each row has one vertical step (a source) and each
// column one horizontal step (a sink).
struct BoundaryLabels {
  Subset sources;
  Subset sinks;
  // source_of_row[r-1] labels the source of row r, sink_of_col[c-1] the sink of
  // column c.
  std::vector<int> source_of_row;
  std::vector<int> sink_of_col;
  // For label l: the row of a source or the column of a sink.
  std::vector<int> position_of_label;
};

BoundaryLabels ComputeBoundaryLabels(const LeDiagram& d);

// Directed network N_D. Vertices 0..n-1 are the boundary labels 1..n; vertex
// n + b is bullets[b]. Edges run leftward inside a row (from the row's source
// or a bullet to the nearest bullet on its left) and downward inside a column
// (from a bullet to the nearest bullet below, or to the column's sink).
struct PlanarNetwork {
  int n = 0;
  Subset sources;
  Subset sinks;
  std::vector<Cell> bullets;
  std::vector<std::vector<int>> out_edges;

  int num_vertices() const { return static_cast<int>(out_edges.size()); }
  static int LabelVertex(int label) { return label - 1; }
};

// Throws PreconditionError if `d` violates the Le condition.
PlanarNetwork BuildNetwork(const LeDiagram& d);

// True iff every edge points strictly left within a row or strictly down
// within a column, which makes the network acyclic.
bool IsLeftDownOriented(const LeDiagram& d, const PlanarNetwork& network);

// Whether some vertex-disjoint path system, one path per source, realizes
// `target`: sources in target stay put, the other sources reach exactly the
// sinks in target.
bool RealizesByDisjointPaths(const PlanarNetwork& network,
                             const Subset& target);

// The positroid of `d`: its bases are the k-subsets realized by disjoint path
// systems. Throws PreconditionError if `d` violates the Le condition.
Matroid RealizableSets(const LeDiagram& d);

// Boundary cell numbering of the k x (n-k) box: 1 at the bottom-right cell,
// 2..n-k+1 along the top row from right to left, n-k+1..n down the left
// column. Entry l-1 is the cell numbered l. Throws DomainError unless
// 2 <= k <= n-1.
std::vector<Cell> CellNumbering(int k, int n);

// Starts from the full rectangle and empties the cell numbered i for each
// i in `a`; for 1 in `a` the bottom-right cell is removed from the shape.
// Throws DomainError unless 2 <= k <= n-1.
LeDiagram BuildSparsePavingDiagram(const Subset& a, int k);

// One line per row: cells as '*' or '.', blank outside the shape, the row's
// source label in a right margin, then one line of sink labels under their
// columns. Fields are right aligned to the width of n and separated by one
// space; trailing blanks are trimmed.
std::string RenderAscii(const LeDiagram& d);

}  // namespace sppos

#endif  // SPPOS_LE_DIAGRAM_H_
