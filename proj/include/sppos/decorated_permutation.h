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

#ifndef SPPOS_DECORATED_PERMUTATION_H_
#define SPPOS_DECORATED_PERMUTATION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sppos/necklace.h"

namespace sppos {

// A permutation of [n] in one-line notation together with a color in
// {-1, +1} for each fixed point.
class DecoratedPermutation {
 public:
  // Throws InvalidInputError unless `one_line` is a permutation of [n] and
  // the keys of `colors` are exactly its fixed points, each colored -1 or +1.
  DecoratedPermutation(std::vector<int> one_line, std::map<int, int> colors);

  int n() const { return static_cast<int>(one_line_.size()); }
  // pi(i) for i in [n].
  int operator()(int i) const { return one_line_[i - 1]; }
  int Inverse(int j) const { return inverse_[j - 1]; }
  const std::vector<int>& one_line() const { return one_line_; }
  const std::map<int, int>& colors() const { return colors_; }
  bool HasFixedPoints() const { return !colors_.empty(); }

  // "465123" for n <= 9, otherwise space separated.
  std::string OneLineString() const;

  friend bool operator==(const DecoratedPermutation& a,
                         const DecoratedPermutation& b) {
    return a.one_line_ == b.one_line_ && a.colors_ == b.colors_;
  }

 private:
  std::vector<int> one_line_;
  std::vector<int> inverse_;
  std::map<int, int> colors_;
};

// pi(i) = j when I_{i+1} = (I_i \ {i}) + {j} with j != i; fixed points are
// colored +1 when i is not in I_i and -1 when it is.
DecoratedPermutation NecklaceToDecPerm(const GrassmannNecklace& necklace);

// Number of k-subsets in the necklace of `dp`: elements j with pi^{-1}(j)
// after j in the natural order, plus fixed points colored -1.
int NecklaceRank(const DecoratedPermutation& dp);

// Inverse of NecklaceToDecPerm. I_t holds j when j strictly precedes
// pi^{-1}(j) in <_t, plus every fixed point colored -1. Throws
// InvalidInputError when `k` differs from NecklaceRank(dp).
GrassmannNecklace DecPermToNecklace(const DecoratedPermutation& dp, int k);

// i -> i+k taken cyclically. When k is 0 or n every point is fixed and gets
// `fixed_point_color`, which must then be given.
DecoratedPermutation TopPermutation(
    int k, int n, std::optional<int> fixed_point_color = std::nullopt);

// Swaps the one-line entries at positions i-1 and i (position 0 is n) for
// every i in A. Fixed points that survive keep their colors; throws
// DomainError if a new fixed point would appear, since it has no color.
DecoratedPermutation ApplySigma(const NonAdjacentSet& a,
                                const DecoratedPermutation& p);

// The non-adjacent A with pi = sigma_A(top permutation), or nullopt. Throws
// DomainError unless 2 <= k <= n-2.
std::optional<NonAdjacentSet> DecPermSparseWitness(
    const DecoratedPermutation& dp, int k);

}  // namespace sppos

#endif  // SPPOS_DECORATED_PERMUTATION_H_
