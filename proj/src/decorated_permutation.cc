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

#include "sppos/decorated_permutation.h"

#include <sstream>
#include <utility>

#include "sppos/errors.h"

namespace sppos {

DecoratedPermutation::DecoratedPermutation(std::vector<int> one_line,
                                           std::map<int, int> colors)
    : one_line_(std::move(one_line)), colors_(std::move(colors)) {
  const int size = n();
  CheckGroundSize(size);
  if (size == 0) throw InvalidInputError("empty permutation");
  inverse_.assign(size, 0);
  for (int i = 1; i <= size; ++i) {
    const int value = one_line_[i - 1];
    if (value < 1 || value > size || inverse_[value - 1] != 0) {
      throw InvalidInputError("one-line notation is not a permutation of [" +
                              std::to_string(size) + "]");
    }
    inverse_[value - 1] = i;
  }
  for (int i = 1; i <= size; ++i) {
    const bool fixed = one_line_[i - 1] == i;
    const auto it = colors_.find(i);
    if (fixed && it == colors_.end()) {
      throw InvalidInputError("fixed point " + std::to_string(i) +
                              " has no color");
    }
    if (!fixed && it != colors_.end()) {
      throw InvalidInputError(std::to_string(i) +
                              " is colored but is not a fixed point");
    }
    if (fixed && it->second != 1 && it->second != -1) {
      throw InvalidInputError("fixed point " + std::to_string(i) +
                              " must be colored -1 or +1");
    }
  }
  if (colors_.size() > static_cast<std::size_t>(size) ||
      (!colors_.empty() &&
       (colors_.begin()->first < 1 || colors_.rbegin()->first > size))) {
    throw InvalidInputError("colors keyed outside [n]");
  }
}

std::string DecoratedPermutation::OneLineString() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i > 0) os << ' ';
    os << one_line_[i];
  }
  return os.str();
}

DecoratedPermutation NecklaceToDecPerm(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<int> one_line(n);
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) {
    const Mask current = necklace.entry(i).mask();
    const Mask next = necklace.entry(i + 1).mask();
    if (current == next) {
      one_line[i - 1] = i;
      colors[i] = (current & Bit(i)) ? -1 : 1;
    } else {
      // Valid necklaces only change by swapping i for the inserted element.
      const Mask inserted = next & ~current;
      one_line[i - 1] = std::countr_zero(inserted) + 1;
    }
  }
  return DecoratedPermutation(std::move(one_line), std::move(colors));
}

namespace {

Mask NecklaceEntry(const DecoratedPermutation& dp, int t) {
  const int n = dp.n();
  Mask entry = 0;
  for (int j = 1; j <= n; ++j) {
    const int preimage = dp.Inverse(j);
    if (preimage == j) {
      if (dp.colors().at(j) == -1) entry |= Bit(j);
    } else if (Wrap(j - t + 1, n) < Wrap(preimage - t + 1, n)) {
      entry |= Bit(j);
    }
  }
  return entry;
}

}  // namespace

int NecklaceRank(const DecoratedPermutation& dp) {
  return PopCount(NecklaceEntry(dp, 1));
}

GrassmannNecklace DecPermToNecklace(const DecoratedPermutation& dp, int k) {
  const int rank = NecklaceRank(dp);
  if (rank != k) {
    throw InvalidInputError("decorated permutation has necklace rank " +
                            std::to_string(rank) + ", not " +
                            std::to_string(k));
  }
  std::vector<Subset> entries;
  entries.reserve(dp.n());
  for (int t = 1; t <= dp.n(); ++t) {
    entries.push_back(Subset::FromMask(dp.n(), NecklaceEntry(dp, t)));
  }
  return GrassmannNecklace(std::move(entries));
}

DecoratedPermutation TopPermutation(int k, int n,
                                    std::optional<int> fixed_point_color) {
  CheckGroundSize(n);
  if (n < 1 || k < 0 || k > n) {
    throw InvalidInputError("top permutation needs 0 <= k <= n, n >= 1");
  }
  std::vector<int> one_line(n);
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) one_line[i - 1] = Wrap(i + k, n);
  if (k == 0 || k == n) {
    if (!fixed_point_color) {
      throw InvalidInputError(
          "top permutation for k in {0, n} needs a fixed point color");
    }
    for (int i = 1; i <= n; ++i) colors[i] = *fixed_point_color;
  }
  return DecoratedPermutation(std::move(one_line), std::move(colors));
}

DecoratedPermutation ApplySigma(const NonAdjacentSet& a,
                                const DecoratedPermutation& p) {
  const int n = p.n();
  if (a.n() != n) throw InvalidInputError("ground set mismatch");
  std::vector<int> one_line = p.one_line();
  for (int i : a.members()) {
    std::swap(one_line[i - 1], one_line[Wrap(i - 1, n) - 1]);
  }
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) {
    if (one_line[i - 1] != i) continue;
    const auto it = p.colors().find(i);
    if (it == p.colors().end()) {
      throw DomainError("sigma creates uncolored fixed point " +
                        std::to_string(i));
    }
    colors.insert(*it);
  }
  return DecoratedPermutation(std::move(one_line), std::move(colors));
}

std::optional<NonAdjacentSet> DecPermSparseWitness(
    const DecoratedPermutation& dp, int k) {
  const int n = dp.n();
  CheckMiddleRank(k, n);
  if (dp.HasFixedPoints()) return std::nullopt;
  const DecoratedPermutation top = TopPermutation(k, n);
  // For n >= 4 a swap at i is visible as top's entries at i-1, i trading
  // places; no other pattern produces that.
  Mask swapped = 0;
  for (int i = 1; i <= n; ++i) {
    const int before = Wrap(i - 1, n);
    if (dp(before) == top(i) && dp(i) == top(before)) swapped |= Bit(i);
  }
  const Subset candidate = Subset::FromMask(n, swapped);
  if (!IsNonAdjacent(candidate)) return std::nullopt;
  NonAdjacentSet a(candidate);
  if (ApplySigma(a, top) != dp) return std::nullopt;
  return a;
}

}  // namespace sppos
