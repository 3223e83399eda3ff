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

#ifndef SPPOS_SUBSET_H_
#define SPPOS_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sppos {

// Bit e-1 represents element e of the ground set [n] = {1, ..., n}.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 62;

constexpr Mask Bit(int element) { return Mask{1} << (element - 1); }

constexpr Mask FullMask(int n) {
  return n == 0 ? Mask{0} : (~Mask{0} >> (64 - n));
}

inline int PopCount(Mask m) { return std::popcount(m); }

// Representative of i modulo n in [n], so Wrap(n + 1, n) == 1 and
// Wrap(0, n) == n.
constexpr int Wrap(int i, int n) {
  int r = (i - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

// Relabels every element x of `mask` (a subset of [n]) as Wrap(x - shift, n).
Mask RotateDown(Mask mask, int n, int shift);

// A subset of the ground set [n]. Stored as a bit mask, so members are always
// kept in increasing order.
class Subset {
 public:
  Subset() = default;

  // Throws InvalidInputError on elements outside [n] or repeated elements.
  static Subset FromMembers(int n, std::span<const int> members);
  static Subset FromMembers(int n, std::initializer_list<int> members) {
    return FromMembers(n, std::span<const int>(members.begin(), members.size()));
  }
  // Throws InvalidInputError when `mask` has bits outside [n].
  static Subset FromMask(int n, Mask mask);
  static Subset Empty(int n) { return FromMask(n, 0); }
  static Subset Full(int n) { return FromMask(n, FullMask(n)); }

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return PopCount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int element) const {
    return element >= 1 && element <= n_ && (mask_ & Bit(element)) != 0;
  }

  std::vector<int> members() const;

  Subset With(int element) const;
  Subset Without(int element) const;
  Subset Complement() const { return Subset(n_, FullMask(n_) & ~mask_); }

  // "{1,3,4}"; the empty set prints as "{}".
  std::string ToString() const;

  // Order by (n, mask); use LexLess for the order of sorted member lists.
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  Subset(int n, Mask mask) : n_(n), mask_(mask) {}

  int n_ = 0;
  Mask mask_ = 0;
};

// Lexicographic comparison of the increasing member lists of two subsets of
// equal size.
bool LexLess(Mask a, Mask b);
inline bool LexLess(const Subset& a, const Subset& b) {
  return LexLess(a.mask(), b.mask());
}

inline int SymmetricDifferenceSize(Mask a, Mask b) { return PopCount(a ^ b); }

// Number of k-subsets of an n-set, or 0 outside 0 <= k <= n.
std::uint64_t Binomial(int n, int k);

// All k-subsets of [n] in increasing mask order.
std::vector<Mask> AllKSubsetMasks(int n, int k);
std::vector<Subset> AllKSubsets(int n, int k);

// Throws InvalidInputError unless 0 <= n <= kMaxGroundSize.
void CheckGroundSize(int n);

}  // namespace sppos

#endif  // SPPOS_SUBSET_H_
