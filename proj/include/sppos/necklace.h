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

#ifndef SPPOS_NECKLACE_H_
#define SPPOS_NECKLACE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sppos/matroid.h"
#include "sppos/subset.h"

namespace sppos {

// a <=_t b in the rotated order t < t+1 < ... < n < 1 < ... < t-1.
// Throws InvalidInputError if t, a or b is outside [n].
bool CyclicLe(int t, int a, int b, int n);

// Gale order I <=_t J: after sorting both sets by <_t, every component of I is
// <=_t the matching component of J. Throws InvalidInputError on a size or
// ground-set mismatch.
bool GaleLe(int t, const Subset& i, const Subset& j);

// {i, i+1, ..., i+k-1} taken cyclically; the <_i-minimal k-subset of [n].
Subset CyclicInterval(int k, int n, int i);

// The cyclic interval at i with its last element i+k-1 replaced by i+k; the
// second smallest k-subset for <_i when 1 <= k <= n-1.
Subset ShiftedCyclicInterval(int k, int n, int i);

// Bases of the cyclically shifted Schubert matroid: all |I|-subsets J of [n]
// with I <=_t J, in increasing mask order.
std::vector<Subset> SchubertBases(const Subset& i, int t);

// Reason the first necklace axiom fails, or nullopt when `entries` (I_1..I_n
// for n = entries.size()) is a Grassmann necklace. Throws InvalidInputError on
// a length or ground-set mismatch, or mixed entry sizes.
std::optional<std::string> FindNecklaceViolation(
    std::span<const Subset> entries);
bool IsValidNecklace(std::span<const Subset> entries);

class GrassmannNecklace {
 public:
  // Throws InvalidInputError unless `entries` is a Grassmann necklace.
  explicit GrassmannNecklace(std::vector<Subset> entries);

  int n() const { return static_cast<int>(entries_.size()); }
  int k() const { return entries_.front().size(); }
  // 1-based, taken cyclically.
  const Subset& entry(int i) const { return entries_[Wrap(i, n()) - 1]; }
  const std::vector<Subset>& entries() const { return entries_; }

  // The necklace of U_{k,n}: every entry is a cyclic interval.
  static GrassmannNecklace Uniform(int k, int n);

  friend bool operator==(const GrassmannNecklace&,
                         const GrassmannNecklace&) = default;

 private:
  std::vector<Subset> entries_;
};

// Intersection over t of the shifted Schubert matroids at I_t.
Matroid NecklaceToPositroid(const GrassmannNecklace& necklace);

// Entry i is the lexicographically least basis of `m` under <_i.
GrassmannNecklace PositroidNecklace(const Matroid& m);

// The necklace round trip recovers exactly the bases of `m`.
bool IsPositroid(const Matroid& m);

// True iff no two distinct members of `set` are cyclically consecutive in
// [n]. With this reading {1} is non-adjacent in [1] and singletons are
// non-adjacent in [2] and [3].
bool IsNonAdjacent(const Subset& set);

class NonAdjacentSet {
 public:
  // Throws InvalidInputError unless `set` is non-adjacent.
  explicit NonAdjacentSet(const Subset& set);
  static NonAdjacentSet FromMembers(int n, std::span<const int> members) {
    return NonAdjacentSet(Subset::FromMembers(n, members));
  }

  int n() const { return set_.n(); }
  const Subset& set() const { return set_; }
  Mask mask() const { return set_.mask(); }
  bool contains(int i) const { return set_.contains(i); }
  std::vector<int> members() const { return set_.members(); }

  friend auto operator<=>(const NonAdjacentSet&,
                          const NonAdjacentSet&) = default;

 private:
  Subset set_;
};

// Throws DomainError unless 2 <= k <= n-2.
void CheckMiddleRank(int k, int n);

// Decides sparse paving directly on the necklace. Returns A = {i : I_i is not
// the cyclic interval at i} when every such entry is the shifted interval and
// both neighbours are cyclic intervals, otherwise nullopt. The circuit-
// hyperplanes of the positroid are then exactly the cyclic intervals at A.
// Throws DomainError unless 2 <= k <= n-2.
std::optional<NonAdjacentSet> SparsePavingWitness(
    const GrassmannNecklace& necklace);

// The necklace with shifted intervals at A and cyclic intervals elsewhere.
// Throws DomainError unless 2 <= k <= n-2.
GrassmannNecklace NecklaceFromNonAdjacent(const NonAdjacentSet& a, int k);

// Every Grassmann necklace of type (k, n), by depth-first choice of the
// element inserted at each step. Order: I_1 in increasing mask order, then
// inserted elements in increasing order.
std::vector<GrassmannNecklace> EnumerateNecklaces(int k, int n);

}  // namespace sppos

#endif  // SPPOS_NECKLACE_H_
