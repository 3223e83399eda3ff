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

#include "sppos/necklace.h"

#include <algorithm>
#include <functional>

#include "sppos/errors.h"

namespace sppos {
namespace {

void CheckElement(int x, int n, const char* what) {
  if (n < 1 || x < 1 || x > n) {
    throw InvalidInputError(std::string(what) + " = " + std::to_string(x) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

// Relabels so that t becomes 1; <_t turns into the natural order.
Mask ToOrderStartingAt(Mask m, int n, int t) { return RotateDown(m, n, t - 1); }

// Natural Gale order: the j-th smallest element of a is <= the j-th smallest
// element of b for every j.
bool NaturalGaleLe(Mask a, Mask b) {
  int count_a = 0;
  int count_b = 0;
  for (Mask seen = a | b; seen != 0; seen &= seen - 1) {
    const Mask bit = seen & (~seen + 1);
    if (a & bit) ++count_a;
    if (b & bit) ++count_b;
    if (count_a < count_b) return false;
  }
  return true;
}

}  // namespace

bool CyclicLe(int t, int a, int b, int n) {
  CheckElement(t, n, "t");
  CheckElement(a, n, "a");
  CheckElement(b, n, "b");
  return Wrap(a - t + 1, n) <= Wrap(b - t + 1, n);
}

bool GaleLe(int t, const Subset& i, const Subset& j) {
  if (i.n() != j.n()) throw InvalidInputError("ground set mismatch");
  if (i.size() != j.size()) throw InvalidInputError("subset size mismatch");
  CheckElement(t, i.n(), "t");
  return NaturalGaleLe(ToOrderStartingAt(i.mask(), i.n(), t),
                       ToOrderStartingAt(j.mask(), j.n(), t));
}

Subset CyclicInterval(int k, int n, int i) {
  CheckGroundSize(n);
  if (k < 1 || k > n) {
    throw InvalidInputError("cyclic interval needs 1 <= k <= n");
  }
  CheckElement(i, n, "i");
  Mask m = 0;
  for (int x = i; x < i + k; ++x) m |= Bit(Wrap(x, n));
  return Subset::FromMask(n, m);
}

Subset ShiftedCyclicInterval(int k, int n, int i) {
  if (k < 1 || k > n - 1) {
    throw InvalidInputError("shifted cyclic interval needs 1 <= k <= n-1");
  }
  return CyclicInterval(k, n, i).Without(Wrap(i + k - 1, n)).With(
      Wrap(i + k, n));
}

std::vector<Subset> SchubertBases(const Subset& i, int t) {
  CheckElement(t, i.n(), "t");
  const Mask lower = ToOrderStartingAt(i.mask(), i.n(), t);
  std::vector<Subset> out;
  for (Mask j : AllKSubsetMasks(i.n(), i.size())) {
    if (NaturalGaleLe(lower, ToOrderStartingAt(j, i.n(), t))) {
      out.push_back(Subset::FromMask(i.n(), j));
    }
  }
  return out;
}

std::optional<std::string> FindNecklaceViolation(
    std::span<const Subset> entries) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) throw InvalidInputError("necklace has no entries");
  for (const Subset& e : entries) {
    if (e.n() != n) {
      throw InvalidInputError("necklace of length " + std::to_string(n) +
                              " has an entry over [" + std::to_string(e.n()) +
                              "]");
    }
    if (e.size() != entries.front().size()) {
      throw InvalidInputError("necklace entries have mixed sizes");
    }
  }
  for (int i = 1; i <= n; ++i) {
    const Subset& current = entries[i - 1];
    const Subset& next = entries[Wrap(i + 1, n) - 1];
    const std::string where = "necklace axiom fails at i=" + std::to_string(i);
    if (current.contains(i)) {
      // next must be current - {i} + {j}; j == i keeps it unchanged.
      const Mask removed = current.mask() & ~Bit(i);
      if ((next.mask() & removed) != removed) {
        return where + ": " + std::to_string(i) + " in I_" +
               std::to_string(i) + " = " + current.ToString() + " but I_" +
               std::to_string(Wrap(i + 1, n)) + " = " + next.ToString() +
               " is not (I_" + std::to_string(i) + " \\ {" +
               std::to_string(i) + "}) + {j}";
      }
    } else if (next != current) {
      return where + ": " + std::to_string(i) + " not in I_" +
             std::to_string(i) + " = " + current.ToString() + " but I_" +
             std::to_string(Wrap(i + 1, n)) + " = " + next.ToString() +
             " differs";
    }
  }
  return std::nullopt;
}

bool IsValidNecklace(std::span<const Subset> entries) {
  return !FindNecklaceViolation(entries).has_value();
}

GrassmannNecklace::GrassmannNecklace(std::vector<Subset> entries)
    : entries_(std::move(entries)) {
  if (auto violation = FindNecklaceViolation(entries_)) {
    throw InvalidInputError(*violation);
  }
}

GrassmannNecklace GrassmannNecklace::Uniform(int k, int n) {
  CheckGroundSize(n);
  if (n < 1 || k < 0 || k > n) {
    throw InvalidInputError("uniform necklace needs 0 <= k <= n, n >= 1");
  }
  std::vector<Subset> entries;
  for (int i = 1; i <= n; ++i) {
    entries.push_back(k == 0 ? Subset::Empty(n) : CyclicInterval(k, n, i));
  }
  return GrassmannNecklace(std::move(entries));
}

Matroid NecklaceToPositroid(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<Mask> lower(n);
  for (int t = 1; t <= n; ++t) {
    lower[t - 1] = ToOrderStartingAt(necklace.entry(t).mask(), n, t);
  }
  std::vector<Mask> bases;
  for (Mask j : AllKSubsetMasks(n, necklace.k())) {
    bool keep = true;
    for (int t = 1; t <= n && keep; ++t) {
      keep = NaturalGaleLe(lower[t - 1], ToOrderStartingAt(j, n, t));
    }
    if (keep) bases.push_back(j);
  }
  return Matroid(n, std::move(bases));
}

GrassmannNecklace PositroidNecklace(const Matroid& m) {
  const int n = m.n();
  if (n < 1) throw InvalidInputError("necklace needs n >= 1");
  std::vector<Subset> entries;
  entries.reserve(n);
  for (int t = 1; t <= n; ++t) {
    Mask best = ToOrderStartingAt(m.basis_masks().front(), n, t);
    for (Mask b : m.basis_masks()) {
      const Mask rotated = ToOrderStartingAt(b, n, t);
      if (LexLess(rotated, best)) best = rotated;
    }
    // Undo the relabelling x -> x - (t - 1).
    entries.push_back(Subset::FromMask(n, RotateDown(best, n, n - (t - 1))));
  }
  return GrassmannNecklace(std::move(entries));
}

bool IsPositroid(const Matroid& m) {
  return NecklaceToPositroid(PositroidNecklace(m)) == m;
}

bool IsNonAdjacent(const Subset& set) {
  const int n = set.n();
  for (int i : set.members()) {
    const int next = Wrap(i + 1, n);
    if (next != i && set.contains(next)) return false;
  }
  return true;
}

NonAdjacentSet::NonAdjacentSet(const Subset& set) : set_(set) {
  if (!IsNonAdjacent(set_)) {
    throw InvalidInputError(set_.ToString() + " is not non-adjacent in [" +
                            std::to_string(set_.n()) + "]");
  }
}

void CheckMiddleRank(int k, int n) {
  if (k < 2 || k > n - 2) {
    throw DomainError("rank k = " + std::to_string(k) +
                      " outside 2 <= k <= n-2 for n = " + std::to_string(n));
  }
}

std::optional<NonAdjacentSet> SparsePavingWitness(
    const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  const int k = necklace.k();
  CheckMiddleRank(k, n);
  Mask deviating = 0;
  for (int i = 1; i <= n; ++i) {
    if (necklace.entry(i) == CyclicInterval(k, n, i)) continue;
    if (necklace.entry(i - 1) != CyclicInterval(k, n, Wrap(i - 1, n)) ||
        necklace.entry(i + 1) != CyclicInterval(k, n, Wrap(i + 1, n)) ||
        necklace.entry(i) != ShiftedCyclicInterval(k, n, i)) {
      return std::nullopt;
    }
    deviating |= Bit(i);
  }
  return NonAdjacentSet(Subset::FromMask(n, deviating));
}

GrassmannNecklace NecklaceFromNonAdjacent(const NonAdjacentSet& a, int k) {
  const int n = a.n();
  CheckMiddleRank(k, n);
  std::vector<Subset> entries;
  entries.reserve(n);
  for (int i = 1; i <= n; ++i) {
    entries.push_back(a.contains(i) ? ShiftedCyclicInterval(k, n, i)
                                    : CyclicInterval(k, n, i));
  }
  return GrassmannNecklace(std::move(entries));
}

std::vector<GrassmannNecklace> EnumerateNecklaces(int k, int n) {
  CheckGroundSize(n);
  if (n < 1 || k < 0 || k > n) {
    throw InvalidInputError("necklace enumeration needs 0 <= k <= n, n >= 1");
  }
  std::vector<GrassmannNecklace> out;
  std::vector<Mask> chain(n);
  // chain[i - 1] holds I_i; extend from I_i to I_{i+1}.
  std::function<void(int)> extend = [&](int i) {
    const Mask current = chain[i - 1];
    std::vector<Mask> successors;
    if (current & Bit(i)) {
      const Mask removed = current & ~Bit(i);
      for (int j = 1; j <= n; ++j) {
        if (!(removed & Bit(j))) successors.push_back(removed | Bit(j));
      }
    } else {
      successors.push_back(current);
    }
    for (Mask next : successors) {
      if (i == n) {
        if (next != chain[0]) continue;
        std::vector<Subset> entries;
        entries.reserve(n);
        for (Mask e : chain) entries.push_back(Subset::FromMask(n, e));
        out.emplace_back(std::move(entries));
      } else {
        chain[i] = next;
        extend(i + 1);
      }
    }
  };
  for (Mask first : AllKSubsetMasks(n, k)) {
    chain[0] = first;
    extend(1);
  }
  return out;
}

}  // namespace sppos
