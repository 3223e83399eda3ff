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

#include "sppos/matroid.h"

#include <algorithm>
#include <bit>
#include <string>

#include "sppos/errors.h"

namespace sppos {
namespace {

constexpr int kMaxTableGroundSize = 16;

// Membership oracle for a sorted, deduplicated family of masks.
class FamilyLookup {
 public:
  FamilyLookup(std::span<const Mask> sorted, int n) : sorted_(sorted) {
    if (n <= kMaxTableGroundSize) {
      table_.assign(std::size_t{1} << n, false);
      for (Mask m : sorted) table_[m] = true;
    }
  }

  bool contains(Mask m) const {
    if (!table_.empty()) return m < table_.size() && table_[m];
    return std::binary_search(sorted_.begin(), sorted_.end(), m);
  }

 private:
  std::span<const Mask> sorted_;
  std::vector<bool> table_;
};

std::vector<Mask> NormalizeFamily(std::span<const Mask> family, int n) {
  CheckGroundSize(n);
  if (family.empty()) throw InvalidInputError("basis family is empty");
  const int size = PopCount(family.front());
  for (Mask m : family) {
    if (m & ~FullMask(n)) {
      throw InvalidInputError("basis has elements outside [1, " +
                              std::to_string(n) + "]");
    }
    if (PopCount(m) != size) {
      throw InvalidInputError("basis family mixes subset sizes");
    }
  }
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

bool ExchangeHolds(std::span<const Mask> sorted, int n) {
  const FamilyLookup lookup(sorted, n);
  for (Mask b : sorted) {
    for (Mask other : sorted) {
      if (b == other) continue;
      const Mask only_b = b & ~other;
      const Mask only_other = other & ~b;
      for (Mask es = only_b; es != 0; es &= es - 1) {
        const Mask e = es & (~es + 1);
        bool found = false;
        for (Mask fs = only_other; fs != 0 && !found; fs &= fs - 1) {
          const Mask f = fs & (~fs + 1);
          found = lookup.contains((b & ~e) | f);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

void CheckScanSize(int n) {
  if (n > kMaxScanGroundSize) {
    throw DomainError("subset-lattice scan limited to n <= " +
                      std::to_string(kMaxScanGroundSize));
  }
}

// Independence and rank of every subset of the ground set.
struct SubsetLattice {
  explicit SubsetLattice(const Matroid& m) : n(m.n()), k(m.k()) {
    CheckScanSize(n);
    const std::size_t count = std::size_t{1} << n;
    independent.assign(count, false);
    for (Mask b : m.basis_masks()) {
      // Every subset of a basis, including b itself and the empty set.
      for (Mask s = b;; s = (s - 1) & b) {
        independent[s] = true;
        if (s == 0) break;
      }
    }
    rank.assign(count, 0);
    for (Mask s = 1; s < count; ++s) {
      if (independent[s]) {
        rank[s] = PopCount(s);
        continue;
      }
      int best = 0;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        best = std::max(best, rank[s & ~(rest & (~rest + 1))]);
      }
      rank[s] = best;
    }
  }

  bool IsCircuit(Mask s) const {
    if (independent[s]) return false;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      if (!independent[s & ~(rest & (~rest + 1))]) return false;
    }
    return true;
  }

  bool IsFlat(Mask s) const {
    const Mask outside = FullMask(n) & ~s;
    for (Mask rest = outside; rest != 0; rest &= rest - 1) {
      if (rank[s | (rest & (~rest + 1))] == rank[s]) return false;
    }
    return true;
  }

  bool IsHyperplane(Mask s) const { return rank[s] == k - 1 && IsFlat(s); }

  std::vector<Mask> CircuitHyperplaneMasks() const {
    std::vector<Mask> out;
    if (k == 0) return out;
    for (Mask s : AllKSubsetMasks(n, k)) {
      if (IsCircuit(s) && IsHyperplane(s)) out.push_back(s);
    }
    return out;
  }

  int n;
  int k;
  std::vector<bool> independent;
  std::vector<int> rank;
};

std::vector<Subset> ToSubsets(int n, std::span<const Mask> masks) {
  std::vector<Subset> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(Subset::FromMask(n, m));
  return out;
}

std::vector<Mask> ToMasks(std::span<const Subset> sets, int n) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const Subset& s : sets) {
    if (s.n() != n) {
      throw InvalidInputError("subset ground size " + std::to_string(s.n()) +
                              " does not match n = " + std::to_string(n));
    }
    out.push_back(s.mask());
  }
  return out;
}

}  // namespace

bool CheckExchangeAxiom(std::span<const Mask> family, int n) {
  return ExchangeHolds(NormalizeFamily(family, n), n);
}

bool CheckExchangeAxiom(std::span<const Subset> family, int n) {
  const std::vector<Mask> masks = ToMasks(family, n);
  return CheckExchangeAxiom(masks, n);
}

Matroid::Matroid(int n, std::vector<Mask> bases)
    : n_(n), k_(0), bases_(NormalizeFamily(bases, n)) {
  k_ = PopCount(bases_.front());
  if (!ExchangeHolds(bases_, n_)) {
    throw InvalidInputError("basis family violates the exchange axiom");
  }
}

Matroid Matroid::FromSubsets(int n, std::span<const Subset> bases) {
  return Matroid(n, ToMasks(bases, n));
}

std::vector<Subset> Matroid::bases() const { return ToSubsets(n_, bases_); }

std::vector<Subset> Matroid::LexSortedBases() const {
  std::vector<Subset> out = bases();
  std::sort(out.begin(), out.end(),
            [](const Subset& a, const Subset& b) { return LexLess(a, b); });
  return out;
}

bool Matroid::IsBasis(Mask set) const {
  return std::binary_search(bases_.begin(), bases_.end(), set);
}

std::vector<Mask> Matroid::NonBasisMasks() const {
  std::vector<Mask> out;
  for (Mask s : AllKSubsetMasks(n_, k_)) {
    if (!IsBasis(s)) out.push_back(s);
  }
  return out;
}

Matroid Uniform(int k, int n) {
  CheckGroundSize(n);
  if (k < 0 || k > n) {
    throw InvalidInputError("uniform matroid needs 0 <= k <= n, got k = " +
                            std::to_string(k) + ", n = " + std::to_string(n));
  }
  return Matroid(n, AllKSubsetMasks(n, k));
}

int RankOf(const Matroid& m, const Subset& a) {
  if (a.n() != m.n()) {
    throw InvalidInputError("subset is not over the matroid's ground set");
  }
  int best = 0;
  for (Mask b : m.basis_masks()) {
    best = std::max(best, PopCount(a.mask() & b));
  }
  return best;
}

std::vector<Subset> Circuits(const Matroid& m) {
  const SubsetLattice lattice(m);
  std::vector<Mask> out;
  const Mask count = Mask{1} << m.n();
  for (Mask s = 1; s < count; ++s) {
    if (lattice.IsCircuit(s)) out.push_back(s);
  }
  return ToSubsets(m.n(), out);
}

std::vector<Subset> Hyperplanes(const Matroid& m) {
  if (m.k() == 0) throw DomainError("a rank-0 matroid has no hyperplanes");
  const SubsetLattice lattice(m);
  std::vector<Mask> out;
  const Mask count = Mask{1} << m.n();
  for (Mask s = 0; s < count; ++s) {
    if (lattice.IsHyperplane(s)) out.push_back(s);
  }
  return ToSubsets(m.n(), out);
}

Matroid Dual(const Matroid& m) {
  std::vector<Mask> complements;
  complements.reserve(m.num_bases());
  for (Mask b : m.basis_masks()) complements.push_back(FullMask(m.n()) & ~b);
  return Matroid(m.n(), std::move(complements));
}

CircuitHyperplaneSet CircuitHyperplanes(const Matroid& m) {
  if (m.k() == 0) throw DomainError("a rank-0 matroid has no hyperplanes");
  const SubsetLattice lattice(m);
  return {m.n(), m.k(), ToSubsets(m.n(), lattice.CircuitHyperplaneMasks())};
}

Matroid Relax(const Matroid& m, const Subset& c) {
  if (c.n() != m.n() || c.size() != m.k() || m.k() == 0) {
    throw PreconditionError(c.ToString() + " is not a circuit-hyperplane");
  }
  const SubsetLattice lattice(m);
  if (!lattice.IsCircuit(c.mask()) || !lattice.IsHyperplane(c.mask())) {
    throw PreconditionError(c.ToString() + " is not a circuit-hyperplane");
  }
  std::vector<Mask> bases = m.basis_masks();
  bases.push_back(c.mask());
  return Matroid(m.n(), std::move(bases));
}

bool IsPaving(const Matroid& m) {
  const SubsetLattice lattice(m);
  const Mask count = Mask{1} << m.n();
  for (Mask s = 1; s < count; ++s) {
    if (PopCount(s) < m.k() && lattice.IsCircuit(s)) return false;
  }
  return true;
}

SparsePavingDefinitions EvaluateSparsePavingDefinitions(const Matroid& m) {
  const std::vector<Mask> non_bases = m.NonBasisMasks();
  const SubsetLattice lattice(m);
  const std::vector<Mask> circuit_hyperplanes =
      lattice.CircuitHyperplaneMasks();

  SparsePavingDefinitions defs;
  // Both lists are in increasing mask order.
  defs.non_bases_are_circuit_hyperplanes = non_bases == circuit_hyperplanes;

  defs.non_bases_pairwise_far = true;
  for (std::size_t i = 0; i < non_bases.size() && defs.non_bases_pairwise_far;
       ++i) {
    for (std::size_t j = i + 1; j < non_bases.size(); ++j) {
      if (SymmetricDifferenceSize(non_bases[i], non_bases[j]) < 4) {
        defs.non_bases_pairwise_far = false;
        break;
      }
    }
  }

  std::vector<Mask> relaxed = m.basis_masks();
  relaxed.insert(relaxed.end(), circuit_hyperplanes.begin(),
                 circuit_hyperplanes.end());
  std::sort(relaxed.begin(), relaxed.end());
  relaxed.erase(std::unique(relaxed.begin(), relaxed.end()), relaxed.end());
  defs.relaxation_gives_uniform = relaxed == AllKSubsetMasks(m.n(), m.k());
  return defs;
}

bool IsSparsePaving(const Matroid& m) {
  const SparsePavingDefinitions defs = EvaluateSparsePavingDefinitions(m);
  if (!defs.Agree()) {
    throw InternalError("sparse paving characterizations disagree");
  }
  return defs.non_bases_pairwise_far;
}

std::optional<std::pair<Subset, Subset>> FindCloseNonBasisPair(
    const Matroid& m) {
  std::vector<Mask> non_bases = m.NonBasisMasks();
  std::sort(non_bases.begin(), non_bases.end(),
            [](Mask a, Mask b) { return LexLess(a, b); });
  for (std::size_t i = 0; i < non_bases.size(); ++i) {
    for (std::size_t j = i + 1; j < non_bases.size(); ++j) {
      if (SymmetricDifferenceSize(non_bases[i], non_bases[j]) == 2) {
        return std::pair(Subset::FromMask(m.n(), non_bases[i]),
                         Subset::FromMask(m.n(), non_bases[j]));
      }
    }
  }
  return std::nullopt;
}

}  // namespace sppos
