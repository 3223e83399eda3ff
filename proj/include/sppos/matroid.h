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

#ifndef SPPOS_MATROID_H_
#define SPPOS_MATROID_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sppos/subset.h"

namespace sppos {

// Subset-lattice scans (circuits, flats, hyperplanes) visit all 2^n subsets
// of the ground set and refuse larger n.
inline constexpr int kMaxScanGroundSize = 20;

// True iff `family` satisfies the basis exchange axiom. Throws
// InvalidInputError if the family is empty, has members outside [n], or mixes
// subset sizes. Repeated members are ignored.
bool CheckExchangeAxiom(std::span<const Mask> family, int n);
bool CheckExchangeAxiom(std::span<const Subset> family, int n);

// A matroid on the ordered ground set [n], given by its bases. Construction
// validates the exchange axiom, so every Matroid value is a matroid.
class Matroid {
 public:
  // Throws InvalidInputError unless `bases` is a matroid basis system on [n].
  Matroid(int n, std::vector<Mask> bases);
  static Matroid FromSubsets(int n, std::span<const Subset> bases);

  int n() const { return n_; }
  int rank() const { return k_; }
  int k() const { return k_; }

  // Increasing mask order.
  const std::vector<Mask>& basis_masks() const { return bases_; }
  std::vector<Subset> bases() const;
  // Sorted lexicographically by increasing member lists.
  std::vector<Subset> LexSortedBases() const;
  std::size_t num_bases() const { return bases_.size(); }

  bool IsBasis(Mask set) const;
  bool IsBasis(const Subset& set) const { return IsBasis(set.mask()); }

  // k-subsets of [n] that are not bases, in increasing mask order.
  std::vector<Mask> NonBasisMasks() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_;
  int k_;
  std::vector<Mask> bases_;
};

// U_{k,n}. Throws InvalidInputError unless 0 <= k <= n.
Matroid Uniform(int k, int n);

// max |A ∩ B| over bases B. Throws InvalidInputError if A is not a subset of
// the ground set.
int RankOf(const Matroid& m, const Subset& a);

// Minimal dependent sets, in increasing mask order.
std::vector<Subset> Circuits(const Matroid& m);

// Flats of rank k-1. Throws DomainError when k == 0.
std::vector<Subset> Hyperplanes(const Matroid& m);

Matroid Dual(const Matroid& m);

// Sets that are both circuits and hyperplanes. All have size k.
struct CircuitHyperplaneSet {
  int n = 0;
  int k = 0;
  std::vector<Subset> sets;
};

// Throws DomainError when k == 0.
CircuitHyperplaneSet CircuitHyperplanes(const Matroid& m);

// Adds the circuit-hyperplane `c` as a basis. Throws PreconditionError if `c`
// is not a circuit-hyperplane of `m`.
Matroid Relax(const Matroid& m, const Subset& c);

// Every circuit has at least k elements.
bool IsPaving(const Matroid& m);

// The three standard characterizations of sparse paving matroids, evaluated
// independently.
struct SparsePavingDefinitions {
  // Every non-basis k-subset is a circuit-hyperplane.
  bool non_bases_are_circuit_hyperplanes = false;
  // Any two non-basis k-subsets differ in at least four elements.
  bool non_bases_pairwise_far = false;
  // Adding all circuit-hyperplanes as bases gives U_{k,n}.
  bool relaxation_gives_uniform = false;

  bool Agree() const {
    return non_bases_are_circuit_hyperplanes == non_bases_pairwise_far &&
           non_bases_pairwise_far == relaxation_gives_uniform;
  }
};

SparsePavingDefinitions EvaluateSparsePavingDefinitions(const Matroid& m);

// Evaluates all three characterizations and returns the common verdict.
// Throws InternalError if they disagree.
bool IsSparsePaving(const Matroid& m);

// First pair of non-bases (lexicographic order) whose symmetric difference has
// exactly two elements, if any.
std::optional<std::pair<Subset, Subset>> FindCloseNonBasisPair(
    const Matroid& m);

}  // namespace sppos

#endif  // SPPOS_MATROID_H_
