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

#include "sppos/oracle.h"

#include <algorithm>
#include <vector>

#include "sppos/errors.h"
#include "sppos/matroid.h"
#include "sppos/necklace.h"

namespace sppos {

NecklaceOracleReport RunNecklaceOracle(int k, int n) {
  CheckMiddleRank(k, n);
  NecklaceOracleReport report;
  for (const GrassmannNecklace& necklace : EnumerateNecklaces(k, n)) {
    ++report.necklaces;
    const Matroid positroid = NecklaceToPositroid(necklace);
    const bool sparse_paving = IsSparsePaving(positroid);
    const std::optional<NonAdjacentSet> witness = SparsePavingWitness(necklace);
    if (sparse_paving) ++report.sparse_paving;
    if (sparse_paving != witness.has_value()) {
      ++report.discrepancies;
      continue;
    }
    if (witness) {
      std::vector<Mask> expected;
      for (int i : witness->members()) {
        expected.push_back(CyclicInterval(k, n, i).mask());
      }
      std::sort(expected.begin(), expected.end());
      if (positroid.NonBasisMasks() != expected) ++report.discrepancies;
    }
  }
  return report;
}

BasisFamilyScanReport ScanBasisFamilies(int k, int n) {
  const std::vector<Mask> candidates = AllKSubsetMasks(n, k);
  const int count = static_cast<int>(candidates.size());
  if (count > 24) {
    throw DomainError("basis family scan limited to C(n,k) <= 24");
  }
  BasisFamilyScanReport report;
  std::vector<Mask> family;
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << count);
       ++chosen) {
    ++report.families;
    // The empty family has no basis, so it is not a matroid.
    if (chosen == 0) continue;
    family.clear();
    for (int i = 0; i < count; ++i) {
      if (chosen >> i & 1) family.push_back(candidates[i]);
    }
    if (!CheckExchangeAxiom(family, n)) continue;
    ++report.matroids;
    const Matroid m(n, family);
    const SparsePavingDefinitions defs = EvaluateSparsePavingDefinitions(m);
    const bool dual_paving = IsPaving(m) && IsPaving(Dual(m));
    if (!defs.Agree() || dual_paving != defs.non_bases_pairwise_far) {
      ++report.disagreements;
    }
    if (defs.Agree() && defs.non_bases_pairwise_far) ++report.sparse_paving;
  }
  return report;
}

}  // namespace sppos
