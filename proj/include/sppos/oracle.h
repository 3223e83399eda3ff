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

#ifndef SPPOS_ORACLE_H_
#define SPPOS_ORACLE_H_

#include <cstdint>

namespace sppos {

struct NecklaceOracleReport {
  std::uint64_t necklaces = 0;
  std::uint64_t sparse_paving = 0;
  std::uint64_t discrepancies = 0;
};

// Brute force over every Grassmann necklace of type (k, n): builds each
// positroid, decides sparse paving from its bases, and compares with the
// necklace criterion (verdict and circuit-hyperplanes). Throws DomainError
// unless 2 <= k <= n-2.
NecklaceOracleReport RunNecklaceOracle(int k, int n);

struct BasisFamilyScanReport {
  std::uint64_t families = 0;
  std::uint64_t matroids = 0;
  std::uint64_t sparse_paving = 0;
  // Matroids on which the three sparse paving characterizations, or the
  // "M and its dual are paving" definition, disagree.
  std::uint64_t disagreements = 0;
};

// Visits all 2^C(n,k) - 1 nonempty families of k-subsets of [n], keeps those
// satisfying the exchange axiom, and cross-checks every sparse paving
// characterization on them. Throws DomainError when C(n,k) > 24.
BasisFamilyScanReport ScanBasisFamilies(int k, int n);

}  // namespace sppos

#endif  // SPPOS_ORACLE_H_
