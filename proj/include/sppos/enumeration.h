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

#ifndef SPPOS_ENUMERATION_H_
#define SPPOS_ENUMERATION_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sppos/decorated_permutation.h"
#include "sppos/le_diagram.h"
#include "sppos/matroid.h"
#include "sppos/necklace.h"

namespace sppos {

using BigInt = boost::multiprecision::cpp_int;

// Visits every non-adjacent subset of [n] once, in increasing mask order.
// Throws InvalidInputError unless 1 <= n <= kMaxGroundSize.
void ForEachNonAdjacentSubset(
    int n, const std::function<void(const NonAdjacentSet&)>& visit);
std::vector<NonAdjacentSet> NonAdjacentSubsets(int n);

// s_0..s_3 = 1, 2, 3, 4 and s_n = s_{n-1} + s_{n-2} afterwards.
BigInt SCount(int n);

// Nearest integer to phi^n for the golden ratio phi, computed exactly from
// (1 + sqrt 5)^n = a + b sqrt 5 and an integer square root.
BigInt SClosed(int n);

// L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
BigInt Lucas(int n);

// One sparse paving positroid in all of its representations.
struct SparsePavingPositroid {
  NonAdjacentSet a;
  GrassmannNecklace necklace;
  DecoratedPermutation perm;
  LeDiagram le;
  Matroid matroid;
};

// Builds every view for A and checks that they describe the same positroid.
// Throws InternalError if the necklace and Le-diagram routes disagree.
SparsePavingPositroid BuildSparsePavingPositroid(const NonAdjacentSet& a,
                                                 int k);

// One record per non-adjacent A, in the order of ForEachNonAdjacentSubset.
// Throws DomainError unless 2 <= k <= n-2.
void ForEachSparsePavingPositroid(
    int k, int n, const std::function<void(const SparsePavingPositroid&)>& visit);
std::vector<SparsePavingPositroid> EnumerateSparsePaving(int k, int n);

// n+1 for k in {1, n-1}, s_n for 2 <= k <= n-2. Throws DomainError for
// k in {0, n} or k outside [0, n].
BigInt CountSparsePaving(int k, int n);

// The three disjoint cases splitting the non-adjacent subsets of [n], n >= 4,
// in the proof of the recurrence.
enum class RecurrenceCase {
  // n not in A and not both of 1, n-1: a non-adjacent subset of [n-1].
  kWithoutLast = 1,
  // 1 and n-1 in A: drop n-1 to get a subset of [n-2] containing 1.
  kFirstAndPenultimate = 2,
  // n in A: drop n to get a subset of [n-2] avoiding 1.
  kWithLast = 3,
};

// Throws DomainError for n < 4.
RecurrenceCase ClassifyRecurrenceCase(const NonAdjacentSet& a);

// The image of A under its case's bijection: a non-adjacent subset of [n-1]
// for case 1, of [n-2] for cases 2 and 3.
NonAdjacentSet RecurrenceCaseImage(const NonAdjacentSet& a);

}  // namespace sppos

#endif  // SPPOS_ENUMERATION_H_
