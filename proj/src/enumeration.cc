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

#include "sppos/enumeration.h"

#include <string>

#include "sppos/errors.h"

namespace sppos {

void ForEachNonAdjacentSubset(
    int n, const std::function<void(const NonAdjacentSet&)>& visit) {
  CheckGroundSize(n);
  if (n < 1) throw InvalidInputError("non-adjacent subsets need n >= 1");
  // Decide elements n, n-1, ..., 1 with "absent" before "present", which
  // yields increasing mask order.
  std::function<void(int, Mask)> decide = [&](int element, Mask chosen) {
    if (element == 0) {
      visit(NonAdjacentSet(Subset::FromMask(n, chosen)));
      return;
    }
    decide(element - 1, chosen);
    const bool right_taken = element < n && (chosen & Bit(element + 1));
    const bool wraps_to_last = element == 1 && n >= 3 && (chosen & Bit(n));
    if (!right_taken && !wraps_to_last) {
      decide(element - 1, chosen | Bit(element));
    }
  };
  decide(n, 0);
}

std::vector<NonAdjacentSet> NonAdjacentSubsets(int n) {
  std::vector<NonAdjacentSet> out;
  ForEachNonAdjacentSubset(n, [&](const NonAdjacentSet& a) { out.push_back(a); });
  return out;
}

BigInt SCount(int n) {
  if (n < 0) throw InvalidInputError("s_n needs n >= 0");
  if (n <= 3) return BigInt(n + 1);
  BigInt previous = 3;
  BigInt current = 4;
  for (int i = 4; i <= n; ++i) {
    BigInt next = current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigInt SClosed(int n) {
  if (n < 0) throw InvalidInputError("phi^n needs n >= 0");
  // (1 + sqrt 5)^n = a + b sqrt 5, so phi^n = (a + b sqrt 5) / 2^n.
  BigInt a = 1;
  BigInt b = 0;
  for (int i = 0; i < n; ++i) {
    BigInt next_a = a + 5 * b;
    b = a + b;
    a = std::move(next_a);
  }
  const BigInt denominator = BigInt(1) << n;
  // floor(phi^n + 1/2) = floor((2a + 2^n + sqrt(20 b^2)) / 2^(n+1)), and the
  // irrational part may be replaced by its integer floor.
  const BigInt root = boost::multiprecision::sqrt(BigInt(20 * b * b));
  return (2 * a + denominator + root) / (2 * denominator);
}

BigInt Lucas(int n) {
  if (n < 0) throw InvalidInputError("Lucas numbers need n >= 0");
  BigInt previous = 2;
  BigInt current = 1;
  if (n == 0) return previous;
  for (int i = 2; i <= n; ++i) {
    BigInt next = current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

SparsePavingPositroid BuildSparsePavingPositroid(const NonAdjacentSet& a,
                                                 int k) {
  GrassmannNecklace necklace = NecklaceFromNonAdjacent(a, k);
  DecoratedPermutation perm = NecklaceToDecPerm(necklace);
  LeDiagram le = BuildSparsePavingDiagram(a.set(), k);
  Matroid matroid = NecklaceToPositroid(necklace);
  if (RealizableSets(le) != matroid) {
    throw InternalError("necklace and Le-diagram positroids differ for A = " +
                        a.set().ToString());
  }
  return {a, std::move(necklace), std::move(perm), std::move(le),
          std::move(matroid)};
}

void ForEachSparsePavingPositroid(
    int k, int n,
    const std::function<void(const SparsePavingPositroid&)>& visit) {
  CheckMiddleRank(k, n);
  ForEachNonAdjacentSubset(n, [&](const NonAdjacentSet& a) {
    visit(BuildSparsePavingPositroid(a, k));
  });
}

std::vector<SparsePavingPositroid> EnumerateSparsePaving(int k, int n) {
  std::vector<SparsePavingPositroid> out;
  ForEachSparsePavingPositroid(
      k, n, [&](const SparsePavingPositroid& p) { out.push_back(p); });
  return out;
}

BigInt CountSparsePaving(int k, int n) {
  if (n < 1 || k < 1 || k > n - 1) {
    throw DomainError("sparse paving positroids are counted for 1 <= k <= "
                      "n-1, got k = " +
                      std::to_string(k) + ", n = " + std::to_string(n));
  }
  if (k == 1 || k == n - 1) return BigInt(n + 1);
  return SCount(n);
}

RecurrenceCase ClassifyRecurrenceCase(const NonAdjacentSet& a) {
  const int n = a.n();
  if (n < 4) throw DomainError("the recurrence cases need n >= 4");
  if (a.contains(n)) return RecurrenceCase::kWithLast;
  if (a.contains(1) && a.contains(n - 1)) {
    return RecurrenceCase::kFirstAndPenultimate;
  }
  return RecurrenceCase::kWithoutLast;
}

NonAdjacentSet RecurrenceCaseImage(const NonAdjacentSet& a) {
  const int n = a.n();
  switch (ClassifyRecurrenceCase(a)) {
    case RecurrenceCase::kWithoutLast:
      return NonAdjacentSet(Subset::FromMask(n - 1, a.mask()));
    case RecurrenceCase::kFirstAndPenultimate:
      return NonAdjacentSet(Subset::FromMask(n - 2, a.mask() & ~Bit(n - 1)));
    case RecurrenceCase::kWithLast:
      return NonAdjacentSet(Subset::FromMask(n - 2, a.mask() & ~Bit(n)));
  }
  throw InternalError("unreachable recurrence case");
}

}  // namespace sppos
