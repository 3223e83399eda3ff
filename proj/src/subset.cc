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

#include "sppos/subset.h"

#include <sstream>

#include "sppos/errors.h"

namespace sppos {

void CheckGroundSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidInputError("ground set size " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxGroundSize) +
                            "]");
  }
}

Mask RotateDown(Mask mask, int n, int shift) {
  if (n == 0) return mask;
  shift = Wrap(shift + 1, n) - 1;
  if (shift == 0) return mask;
  const Mask low = mask & (Bit(shift + 1) - 1);
  return (mask >> shift) | (low << (n - shift));
}

Subset Subset::FromMembers(int n, std::span<const int> members) {
  CheckGroundSize(n);
  Mask mask = 0;
  for (int e : members) {
    if (e < 1 || e > n) {
      throw InvalidInputError("element " + std::to_string(e) +
                              " outside [1, " + std::to_string(n) + "]");
    }
    if (mask & Bit(e)) {
      throw InvalidInputError("repeated element " + std::to_string(e));
    }
    mask |= Bit(e);
  }
  return Subset(n, mask);
}

Subset Subset::FromMask(int n, Mask mask) {
  CheckGroundSize(n);
  if (mask & ~FullMask(n)) {
    throw InvalidInputError("mask has elements outside [1, " +
                            std::to_string(n) + "]");
  }
  return Subset(n, mask);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

Subset Subset::With(int element) const {
  if (element < 1 || element > n_) {
    throw InvalidInputError("element " + std::to_string(element) +
                            " outside ground set");
  }
  return Subset(n_, mask_ | Bit(element));
}

Subset Subset::Without(int element) const {
  if (element < 1 || element > n_) {
    throw InvalidInputError("element " + std::to_string(element) +
                            " outside ground set");
  }
  return Subset(n_, mask_ & ~Bit(element));
}

std::string Subset::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : members()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

bool LexLess(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Mask> AllKSubsetMasks(int n, int k) {
  CheckGroundSize(n);
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(Binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack.
  const Mask limit = Bit(n + 1);
  for (Mask m = FullMask(k); m < limit;) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<Subset> AllKSubsets(int n, int k) {
  std::vector<Subset> out;
  for (Mask m : AllKSubsetMasks(n, k)) out.push_back(Subset::FromMask(n, m));
  return out;
}

}  // namespace sppos
