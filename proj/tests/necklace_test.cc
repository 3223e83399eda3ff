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

#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "sppos/errors.h"

namespace sppos {
namespace {

using oracles::Family;

Subset S(int n, std::initializer_list<int> members) {
  return Subset::FromMembers(n, members);
}

std::vector<Subset> Entries(int n,
                            std::initializer_list<std::initializer_list<int>> e) {
  std::vector<Subset> out;
  for (auto s : e) out.push_back(S(n, s));
  return out;
}

GrassmannNecklace Necklace(int n,
                           std::initializer_list<std::initializer_list<int>> e) {
  return GrassmannNecklace(Entries(n, e));
}

GrassmannNecklace LoopNecklace() {
  return Necklace(4, {{1, 2}, {2, 3}, {1, 3}, {1, 2}});
}

Family AllBut(int n, int k, Family removed) {
  Family out = oracles::ToFamily(AllKSubsets(n, k));
  for (const auto& r : removed) out.erase(r);
  return out;
}

TEST(CyclicOrderTest, Examples) {
  EXPECT_TRUE(CyclicLe(1, 2, 4, 5));
  EXPECT_TRUE(CyclicLe(3, 1, 2, 5));
  EXPECT_FALSE(CyclicLe(3, 2, 1, 5));
  EXPECT_TRUE(CyclicLe(3, 5, 1, 5));
  EXPECT_THROW(CyclicLe(6, 1, 2, 5), InvalidInputError);
  EXPECT_THROW(CyclicLe(1, 0, 2, 5), InvalidInputError);
}

TEST(GaleOrderTest, Examples) {
  EXPECT_TRUE(GaleLe(1, S(4, {1, 3}), S(4, {2, 3})));
  EXPECT_FALSE(GaleLe(1, S(4, {2, 3}), S(4, {1, 3})));
  for (int t = 1; t <= 5; ++t) EXPECT_TRUE(GaleLe(t, S(5, {2, 5}), S(5, {2, 5})));
  EXPECT_THROW(GaleLe(1, S(4, {1}), S(4, {1, 2})), InvalidInputError);
}

TEST(GaleOrderTest, MatchesSortedComparisonOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto sets = AllKSubsets(n, k);
      for (int t = 1; t <= n; ++t) {
        for (const Subset& a : sets) {
          for (const Subset& b : sets) {
            ASSERT_EQ(GaleLe(t, a, b),
                      oracles::GaleLe(t, n, oracles::ToIntSet(a),
                                      oracles::ToIntSet(b)));
          }
        }
      }
    }
  }
}

TEST(CyclicIntervalTest, Examples) {
  EXPECT_EQ(CyclicInterval(3, 6, 3), S(6, {3, 4, 5}));
  EXPECT_EQ(CyclicInterval(4, 12, 6), S(12, {6, 7, 8, 9}));
  EXPECT_EQ(CyclicInterval(2, 4, 4), S(4, {4, 1}));
  EXPECT_THROW(CyclicInterval(0, 4, 1), InvalidInputError);
  EXPECT_THROW(CyclicInterval(2, 4, 5), InvalidInputError);
}

TEST(CyclicIntervalTest, IsTheGaleMinimumAndShiftedIsSecond) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int i = 1; i <= n; ++i) {
        const Subset c = CyclicInterval(k, n, i);
        const Subset second = ShiftedCyclicInterval(k, n, i);
        for (const Subset& j : AllKSubsets(n, k)) {
          ASSERT_TRUE(GaleLe(i, c, j));
          if (j != c) {
            ASSERT_TRUE(GaleLe(i, second, j)) << j.ToString();
          }
        }
      }
    }
  }
}

TEST(CyclicIntervalTest, NeighboursDifferByTwoOthersByAtLeastFour) {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const int diff = SymmetricDifferenceSize(
              CyclicInterval(k, n, i).mask(), CyclicInterval(k, n, j).mask());
          const bool neighbours = j == Wrap(i + 1, n) || j == Wrap(i - 1, n);
          ASSERT_EQ(diff == 2, neighbours);
          if (!neighbours) {
            ASSERT_GE(diff, 4);
          }
        }
      }
    }
  }
}

TEST(SchubertTest, Examples) {
  EXPECT_EQ(oracles::ToFamily(SchubertBases(S(4, {1, 3}), 1)),
            AllBut(4, 2, {{1, 2}}));
  EXPECT_EQ(oracles::ToFamily(SchubertBases(S(4, {3, 4}), 3)),
            oracles::ToFamily(AllKSubsets(4, 2)));
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(SchubertBases(CyclicInterval(3, 6, t), t).size(), 20u);
  }
  EXPECT_THROW(SchubertBases(S(4, {1}), 0), InvalidInputError);
}

TEST(NecklaceValidityTest, Examples) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<Subset> entries;
      for (int i = 1; i <= n; ++i) entries.push_back(CyclicInterval(k, n, i));
      EXPECT_TRUE(IsValidNecklace(entries));
    }
  }
  const auto bad = Entries(4, {{1, 3}, {2, 4}, {3, 1}, {4, 2}});
  EXPECT_FALSE(IsValidNecklace(bad));
  EXPECT_THAT(*FindNecklaceViolation(bad), ::testing::HasSubstr("i=1"));
  EXPECT_TRUE(IsValidNecklace(LoopNecklace().entries()));
}

TEST(NecklaceValidityTest, RejectsMalformedSequences) {
  EXPECT_THROW(FindNecklaceViolation(Entries(4, {{1, 2}, {2, 3}})),
               InvalidInputError);
  EXPECT_THROW(FindNecklaceViolation(Entries(3, {{1}, {2, 3}, {3}})),
               InvalidInputError);
  EXPECT_THROW(GrassmannNecklace(Entries(4, {{1, 3}, {2, 4}, {3, 1}, {4, 2}})),
               InvalidInputError);
}

TEST(NecklaceToPositroidTest, Examples) {
  EXPECT_EQ(NecklaceToPositroid(GrassmannNecklace::Uniform(3, 6)),
            Uniform(3, 6));
  EXPECT_EQ(oracles::BasesOf(NecklaceToPositroid(
                Necklace(4, {{1, 3}, {2, 3}, {3, 4}, {4, 1}}))),
            AllBut(4, 2, {{1, 2}}));
  EXPECT_EQ(oracles::BasesOf(NecklaceToPositroid(LoopNecklace())),
            (Family{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(PositroidNecklaceTest, Examples) {
  EXPECT_EQ(PositroidNecklace(Uniform(2, 5)), GrassmannNecklace::Uniform(2, 5));
  const Matroid no12 = NecklaceToPositroid(
      Necklace(4, {{1, 3}, {2, 3}, {3, 4}, {4, 1}}));
  EXPECT_EQ(PositroidNecklace(no12),
            Necklace(4, {{1, 3}, {2, 3}, {3, 4}, {4, 1}}));
  EXPECT_EQ(PositroidNecklace(NecklaceToPositroid(LoopNecklace())),
            LoopNecklace());
}

TEST(IsPositroidTest, Examples) {
  EXPECT_TRUE(IsPositroid(Uniform(3, 7)));
  EXPECT_TRUE(IsPositroid(NecklaceToPositroid(
      Necklace(4, {{1, 3}, {2, 3}, {3, 4}, {4, 1}}))));
  std::vector<Mask> no13;
  for (Mask m : AllKSubsetMasks(4, 2)) {
    if (m != S(4, {1, 3}).mask()) no13.push_back(m);
  }
  EXPECT_FALSE(IsPositroid(Matroid(4, no13)));
}

TEST(NecklacePropertyTest, EveryMatroidHasAValidNecklace) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto candidates = AllKSubsetMasks(n, k);
      for (std::uint64_t chosen = 1;
           chosen < (std::uint64_t{1} << candidates.size()); ++chosen) {
        std::vector<Mask> family;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (chosen >> i & 1) family.push_back(candidates[i]);
        }
        if (!CheckExchangeAxiom(family, n)) continue;
        // The constructor validates the necklace axioms.
        const GrassmannNecklace necklace = PositroidNecklace(Matroid(n, family));
        ASSERT_TRUE(IsValidNecklace(necklace.entries()));
      }
    }
  }
}

TEST(NecklacePropertyTest, NecklaceRoundTripIsIdentity) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const GrassmannNecklace& nk : EnumerateNecklaces(k, n)) {
        ASSERT_EQ(PositroidNecklace(NecklaceToPositroid(nk)), nk);
      }
    }
  }
}

TEST(NecklacePropertyTest, EnumerationMatchesFilteredSequences) {
  // Brute force: every n-tuple of k-subsets filtered by the axioms.
  for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {1, 4}, {3, 4}}) {
    const auto sets = AllKSubsets(n, k);
    std::set<std::vector<Subset>> expected;
    std::vector<std::size_t> index(n, 0);
    while (true) {
      std::vector<Subset> entries;
      for (std::size_t i : index) entries.push_back(sets[i]);
      if (IsValidNecklace(entries)) expected.insert(entries);
      int pos = 0;
      while (pos < n && ++index[pos] == sets.size()) index[pos++] = 0;
      if (pos == n) break;
    }
    std::set<std::vector<Subset>> found;
    for (const auto& nk : EnumerateNecklaces(k, n)) found.insert(nk.entries());
    EXPECT_EQ(found, expected) << "k=" << k << " n=" << n;
  }
  // Known positroid counts: 33 in Gr(2,4), 883 in Gr(3,6).
  EXPECT_EQ(EnumerateNecklaces(2, 4).size(), 33u);
  EXPECT_EQ(EnumerateNecklaces(3, 6).size(), 883u);
}

TEST(NonAdjacentTest, FollowsCyclicAdjacency) {
  EXPECT_TRUE(IsNonAdjacent(S(1, {1})));
  EXPECT_TRUE(IsNonAdjacent(S(2, {2})));
  EXPECT_FALSE(IsNonAdjacent(S(2, {1, 2})));
  EXPECT_FALSE(IsNonAdjacent(S(3, {1, 3})));
  EXPECT_TRUE(IsNonAdjacent(S(4, {1, 3})));
  EXPECT_FALSE(IsNonAdjacent(S(6, {1, 6})));
  EXPECT_THROW(NonAdjacentSet(S(5, {2, 3})), InvalidInputError);
  for (int n = 1; n <= 8; ++n) {
    for (Mask m = 0; m <= FullMask(n); ++m) {
      const Subset s = Subset::FromMask(n, m);
      ASSERT_EQ(IsNonAdjacent(s), oracles::NonAdjacent(oracles::ToIntSet(s), n));
    }
  }
}

TEST(SparsePavingWitnessTest, Examples) {
  EXPECT_EQ(SparsePavingWitness(GrassmannNecklace::Uniform(3, 7))->set(),
            Subset::Empty(7));
  EXPECT_EQ(SparsePavingWitness(Necklace(4, {{1, 3}, {2, 3}, {3, 4}, {4, 1}}))
                ->set(),
            S(4, {1}));
  EXPECT_FALSE(SparsePavingWitness(LoopNecklace()).has_value());
  EXPECT_THROW(SparsePavingWitness(GrassmannNecklace::Uniform(1, 4)),
               DomainError);
  EXPECT_THROW(SparsePavingWitness(GrassmannNecklace::Uniform(3, 4)),
               DomainError);
}

TEST(NecklaceFromNonAdjacentTest, Examples) {
  EXPECT_EQ(NecklaceFromNonAdjacent(NonAdjacentSet(Subset::Empty(6)), 3),
            GrassmannNecklace::Uniform(3, 6));
  const GrassmannNecklace three =
      NecklaceFromNonAdjacent(NonAdjacentSet::FromMembers(6, std::vector{3}), 3);
  EXPECT_EQ(three.entry(3), S(6, {3, 4, 6}));
  for (int i : {1, 2, 4, 5, 6}) EXPECT_EQ(three.entry(i), CyclicInterval(3, 6, i));
  const GrassmannNecklace direct_sum = NecklaceFromNonAdjacent(
      NonAdjacentSet::FromMembers(4, std::vector{1, 3}), 2);
  EXPECT_EQ(direct_sum, Necklace(4, {{1, 3}, {2, 3}, {3, 1}, {4, 1}}));
  EXPECT_EQ(NecklaceToPositroid(direct_sum).NonBasisMasks(),
            (std::vector<Mask>{S(4, {1, 2}).mask(), S(4, {3, 4}).mask()}));
  EXPECT_THROW(
      NecklaceFromNonAdjacent(NonAdjacentSet(Subset::Empty(4)), 1),
      DomainError);
}

TEST(NecklacePropertyTest, NonAdjacentNecklacesDropExactlyTheirIntervals) {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      for (Mask m = 0; m <= FullMask(n); ++m) {
        const Subset s = Subset::FromMask(n, m);
        if (!IsNonAdjacent(s)) continue;
        const NonAdjacentSet a(s);
        const GrassmannNecklace nk = NecklaceFromNonAdjacent(a, k);
        ASSERT_EQ(SparsePavingWitness(nk), a);
        const Matroid p = NecklaceToPositroid(nk);
        ASSERT_EQ(p.num_bases(), Binomial(n, k) - s.size());
        std::vector<Mask> intervals;
        for (int i : s.members()) intervals.push_back(CyclicInterval(k, n, i).mask());
        std::sort(intervals.begin(), intervals.end());
        ASSERT_EQ(p.NonBasisMasks(), intervals);
      }
    }
  }
}

TEST(NecklacePropertyTest, WitnessIffSparsePavingOnEveryNecklace) {
  for (auto [k, n] :
       {std::pair{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {4, 6}}) {
    for (const GrassmannNecklace& nk : EnumerateNecklaces(k, n)) {
      ASSERT_EQ(SparsePavingWitness(nk).has_value(),
                IsSparsePaving(NecklaceToPositroid(nk)));
    }
  }
}

}  // namespace
}  // namespace sppos
