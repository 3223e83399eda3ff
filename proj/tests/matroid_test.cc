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

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "sppos/errors.h"
#include "sppos/necklace.h"

namespace sppos {
namespace {

using oracles::Family;
using oracles::IntSet;

Subset S(int n, std::initializer_list<int> members) {
  return Subset::FromMembers(n, members);
}

Matroid FromSets(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> bases;
  for (auto s : sets) bases.push_back(S(n, s).mask());
  return Matroid(n, bases);
}

// All 2-subsets of [4] except those listed.
Matroid U24Without(std::initializer_list<std::initializer_list<int>> removed) {
  std::vector<Mask> bases;
  for (Mask m : AllKSubsetMasks(4, 2)) {
    bool keep = true;
    for (auto r : removed) keep = keep && m != S(4, r).mask();
    if (keep) bases.push_back(m);
  }
  return Matroid(4, bases);
}

// Every matroid of rank k on [n] found by scanning all basis families.
std::vector<Matroid> AllMatroids(int k, int n) {
  const std::vector<Mask> candidates = AllKSubsetMasks(n, k);
  std::vector<Matroid> out;
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << candidates.size());
       ++chosen) {
    std::vector<Mask> family;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (chosen >> i & 1) family.push_back(candidates[i]);
    }
    if (CheckExchangeAxiom(family, n)) out.emplace_back(n, family);
  }
  return out;
}

// Matroids on at most six elements: every matroid for n <= 5 plus every
// positroid for n = 6.
const std::vector<Matroid>& SmallMatroids() {
  static const auto* all = [] {
    auto* out = new std::vector<Matroid>;
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (Matroid& m : AllMatroids(k, n)) out->push_back(std::move(m));
      }
    }
    for (int k = 0; k <= 6; ++k) {
      for (const GrassmannNecklace& nk : EnumerateNecklaces(k, 6)) {
        out->push_back(NecklaceToPositroid(nk));
      }
    }
    return out;
  }();
  return *all;
}

TEST(ExchangeAxiomTest, Examples) {
  const std::vector<Mask> full = AllKSubsetMasks(4, 2);
  EXPECT_TRUE(CheckExchangeAxiom(full, 4));
  const std::vector<Mask> split = {S(4, {1, 2}).mask(), S(4, {3, 4}).mask()};
  EXPECT_FALSE(CheckExchangeAxiom(split, 4));
  const std::vector<Mask> single = {S(4, {1, 2}).mask()};
  EXPECT_TRUE(CheckExchangeAxiom(single, 4));
}

TEST(ExchangeAxiomTest, RejectsEmptyAndMixedFamilies) {
  EXPECT_THROW(CheckExchangeAxiom(std::vector<Mask>{}, 4), InvalidInputError);
  const std::vector<Mask> mixed = {S(4, {1}).mask(), S(4, {1, 2}).mask()};
  EXPECT_THROW(CheckExchangeAxiom(mixed, 4), InvalidInputError);
  EXPECT_THROW(Matroid(4, mixed), InvalidInputError);
  EXPECT_THROW(Matroid(4, {S(4, {1, 2}).mask(), S(4, {3, 4}).mask()}),
               InvalidInputError);
}

TEST(ExchangeAxiomTest, AgreesWithSetBasedOracleOnEveryFamily) {
  for (auto [k, n] : {std::pair{1, 4}, {2, 4}, {2, 5}, {3, 5}}) {
    const std::vector<Mask> candidates = AllKSubsetMasks(n, k);
    for (std::uint64_t chosen = 1;
         chosen < (std::uint64_t{1} << candidates.size()); ++chosen) {
      std::vector<Mask> family;
      Family sets;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (chosen >> i & 1) {
          family.push_back(candidates[i]);
          sets.insert(oracles::ToIntSet(Subset::FromMask(n, candidates[i])));
        }
      }
      ASSERT_EQ(CheckExchangeAxiom(family, n), oracles::ExchangeAxiom(sets))
          << "k=" << k << " n=" << n << " family " << chosen;
    }
  }
}

TEST(RankTest, Examples) {
  EXPECT_EQ(RankOf(Uniform(2, 4), S(4, {1})), 1);
  EXPECT_EQ(RankOf(U24Without({{1, 2}}), S(4, {1, 2})), 1);
  EXPECT_EQ(RankOf(Uniform(2, 4), Subset::Empty(4)), 0);
  EXPECT_EQ(RankOf(U24Without({{1, 2}}), Subset::Full(4)), 2);
  EXPECT_THROW(RankOf(Uniform(2, 4), S(5, {5})), InvalidInputError);
}

TEST(CircuitsTest, Examples) {
  EXPECT_EQ(oracles::ToFamily(Circuits(Uniform(2, 4))),
            oracles::ToFamily(AllKSubsets(4, 3)));
  EXPECT_EQ(oracles::ToFamily(Circuits(U24Without({{1, 2}}))),
            (Family{{1, 2}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(oracles::ToFamily(Circuits(FromSets(3, {{1}, {2}}))),
            (Family{{3}, {1, 2}}));
}

TEST(HyperplanesTest, Examples) {
  EXPECT_EQ(oracles::ToFamily(Hyperplanes(Uniform(2, 4))),
            (Family{{1}, {2}, {3}, {4}}));
  EXPECT_EQ(oracles::ToFamily(Hyperplanes(U24Without({{1, 2}}))),
            (Family{{1, 2}, {3}, {4}}));
  EXPECT_EQ(oracles::ToFamily(Hyperplanes(Uniform(1, 3))), (Family{IntSet{}}));
  EXPECT_THROW(Hyperplanes(Uniform(0, 3)), DomainError);
}

TEST(DualTest, Examples) {
  EXPECT_EQ(Dual(Uniform(2, 4)), Uniform(2, 4));
  EXPECT_EQ(Dual(U24Without({{1, 2}})), U24Without({{3, 4}}));
  EXPECT_EQ(Dual(Uniform(1, 3)), Uniform(2, 3));
}

TEST(CircuitHyperplanesTest, Examples) {
  EXPECT_TRUE(CircuitHyperplanes(Uniform(2, 4)).sets.empty());
  EXPECT_EQ(oracles::ToFamily(CircuitHyperplanes(U24Without({{1, 2}})).sets),
            (Family{{1, 2}}));
  EXPECT_EQ(oracles::ToFamily(
                CircuitHyperplanes(U24Without({{1, 2}, {3, 4}})).sets),
            (Family{{1, 2}, {3, 4}}));
  EXPECT_THROW(CircuitHyperplanes(Uniform(0, 2)), DomainError);
}

TEST(RelaxTest, Examples) {
  EXPECT_EQ(Relax(U24Without({{1, 2}}), S(4, {1, 2})), Uniform(2, 4));
  EXPECT_EQ(Relax(U24Without({{1, 2}, {3, 4}}), S(4, {1, 2})),
            U24Without({{3, 4}}));
}

TEST(RelaxTest, RejectsSetsThatAreNotCircuitHyperplanes) {
  EXPECT_THROW(Relax(Uniform(2, 4), S(4, {1, 2})), PreconditionError);
  EXPECT_THROW(Relax(U24Without({{1, 2}}), S(4, {1, 2, 3})),
               PreconditionError);
  // {1,4} is a non-basis of the loop matroid but not a circuit.
  EXPECT_THROW(Relax(FromSets(4, {{1, 2}, {1, 3}, {2, 3}}), S(4, {1, 4})),
               PreconditionError);
}

TEST(RelaxTest, RelaxingEveryCircuitHyperplaneGivesUniform) {
  for (const Matroid& m : SmallMatroids()) {
    if (m.k() == 0 || !IsSparsePaving(m)) continue;
    Matroid current = m;
    for (const Subset& c : CircuitHyperplanes(m).sets) {
      current = Relax(current, c);
      ASSERT_TRUE(oracles::ExchangeAxiom(oracles::BasesOf(current)));
    }
    ASSERT_EQ(current, Uniform(m.k(), m.n()));
  }
}

TEST(RelaxTest, ResultIsAlwaysAMatroid) {
  for (const Matroid& m : SmallMatroids()) {
    if (m.k() == 0 || m.n() > 5) continue;
    for (const Subset& c : CircuitHyperplanes(m).sets) {
      const Matroid relaxed = Relax(m, c);
      ASSERT_TRUE(oracles::ExchangeAxiom(oracles::BasesOf(relaxed)));
      ASSERT_EQ(relaxed.num_bases(), m.num_bases() + 1);
    }
  }
}

TEST(PavingTest, Examples) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(IsPaving(Uniform(k, n)));
  }
  EXPECT_TRUE(IsPaving(U24Without({{1, 2}})));
  EXPECT_FALSE(IsPaving(FromSets(4, {{1, 2}, {1, 3}, {2, 3}})));
}

TEST(SparsePavingTest, Examples) {
  EXPECT_TRUE(IsSparsePaving(Uniform(2, 5)));
  EXPECT_TRUE(IsSparsePaving(U24Without({{1, 2}, {3, 4}})));
  const Matroid loop = FromSets(4, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(IsSparsePaving(loop));
  const auto pair = FindCloseNonBasisPair(loop);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->first, S(4, {1, 4}));
  EXPECT_EQ(pair->second, S(4, {2, 4}));
  EXPECT_FALSE(FindCloseNonBasisPair(U24Without({{1, 2}, {3, 4}})));
}

TEST(SparsePavingTest, EachDefinitionIsReportedSeparately) {
  const SparsePavingDefinitions defs =
      EvaluateSparsePavingDefinitions(FromSets(4, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_FALSE(defs.non_bases_are_circuit_hyperplanes);
  EXPECT_FALSE(defs.non_bases_pairwise_far);
  EXPECT_FALSE(defs.relaxation_gives_uniform);
  EXPECT_TRUE(defs.Agree());
}

TEST(UniformTest, Examples) {
  EXPECT_EQ(Uniform(2, 4).num_bases(), 6u);
  EXPECT_EQ(Uniform(0, 3).basis_masks(), std::vector<Mask>{0});
  EXPECT_EQ(Uniform(3, 3).basis_masks(), std::vector<Mask>{FullMask(3)});
  EXPECT_THROW(Uniform(4, 3), InvalidInputError);
  EXPECT_THROW(Uniform(-1, 3), InvalidInputError);
}

TEST(UniformTest, CircuitsHaveSizeKPlusOne) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto circuits = Circuits(Uniform(k, n));
      EXPECT_EQ(circuits.size(), Binomial(n, k + 1));
      for (const Subset& c : circuits) ASSERT_EQ(c.size(), k + 1);
    }
  }
}

TEST(MatroidPropertyTest, DoubleDualIsIdentity) {
  for (const Matroid& m : SmallMatroids()) ASSERT_EQ(Dual(Dual(m)), m);
}

TEST(MatroidPropertyTest, SparsePavingIffMatroidAndDualArePaving) {
  for (const Matroid& m : SmallMatroids()) {
    ASSERT_EQ(IsSparsePaving(m), IsPaving(m) && IsPaving(Dual(m)))
        << "n=" << m.n() << " k=" << m.k();
  }
}

TEST(MatroidPropertyTest, CircuitsAndHyperplanesMatchOracle) {
  for (const Matroid& m : SmallMatroids()) {
    if (m.n() > 5) continue;
    const Family bases = oracles::BasesOf(m);
    ASSERT_EQ(oracles::ToFamily(Circuits(m)), oracles::Circuits(bases, m.n()));
    if (m.k() == 0) continue;
    ASSERT_EQ(oracles::ToFamily(Hyperplanes(m)),
              oracles::Hyperplanes(bases, m.n(), m.k()));
  }
}

TEST(MatroidPropertyTest, RankMatchesOracleOnEverySubset) {
  for (const Matroid& m : SmallMatroids()) {
    if (m.n() > 4) continue;
    const Family bases = oracles::BasesOf(m);
    for (Mask s = 0; s <= FullMask(m.n()); ++s) {
      const Subset a = Subset::FromMask(m.n(), s);
      ASSERT_EQ(RankOf(m, a), oracles::Rank(bases, oracles::ToIntSet(a)));
    }
  }
}

TEST(MatroidPropertyTest, DefinitionsAgreeOnEveryMatroid) {
  for (const Matroid& m : SmallMatroids()) {
    ASSERT_TRUE(EvaluateSparsePavingDefinitions(m).Agree())
        << "n=" << m.n() << " k=" << m.k();
  }
}

}  // namespace
}  // namespace sppos
