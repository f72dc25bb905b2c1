// Copyright 2026 The combchoice Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "combchoice/bundle.h"
#include "combchoice/choice_function.h"
#include "combchoice/errors.h"
#include "combchoice/generators.h"
#include "combchoice/ground_set.h"
#include "combchoice/linear_order.h"
#include "combchoice/relation.h"
#include "oracles.h"

namespace combchoice {
namespace {

TEST(GroundSetTest, LabelsAndIndices) {
  const GroundSet g({"x", "y", "z"});
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.IndexOf("y"), 1);
  EXPECT_FALSE(g.IndexOf("w").has_value());
  EXPECT_THROW(g.IndexOrThrow("w"), InputError);
  EXPECT_EQ(g.Full().bits(), 0b111u);
}

TEST(GroundSetTest, RejectsDuplicateAndOversizedLabels) {
  EXPECT_THROW(GroundSet({"a", "a"}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i <= GroundSet::kMaxSize; ++i) many.push_back(std::to_string(i));
  EXPECT_THROW(GroundSet{many}, Error);
}

TEST(GroundSetTest, FormatAndParseKeys) {
  const GroundSet g = GroundSet::Letters(3);
  const Bundle ac = g.Parse({"a", "c"});
  EXPECT_EQ(ac.bits(), 0b101u);
  EXPECT_EQ(g.Format(ac), "{a,c}");
  EXPECT_EQ(g.Key(ac), "a,c");
  EXPECT_EQ(g.ParseKey("a,c"), ac);
  EXPECT_EQ(g.ParseKey(""), Bundle());
  EXPECT_EQ(g.Format(Bundle()), "{}");
  EXPECT_THROW(g.ParseKey("a,q"), InputError);
}

TEST(BundleTest, SetOperations) {
  const Bundle a = Bundle::FromBits(0b0110);
  const Bundle b = Bundle::FromBits(0b0011);
  EXPECT_EQ((a | b).bits(), 0b0111u);
  EXPECT_EQ((a & b).bits(), 0b0010u);
  EXPECT_EQ((a - b).bits(), 0b0100u);
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(Bundle::FromBits(0b0010).IsSubsetOf(a));
  EXPECT_EQ(a.Members(), (std::vector<int>{1, 2}));
}

TEST(BundleTest, SubsetEnumerationVisitsEverySubsetOnce) {
  const Bundle s = Bundle::FromBits(0b10110);
  std::vector<std::uint32_t> seen;
  ForEachSubset(s, [&](Bundle t) {
    EXPECT_TRUE(t.IsSubsetOf(s));
    seen.push_back(t.bits());
  });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

TEST(LinearOrderTest, TopAndTopK) {
  const GroundSet g = GroundSet::Letters(4);
  const LinearOrder order = LinearOrder::FromLabels(g, {"c", "a", "d", "b"});
  EXPECT_EQ(order.Top(g.Parse({"a", "b"})), 0);
  EXPECT_FALSE(order.Top(Bundle()).has_value());
  EXPECT_EQ(order.TopK(g.Full(), 2), g.Parse({"a", "c"}));
  EXPECT_EQ(order.Format(g), "c>a>d>b");
}

TEST(LinearOrderTest, RejectsNonPermutations) {
  EXPECT_THROW(LinearOrder({0, 0, 1}), InputError);
  EXPECT_THROW(LinearOrder({0, 2}), InputError);
}

TEST(LinearOrderTest, TopIsMaximalInEveryNonemptySet) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearOrder order = RandomLinearOrder(6, rng);
    ForEachBundle(6, [&](Bundle s) {
      const auto top = order.Top(s);
      if (s.empty()) {
        EXPECT_FALSE(top.has_value());
        return;
      }
      ASSERT_TRUE(top.has_value());
      EXPECT_TRUE(s.Contains(*top));
      for (int b : s) EXPECT_FALSE(order.Prefers(b, *top));
    });
  }
}

TEST(RelationTest, TransitiveClosureIsIdempotentOnSmallCarriers) {
  // Every relation on 3 elements.
  for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
    Relation r(3);
    for (int k = 0; k < 9; ++k) {
      if (bits >> k & 1) r.Add(k / 3, k % 3);
    }
    const Relation closed = TransitiveClosure(r);
    EXPECT_TRUE(closed.IsTransitive());
    EXPECT_TRUE(r.IsSubsetOf(closed));
    EXPECT_EQ(TransitiveClosure(closed), closed);
  }
}

TEST(RelationTest, TransitiveClosureIsIdempotentOnRandomCarriers) {
  Rng rng(11);
  std::bernoulli_distribution coin(0.15);
  for (int trial = 0; trial < 100; ++trial) {
    Relation r(6);
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        if (coin(rng)) r.Add(a, b);
      }
    }
    const Relation closed = TransitiveClosure(r);
    EXPECT_EQ(TransitiveClosure(closed), closed);
  }
}

TEST(RelationTest, SzpilrajnExtendsEveryAcyclicRelation) {
  // All relations on 4 elements; the acyclic ones must be extended.
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    Relation r(4);
    for (int k = 0; k < 16; ++k) {
      if (bits >> k & 1) r.Add(k / 4, k % 4);
    }
    const Relation closed = TransitiveClosure(r);
    bool acyclic = true;
    for (int a = 0; a < 4; ++a) acyclic = acyclic && !closed.Contains(a, a);
    if (!acyclic) {
      EXPECT_THROW(SzpilrajnExtend(r), CycleError);
      continue;
    }
    const LinearOrder order = SzpilrajnExtend(r);
    for (const auto& [a, b] : r.Pairs()) EXPECT_TRUE(order.Prefers(a, b));
  }
}

TEST(RelationTest, SzpilrajnBreaksTiesByIndex) {
  Relation r(4);
  r.Add(3, 1);
  EXPECT_EQ(SzpilrajnExtend(r).ranking(), (std::vector<int>{0, 2, 3, 1}));
}

TEST(RelationTest, CycleErrorCarriesCycle) {
  Relation r(3);
  r.Add(0, 1);
  r.Add(1, 2);
  r.Add(2, 0);
  try {
    SzpilrajnExtend(r);
    FAIL() << "expected a cycle";
  } catch (const CycleError& e) {
    EXPECT_GE(e.cycle().size(), 3u);
  }
}

TEST(ChoiceFunctionTest, TableValidation) {
  const GroundSet g = GroundSet::Letters(2);
  const auto b = [](std::uint32_t bits) { return Bundle::FromBits(bits); };
  EXPECT_THROW(ChoiceFunction::FromTable(g, {b(0), b(1), b(2)}), InputError);
  // C({a}) = {b} is not a subset.
  EXPECT_THROW(ChoiceFunction::FromTable(g, {b(0), b(2), b(2), b(3)}),
               InputError);
  EXPECT_THROW(ChoiceFunction::FromTable(g, {b(1), b(1), b(2), b(3)}),
               InputError);
  const auto c = ChoiceFunction::FromTable(g, {b(0), b(1), b(2), b(1)});
  EXPECT_EQ(c(b(3)), b(1));
  EXPECT_THROW(c(b(4)), InputError);
}

TEST(ChoiceFunctionTest, EveryCodedFunctionIsAChoiceFunction) {
  const GroundSet g = GroundSet::Letters(3);
  ASSERT_EQ(ChoiceFunctionCount(3), 4096u);
  std::set<std::vector<std::uint32_t>> distinct;
  for (std::uint64_t code = 0; code < ChoiceFunctionCount(3); ++code) {
    const ChoiceFunction c = ChoiceFunctionFromCode(g, code);
    const oracle::Table t = oracle::ToTable(c);
    EXPECT_EQ(t[0], 0u);
    for (std::uint32_t s = 0; s < t.size(); ++s) {
      EXPECT_TRUE(oracle::Sub(t[s], s));
    }
    distinct.insert(t);
  }
  EXPECT_EQ(distinct.size(), 4096u);
}

TEST(ChoiceFunctionTest, CompileMatchesRule) {
  Rng rng(3);
  const GroundSet g = GroundSet::Numbered(6);
  for (int trial = 0; trial < 20; ++trial) {
    const ChoiceFunction c = RandomReserves(g, rng);
    EXPECT_FALSE(c.is_table());
    const ChoiceFunction compiled = c.Compile();
    EXPECT_TRUE(compiled.is_table());
    EXPECT_TRUE(SameChoices(c, compiled));
    EXPECT_FALSE(FirstDisagreement(c, compiled).has_value());
  }
}

TEST(ChoiceFunctionTest, IdentityAndEmpty) {
  const GroundSet g = GroundSet::Letters(3);
  const auto id = ChoiceFunction::Identity(g);
  const auto none = ChoiceFunction::Empty(g);
  ForEachBundle(3, [&](Bundle s) {
    EXPECT_EQ(id(s), s);
    EXPECT_EQ(none(s), Bundle());
  });
  EXPECT_EQ(FirstDisagreement(id, none), Bundle::FromBits(1));
}

}  // namespace
}  // namespace combchoice
