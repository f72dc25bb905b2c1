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

#include <algorithm>

#include "combchoice/axioms.h"
#include "combchoice/errors.h"
#include "combchoice/generators.h"
#include "combchoice/rules.h"
#include "oracles.h"

namespace combchoice {
namespace {

struct Students {
  GroundSet g = GroundSet::Numbered(5);
  LinearOrder base = LinearOrder::FromLabels(g, {"1", "2", "3", "4", "5"});
  Labeling labels{{"m", "h", "h", "m", "l"}};
};

TEST(RulesTest, MoveToTopConventions) {
  const Students s;
  const Bundle m = s.labels.Members("m");
  EXPECT_EQ(m, s.g.Parse({"1", "4"}));
  EXPECT_EQ(MoveToTop(s.base, m, MoveConvention::kKeepGroupOrder).Format(s.g),
            "1>4>2>3>5");
  EXPECT_EQ(
      MoveToTop(s.base, m, MoveConvention::kReverseGroupOrder).Format(s.g),
      "4>1>2>3>5");
  EXPECT_EQ(MoveToTop(s.base, s.labels.Members("l"),
                      MoveConvention::kKeepGroupOrder)
                .Format(s.g),
            "5>1>2>3>4");
}

TEST(RulesTest, StudentRivalryExample) {
  const Students s;
  for (MoveConvention conv :
       {MoveConvention::kKeepGroupOrder, MoveConvention::kReverseGroupOrder}) {
    const ChoiceFunction c1 = SeqPrioRivalry(
        s.g, 3,
        {s.base, MoveToTop(s.base, s.labels.Members("l"), conv),
         MoveToTop(s.base, s.labels.Members("m"), conv)});
    EXPECT_EQ(c1(s.g.Full()), s.g.Parse({"1", "4", "5"}));
    EXPECT_TRUE(CheckCapacityFilling(c1).report.holds);
    EXPECT_TRUE(CheckSubstitutability(c1).holds);
  }
}

TEST(RulesTest, StudentReservesExample) {
  const Students s;
  const ChoiceFunction c2 =
      Reserves(s.g, 3, s.labels, {{"l", 1}, {"m", 1}, {"h", 0}}, s.base);
  EXPECT_EQ(c2(s.g.Full()), s.g.Parse({"1", "2", "5"}));
  EXPECT_TRUE(CheckCapacityFilling(c2).report.holds);
  EXPECT_TRUE(CheckSubstitutability(c2).holds);
}

TEST(RulesTest, ReservesRejectsOverCommitment) {
  const Students s;
  EXPECT_THROW(Reserves(s.g, 1, s.labels, {{"l", 1}, {"m", 1}}, s.base),
               InputError);
  EXPECT_THROW(Reserves(s.g, 3, s.labels, {{"x", 1}}, s.base), InputError);
}

TEST(RulesTest, SeqPrioRivalryNeedsCapacityOrders) {
  const Students s;
  EXPECT_THROW(SeqPrioRivalry(s.g, 2, {s.base}), InputError);
}

TEST(RulesTest, PriorityMaxPicksTopQ) {
  const GroundSet g = GroundSet::Letters(4);
  const LinearOrder o = LinearOrder::FromLabels(g, {"c", "a", "d", "b"});
  const ChoiceFunction c = PriorityMax(g, 2, o);
  EXPECT_EQ(c(g.Full()), g.Parse({"a", "c"}));
  EXPECT_EQ(c(g.Parse({"b", "d"})), g.Parse({"b", "d"}));
  EXPECT_EQ(c(g.Parse({"b"})), g.Parse({"b"}));
  EXPECT_EQ(RuleName(*c.rule()), "priority_max");
}

TEST(RulesTest, MaximizerCollectingCollectsTops) {
  const GroundSet g = GroundSet::Letters(3);
  const ChoiceFunction c = MaximizerCollecting(
      g, {LinearOrder::FromLabels(g, {"a", "c", "b"}),
          LinearOrder::FromLabels(g, {"b", "c", "a"})});
  EXPECT_EQ(c(g.Full()), g.Parse({"a", "b"}));
  EXPECT_EQ(c(g.Parse({"b", "c"})), g.Parse({"b", "c"}));
  EXPECT_EQ(c(g.Parse({"a", "c"})), g.Parse({"a", "c"}));
}

TEST(RulesTest, TwoStageAppliesSecondToRemainder) {
  const GroundSet g = GroundSet::Letters(4);
  const ChoiceFunction first =
      PriorityMax(g, 1, LinearOrder::FromLabels(g, {"d", "c", "b", "a"}));
  const ChoiceFunction second =
      PriorityMax(g, 1, LinearOrder::FromLabels(g, {"a", "b", "c", "d"}));
  const ChoiceFunction h = TwoStage(first, second);
  EXPECT_EQ(h(g.Full()), g.Parse({"a", "d"}));
  EXPECT_EQ(h(g.Parse({"a"})), g.Parse({"a"}));
  EXPECT_EQ(h(g.Parse({"b", "c"})), g.Parse({"b", "c"}));
}

TEST(RulesTest, TwoStageRejectsMismatchedGrounds) {
  const ChoiceFunction a = ChoiceFunction::Identity(GroundSet::Letters(2));
  const ChoiceFunction b = ChoiceFunction::Identity(GroundSet::Letters(3));
  EXPECT_THROW(TwoStage(a, b), InputError);
}

TEST(RulesTest, ReservesIndependentOfLabelProcessing) {
  // Label pools are disjoint, so renaming labels (which reorders them) does
  // not change the outcome.
  Rng rng(41);
  const GroundSet g = GroundSet::Numbered(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ChoiceFunction c = RandomReserves(g, rng);
    const auto& rule = std::get<ReservesRule>(c.rule()->variant);
    const auto& sorted = rule.labeling.labels();
    auto rename = [&](const std::string& label) {
      const auto rank = std::find(sorted.begin(), sorted.end(), label) -
                        sorted.begin();
      return std::string(1, static_cast<char>('Z' - rank));
    };
    std::vector<std::string> renamed;
    for (int e = 0; e < g.size(); ++e) {
      renamed.push_back(rename(rule.labeling.label_of(e)));
    }
    std::map<std::string, int> reserves;
    for (const auto& [label, r] : rule.reserves) reserves[rename(label)] = r;
    const ChoiceFunction other = Reserves(g, rule.capacity, Labeling(renamed),
                                          reserves, rule.order);
    EXPECT_TRUE(SameChoices(c, other));
  }
}

TEST(RulesTest, RandomRulesAreFillingAndSubstitutable) {
  Rng rng(43);
  for (int n = 1; n <= 8; ++n) {
    const GroundSet g = GroundSet::Numbered(n);
    for (int trial = 0; trial < 8; ++trial) {
      for (const ChoiceFunction& c :
           {RandomSeqPrioRivalry(g, rng), RandomReserves(g, rng),
            TwoStage(RandomReserves(g, rng), RandomSeqPrioRivalry(g, rng))}) {
        const ChoiceFunction t = c.Compile();
        EXPECT_TRUE(CheckCapacityFilling(t).report.holds) << RuleName(*c.rule());
        EXPECT_TRUE(CheckSubstitutability(t).holds) << RuleName(*c.rule());
      }
    }
  }
}

TEST(RulesTest, McRulesArePathIndependent) {
  Rng rng(47);
  for (int n = 1; n <= 6; ++n) {
    const GroundSet g = GroundSet::Numbered(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<LinearOrder> orders;
      const int k = 1 + trial % 4;
      for (int i = 0; i < k; ++i) orders.push_back(RandomLinearOrder(n, rng));
      EXPECT_TRUE(CheckPathIndependence(MaximizerCollecting(g, orders)).holds);
    }
  }
}

TEST(RulesTest, ResponsiveRoundTrip) {
  Rng rng(53);
  for (int n = 1; n <= 8; ++n) {
    const GroundSet g = GroundSet::Numbered(n);
    for (int trial = 0; trial < 10; ++trial) {
      const ChoiceFunction c = RandomPriorityMax(g, rng);
      const auto r = ResponsiveRationalize(c);
      ASSERT_TRUE(r.has_value());
      EXPECT_TRUE(SameChoices(c, PriorityMax(g, r->capacity, r->order)));
      EXPECT_TRUE(CheckQResponsive(c, r->capacity, r->order).holds);
    }
  }
}

TEST(RulesTest, ResponsiveRejectsNonFilling) {
  ChoiceFunction::Table t;
  for (std::uint32_t r : {0, 0, 2, 3}) t.push_back(Bundle::FromBits(r));
  const auto c = ChoiceFunction::FromTable(GroundSet::Letters(2), t);
  EXPECT_FALSE(ResponsiveRationalize(c).has_value());
}

TEST(RulesTest, LatticeExampleIsResponsive) {
  ChoiceFunction::Table t;
  for (std::uint32_t r : {0, 1, 2, 3, 4, 5, 6, 3}) t.push_back(Bundle::FromBits(r));
  const auto c = ChoiceFunction::FromTable(GroundSet::Letters(3), t);
  const auto r = ResponsiveRationalize(c);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->capacity, 2);
  EXPECT_TRUE(SameChoices(PriorityMax(c.ground(), 2, r->order), c));
}

TEST(RulesTest, FillingAndRespectingIffPriorityMaxExhaustive) {
  // For every C on three elements, every capacity and every order.
  const GroundSet g = GroundSet::Letters(3);
  const auto perms = oracle::AllPermutations(3);
  for (std::uint64_t code = 0; code < ChoiceFunctionCount(3); ++code) {
    const ChoiceFunction c = ChoiceFunctionFromCode(g, code);
    const CapacityReport filling = CheckCapacityFilling(c);
    for (const auto& p : perms) {
      const LinearOrder o(p);
      const bool respects = CheckRespectsPriorities(c, o).holds;
      for (int q = 0; q <= 3; ++q) {
        const bool lhs = filling.capacity == q && respects;
        const bool rhs = SameChoices(c, PriorityMax(g, q, o));
        EXPECT_EQ(lhs, rhs) << "code " << code << " q " << q;
      }
    }
  }
}

TEST(RulesTest, ResponsiveIffFillingAndWarsprioExhaustive) {
  const GroundSet g = GroundSet::Letters(3);
  for (std::uint64_t code = 0; code < ChoiceFunctionCount(3); ++code) {
    const ChoiceFunction c = ChoiceFunctionFromCode(g, code);
    const bool expected =
        CheckCapacityFilling(c).capacity.has_value() && CheckWarsprio(c).holds;
    const auto r = ResponsiveRationalize(c);
    EXPECT_EQ(r.has_value(), expected) << "code " << code;
    if (r) {
      EXPECT_TRUE(SameChoices(c, PriorityMax(g, r->capacity, r->order)));
    }
  }
}

}  // namespace
}  // namespace combchoice
