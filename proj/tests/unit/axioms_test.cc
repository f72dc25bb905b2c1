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

#include "combchoice/axioms.h"
#include "combchoice/generators.h"
#include "combchoice/rules.h"
#include "oracles.h"

namespace combchoice {
namespace {

ChoiceFunction Table(const GroundSet& g, std::vector<std::uint32_t> rows) {
  ChoiceFunction::Table t;
  for (auto r : rows) t.push_back(Bundle::FromBits(r));
  return ChoiceFunction::FromTable(g, std::move(t));
}

// C(abc) = ab, everything else chooses itself.
ChoiceFunction Lattice3() {
  return Table(GroundSet::Letters(3), {0, 1, 2, 3, 4, 5, 6, 3});
}

// C({a}) = {}, C({b}) = {b}, C({a,b}) = {a,b}.
ChoiceFunction NotSubstitutable() {
  return Table(GroundSet::Letters(2), {0, 0, 2, 3});
}

TEST(AxiomsTest, LatticeExampleSatisfiesEverything) {
  const ChoiceFunction c = Lattice3();
  EXPECT_TRUE(CheckSubstitutability(c).holds);
  EXPECT_TRUE(CheckIre(c).holds);
  EXPECT_TRUE(CheckPathIndependence(c).holds);
  EXPECT_TRUE(CheckSizeMonotonicity(c).holds);
  EXPECT_TRUE(CheckIdempotence(c).holds);
  EXPECT_EQ(CheckCapacityFilling(c).capacity, 2);
}

TEST(AxiomsTest, SubstitutabilityWitnessReplays) {
  const ChoiceFunction c = NotSubstitutable();
  const AxiomReport r = CheckSubstitutability(c);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  const Bundle s = *r.witness->set("S");
  const Bundle t = *r.witness->set("T");
  const int a = *r.witness->item("a");
  EXPECT_TRUE(t.IsSubsetOf(s));
  EXPECT_TRUE(c(s).Contains(a));
  EXPECT_TRUE(t.Contains(a));
  EXPECT_FALSE(c(t).Contains(a));
  EXPECT_EQ(FormatWitness(*r.witness, c.ground()), "S={a,b} T={a} a=a");
}

TEST(AxiomsTest, IreWitnessReplays) {
  // C(ab) = a, C(a) = {}.
  const ChoiceFunction c = Table(GroundSet::Letters(2), {0, 0, 2, 1});
  const AxiomReport r = CheckIre(c);
  ASSERT_FALSE(r.holds);
  const Bundle s = *r.witness->set("S");
  const Bundle t = *r.witness->set("T");
  EXPECT_TRUE(c(s).IsSubsetOf(t));
  EXPECT_TRUE(t.IsSubsetOf(s));
  EXPECT_NE(c(t), c(s));
}

TEST(AxiomsTest, PathIndependenceWitnessReplays) {
  const ChoiceFunction c = NotSubstitutable();
  const AxiomReport r = CheckPathIndependence(c);
  ASSERT_FALSE(r.holds);
  const Bundle s = *r.witness->set("S");
  const Bundle t = *r.witness->set("T");
  EXPECT_NE(c(s | t), c(c(s) | c(t)));
}

TEST(AxiomsTest, SizeMonotonicityWitnessReplays) {
  // C(ab) = {}, C(a) = a.
  const ChoiceFunction c = Table(GroundSet::Letters(2), {0, 1, 2, 0});
  const AxiomReport r = CheckSizeMonotonicity(c);
  ASSERT_FALSE(r.holds);
  const Bundle s = *r.witness->set("S");
  const Bundle t = *r.witness->set("T");
  EXPECT_TRUE(t.IsSubsetOf(s));
  EXPECT_GT(c(t).size(), c(s).size());
  EXPECT_FALSE(CheckSizeMonotonicityFull(c).holds);
}

TEST(AxiomsTest, CapacityFillingReportsCapacity) {
  const GroundSet g = GroundSet::Letters(4);
  const ChoiceFunction c =
      PriorityMax(g, 2, LinearOrder::FromLabels(g, {"c", "a", "d", "b"}));
  const CapacityReport r = CheckCapacityFilling(c);
  ASSERT_TRUE(r.capacity.has_value());
  EXPECT_EQ(*r.capacity, 2);
  EXPECT_TRUE(r.report.holds);
}

TEST(AxiomsTest, CapacityFillingWitnessReplays) {
  const ChoiceFunction c = NotSubstitutable();
  const CapacityReport r = CheckCapacityFilling(c);
  ASSERT_FALSE(r.report.holds);
  const Bundle s = *r.report.witness->set("S");
  // Maximum chosen size is 2 here.
  EXPECT_NE(c(s).size(), std::min(s.size(), 2));
}

TEST(AxiomsTest, RespectsPriorities) {
  const GroundSet g = GroundSet::Letters(3);
  const LinearOrder abc = LinearOrder::FromLabels(g, {"a", "b", "c"});
  const LinearOrder cba = LinearOrder::FromLabels(g, {"c", "b", "a"});
  const ChoiceFunction c = PriorityMax(g, 1, abc);
  EXPECT_TRUE(CheckRespectsPriorities(c, abc).holds);
  const AxiomReport r = CheckRespectsPriorities(c, cba);
  ASSERT_FALSE(r.holds);
  const Bundle s = *r.witness->set("S");
  const int chosen = *r.witness->item("chosen");
  const int rejected = *r.witness->item("rejected");
  EXPECT_TRUE(c(s).Contains(chosen));
  EXPECT_FALSE(c(s).Contains(rejected));
  EXPECT_TRUE(s.Contains(rejected));
  EXPECT_TRUE(cba.Prefers(rejected, chosen));
}

TEST(AxiomsTest, RevealedPriorityMatchesDefinition) {
  const GroundSet g = GroundSet::Letters(3);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const ChoiceFunction c = RandomChoiceFunction(g, rng);
    const RevealedPriority rp = RevealedStrictPriority(c);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        bool expected = false;
        ForEachBundle(3, [&](Bundle s) {
          expected = expected || (s.Contains(a) && s.Contains(b) &&
                                  c(s).Contains(a) && !c(s).Contains(b));
        });
        EXPECT_EQ(rp.relation.Contains(a, b), expected);
        const auto evidence = rp.EvidenceFor(a, b);
        EXPECT_EQ(evidence.has_value(), expected);
        if (evidence) {
          EXPECT_TRUE(c(*evidence).Contains(a));
          EXPECT_FALSE(c(*evidence).Contains(b));
          EXPECT_TRUE(evidence->Contains(b));
        }
      }
    }
  }
}

TEST(AxiomsTest, WarsprioWitnessReplays) {
  // C(ab) = a but C(abc) = b.
  const ChoiceFunction c =
      Table(GroundSet::Letters(3), {0, 1, 2, 1, 4, 1, 2, 2});
  const AxiomReport r = CheckWarsprio(c);
  ASSERT_FALSE(r.holds);
  const int a = *r.witness->item("a");
  const int b = *r.witness->item("b");
  const Bundle s_ab = *r.witness->set("S_ab");
  const Bundle s_ba = *r.witness->set("S_ba");
  EXPECT_TRUE(c(s_ab).Contains(a) && !c(s_ab).Contains(b) && s_ab.Contains(b));
  EXPECT_TRUE(c(s_ba).Contains(b) && !c(s_ba).Contains(a) && s_ba.Contains(a));
}

TEST(AxiomsTest, SampledScanReportsCoverage) {
  const GroundSet g = GroundSet::Numbered(12);
  Rng rng(1);
  const ChoiceFunction c = RandomPriorityMax(g, rng);
  const ScanOptions options{1000, 42};
  const AxiomReport r = CheckSubstitutability(c, options);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.coverage.exhaustive);
  EXPECT_EQ(r.coverage.seed, 42u);
  EXPECT_EQ(r.coverage.examined, 1000u);
  const AxiomReport full = CheckSubstitutability(Lattice3());
  EXPECT_TRUE(full.coverage.exhaustive);
  EXPECT_EQ(full.coverage.examined, 27u);
}

TEST(AxiomsTest, SmallCapSwitchesToSampling) {
  const ChoiceFunction c = NotSubstitutable();
  const AxiomReport r = CheckSubstitutability(c, ScanOptions{4, 9});
  // Nine nested pairs exceed the cap of four, so the scan samples.
  EXPECT_FALSE(r.coverage.exhaustive);
}

TEST(AxiomsTest, EquivalentFormsAgreeOnExamples) {
  for (const ChoiceFunction& c : {Lattice3(), NotSubstitutable()}) {
    const bool subs = CheckSubstitutability(c).holds;
    const SubsEquivalents eq = CheckSubsEquivalents(c);
    EXPECT_EQ(eq.subadditivity.holds, subs);
    EXPECT_EQ(eq.monotone_rejection.holds, subs);
    EXPECT_EQ(eq.antitone_non_rejection.holds, subs);
    const bool pi = CheckPathIndependence(c).holds;
    const PiVariants pv = CheckPiVariants(c);
    EXPECT_EQ(pv.absorb_one_side.holds, pi);
    EXPECT_EQ(pv.additive_in_image.holds, pi);
  }
}

TEST(AxiomsTest, RandomizedEquivalentsAtLargerSizes) {
  Rng rng(2024);
  for (int n = 4; n <= 8; ++n) {
    const GroundSet g = GroundSet::Numbered(n);
    for (int trial = 0; trial < 10; ++trial) {
      const RuleClass cls = static_cast<RuleClass>(trial % 4);
      const ChoiceFunction c = RandomInClass(g, cls, rng).Compile();
      const bool subs = CheckSubstitutability(c).holds;
      const SubsEquivalents eq = CheckSubsEquivalents(c);
      EXPECT_EQ(eq.subadditivity.holds, subs);
      EXPECT_EQ(eq.monotone_rejection.holds, subs);
      EXPECT_EQ(eq.antitone_non_rejection.holds, subs);
      const bool pi = CheckPathIndependence(c).holds;
      const PiVariants pv = CheckPiVariants(c);
      EXPECT_EQ(pv.absorb_one_side.holds, pi);
      EXPECT_EQ(pv.additive_in_image.holds, pi);
    }
  }
}

TEST(AxiomsTest, GeneratorsProduceTheirClass) {
  Rng rng(99);
  const GroundSet g = GroundSet::Numbered(5);
  for (int trial = 0; trial < 30; ++trial) {
    EXPECT_TRUE(CheckSubstitutability(RandomSubstitutable(g, rng)).holds);
    EXPECT_TRUE(CheckIre(RandomIre(g, rng)).holds);
    EXPECT_TRUE(CheckPathIndependence(RandomPathIndependent(g, rng)).holds);
  }
}

}  // namespace
}  // namespace combchoice
