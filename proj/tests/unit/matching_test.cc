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
#include "combchoice/matching.h"
#include "combchoice/rules.h"
#include "oracles.h"

namespace combchoice {
namespace {

using oracle::Mask;
using oracle::Table;

// Plain-array view of a problem.
struct Plain {
  int agents = 0;
  int objects = 0;
  std::vector<std::vector<int>> prefs;
  std::vector<Table> choice;
};

Plain ToPlain(const MatchingProblem& p) {
  Plain out{p.agent_count(), p.object_count(), {}, {}};
  for (int i = 0; i < out.agents; ++i) out.prefs.push_back(p.preference(i));
  for (int o = 0; o < out.objects; ++o) {
    out.choice.push_back(oracle::ToTable(p.choice(o)));
  }
  return out;
}

int PlainRank(const Plain& p, int i, int o) {
  const auto& pref = p.prefs[i];
  if (o < 0) return static_cast<int>(pref.size());
  const auto it = std::find(pref.begin(), pref.end(), o);
  return it == pref.end() ? static_cast<int>(pref.size()) + 1
                          : static_cast<int>(it - pref.begin());
}

struct PlainOutcome {
  bool feasible = true;
  std::vector<int> assign;
  std::vector<std::vector<Mask>> trace;
};

PlainOutcome ReferenceDa(const Plain& p, bool keep_applicants) {
  std::vector<std::vector<int>> available = p.prefs;
  std::vector<Mask> held(p.objects, 0);
  std::vector<Mask> pool(p.objects, 0);
  std::vector<bool> active(p.agents);
  for (int i = 0; i < p.agents; ++i) active[i] = !available[i].empty();
  PlainOutcome out;
  while (std::find(active.begin(), active.end(), true) != active.end()) {
    std::vector<Mask> proposers(p.objects, 0);
    for (int i = 0; i < p.agents; ++i) {
      if (active[i]) proposers[available[i].front()] |= Mask{1} << i;
    }
    Mask rejected_any = 0;
    for (int o = 0; o < p.objects; ++o) {
      const Mask chosen = p.choice[o][proposers[o] | pool[o]];
      const Mask rejected = (proposers[o] | held[o]) & ~chosen;
      for (int i = 0; i < p.agents; ++i) {
        if (!(rejected >> i & 1)) continue;
        auto& av = available[i];
        av.erase(std::remove(av.begin(), av.end(), o), av.end());
      }
      rejected_any |= rejected;
      held[o] = chosen;
      pool[o] = keep_applicants ? (proposers[o] | pool[o]) : chosen;
    }
    Mask held_any = 0;
    for (Mask h : held) held_any |= h;
    for (int i = 0; i < p.agents; ++i) {
      active[i] = (rejected_any >> i & 1) && !(held_any >> i & 1) &&
                  !available[i].empty();
    }
    out.trace.push_back(held);
  }
  out.assign.assign(p.agents, kUnmatched);
  for (int o = 0; o < p.objects; ++o) {
    for (int i = 0; i < p.agents; ++i) {
      if (!(held[o] >> i & 1)) continue;
      if (out.assign[i] != kUnmatched) out.feasible = false;
      out.assign[i] = o;
    }
  }
  return out;
}

struct PlainStability {
  bool individual = true;
  bool alpha = true;
  bool beta = true;
  bool group = true;
};

PlainStability ReferenceStability(const Plain& p, const std::vector<int>& mu) {
  PlainStability s;
  std::vector<Mask> assigned(p.objects, 0);
  for (int i = 0; i < p.agents; ++i) {
    if (mu[i] != kUnmatched) assigned[mu[i]] |= Mask{1} << i;
    if (PlainRank(p, i, mu[i]) > PlainRank(p, i, kUnmatched)) {
      s.individual = false;
    }
  }
  for (int o = 0; o < p.objects; ++o) {
    if (p.choice[o][assigned[o]] != assigned[o]) s.individual = false;
  }
  bool alpha_block = false;
  bool beta_block = false;
  bool group_block = false;
  for (int o = 0; o < p.objects; ++o) {
    Mask eager = 0;
    for (int i = 0; i < p.agents; ++i) {
      if (PlainRank(p, i, o) < PlainRank(p, i, mu[i])) eager |= Mask{1} << i;
    }
    for (int i = 0; i < p.agents; ++i) {
      if (!(eager >> i & 1)) continue;
      const Mask with = p.choice[o][assigned[o] | Mask{1} << i];
      if (with >> i & 1) alpha_block = true;
      if (with != assigned[o]) beta_block = true;
    }
    for (Mask group = eager; group; group = (group - 1) & eager) {
      if (oracle::Sub(group, p.choice[o][assigned[o] | group])) {
        group_block = true;
      }
    }
  }
  s.alpha = s.individual && !alpha_block;
  s.beta = s.individual && !beta_block;
  s.group = s.individual && !group_block;
  return s;
}

MatchingProblem PriorityExample() {
  const GroundSet agents = GroundSet::Numbered(2);
  return MatchingProblem(
      agents, {"a"}, {{0}, {0}},
      {PriorityMax(agents, 1, LinearOrder::FromLabels(agents, {"1", "2"}))});
}

TEST(MatchingProblemTest, Validation) {
  const GroundSet agents = GroundSet::Numbered(2);
  const ChoiceFunction id = ChoiceFunction::Identity(agents);
  EXPECT_THROW(MatchingProblem(agents, {"a"}, {{0, 0}, {}}, {id}), InputError);
  EXPECT_THROW(MatchingProblem(agents, {"a"}, {{1}, {}}, {id}), InputError);
  EXPECT_THROW(MatchingProblem(agents, {"a", "a"}, {{}, {}}, {id, id}),
               InputError);
  EXPECT_THROW(MatchingProblem(agents, {"a"}, {{}, {}}, {}), InputError);
  EXPECT_THROW(
      MatchingProblem(agents, {"a"}, {{}, {}},
                      {ChoiceFunction::Identity(GroundSet::Letters(2))}),
      InputError);
}

TEST(MatchingProblemTest, RanksAndAcceptability) {
  const GroundSet agents = GroundSet::Numbered(1);
  const ChoiceFunction id = ChoiceFunction::Identity(agents);
  const MatchingProblem p(agents, {"a", "b", "c"}, {{1, 0}}, {id, id, id});
  EXPECT_EQ(p.Rank(0, 1), 0);
  EXPECT_EQ(p.Rank(0, 0), 1);
  EXPECT_EQ(p.Rank(0, kUnmatched), 2);
  EXPECT_EQ(p.Rank(0, 2), 3);
  EXPECT_TRUE(p.Acceptable(0, 0));
  EXPECT_FALSE(p.Acceptable(0, 2));
  EXPECT_TRUE(p.StrictlyPrefers(0, 1, 0));
  EXPECT_FALSE(p.StrictlyPrefers(0, 1, 1));
  EXPECT_EQ(p.ObjectIndex("c"), 2);
  EXPECT_EQ(p.ObjectIndex("d"), -1);
}

TEST(DaTest, PriorityExample) {
  const MatchingProblem p = PriorityExample();
  for (const DaOutcome& out : {RunCkDa(p), RunAkDa(p)}) {
    ASSERT_TRUE(out.feasible());
    EXPECT_EQ(out.matching().assign_of, (std::vector<int>{0, kUnmatched}));
    EXPECT_EQ(FormatMatching(p, out.matching()), "1: a\n2: -\n");
    EXPECT_EQ(FormatTrace(p, out.trace), "round 1: a ← {1}\n");
  }
}

TEST(DaTest, AgreesWithReferenceOnRandomProblems) {
  Rng rng(97);
  for (int trial = 0; trial < 400; ++trial) {
    const int agents = 1 + trial % 5;
    const int objects = 1 + trial % 3;
    const RuleClass cls = static_cast<RuleClass>(trial % 4);
    const MatchingProblem p = RandomMatchingProblem(agents, objects, cls, rng);
    const Plain plain = ToPlain(p);
    for (bool keep : {false, true}) {
      const DaOutcome got = keep ? RunAkDa(p) : RunCkDa(p);
      const PlainOutcome want = ReferenceDa(plain, keep);
      ASSERT_EQ(got.feasible(), want.feasible) << "trial " << trial;
      if (got.feasible()) {
        EXPECT_EQ(got.matching().assign_of, want.assign);
      }
      ASSERT_EQ(got.trace.size(), want.trace.size());
      for (std::size_t k = 0; k < want.trace.size(); ++k) {
        for (int o = 0; o < objects; ++o) {
          EXPECT_EQ(got.trace[k][o].bits(), want.trace[k][o]);
        }
      }
    }
  }
}

TEST(DaTest, CkIsAlwaysFeasible) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const MatchingProblem p =
        RandomMatchingProblem(1 + trial % 5, 1 + trial % 3,
                              RuleClass::kArbitrary, rng);
    EXPECT_TRUE(RunCkDa(p).feasible());
  }
}

TEST(DaTest, ObjectOrderDoesNotMatter) {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int objects = 3;
    const MatchingProblem p =
        RandomMatchingProblem(4, objects, RuleClass::kArbitrary, rng);
    // Reverse the object list and remap preferences.
    std::vector<std::string> names(p.objects().rbegin(), p.objects().rend());
    std::vector<ChoiceFunction> choices;
    for (int o = objects - 1; o >= 0; --o) choices.push_back(p.choice(o));
    std::vector<std::vector<int>> prefs;
    for (int i = 0; i < p.agent_count(); ++i) {
      std::vector<int> pref;
      for (int o : p.preference(i)) pref.push_back(objects - 1 - o);
      prefs.push_back(pref);
    }
    const MatchingProblem q(p.agents(), names, prefs, choices);
    for (bool ak : {false, true}) {
      const DaOutcome a = ak ? RunAkDa(p) : RunCkDa(p);
      const DaOutcome b = ak ? RunAkDa(q) : RunCkDa(q);
      ASSERT_EQ(a.feasible(), b.feasible());
      if (!a.feasible()) continue;
      for (int i = 0; i < p.agent_count(); ++i) {
        const int x = a.matching().assign_of[i];
        const int y = b.matching().assign_of[i];
        EXPECT_EQ(x, y == kUnmatched ? kUnmatched : objects - 1 - y);
      }
    }
  }
}

TEST(DaTest, AkInfeasibleExample) {
  // b rejects agent 1 alone but takes it together with agent 2.
  const GroundSet agents = GroundSet::Numbered(2);
  const ChoiceFunction b = ChoiceFunction::FromTable(
      agents, {Bundle(), Bundle(), Bundle::FromBits(2), Bundle::FromBits(3)});
  const ChoiceFunction a =
      PriorityMax(agents, 1, LinearOrder::FromLabels(agents, {"1", "2"}));
  const MatchingProblem p(agents, {"a", "b"}, {{1, 0}, {0, 1}}, {a, b});
  const DaOutcome ak = RunAkDa(p);
  EXPECT_FALSE(ReferenceDa(ToPlain(p), true).feasible);
  ASSERT_FALSE(ak.feasible());
  ASSERT_EQ(ak.infeasible().offenders.size(), 1u);
  EXPECT_EQ(ak.infeasible().offenders[0].agent, 0);
  EXPECT_EQ(ak.infeasible().offenders[0].objects, (std::vector<int>{0, 1}));
  EXPECT_EQ(FormatInfeasible(p, ak.infeasible()), "agent 1 held by a, b\n");
  EXPECT_EQ(FormatTrace(p, ak.trace),
            "round 1: a ← {2}; b ← {}\n"
            "round 2: a ← {1}; b ← {}\n"
            "round 3: a ← {1}; b ← {1,2}\n");
  const DaOutcome ck = RunCkDa(p);
  ASSERT_TRUE(ck.feasible());
}

TEST(StabilityTest, AgreesWithReferenceOnEveryMatching) {
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const int agents = 1 + trial % 4;
    const int objects = 1 + trial % 3;
    const RuleClass cls = static_cast<RuleClass>(trial % 4);
    const MatchingProblem p = RandomMatchingProblem(agents, objects, cls, rng);
    const Plain plain = ToPlain(p);
    for (const Matching& m : EnumerateMatchings(p)) {
      const StabilityReport got = CheckStability(p, m);
      const PlainStability want = ReferenceStability(plain, m.assign_of);
      EXPECT_EQ(got.individually_stable, want.individual);
      EXPECT_EQ(got.alpha, want.alpha);
      EXPECT_EQ(got.beta, want.beta);
      EXPECT_EQ(got.group, want.group);
    }
  }
}

TEST(StabilityTest, WitnessesReplay) {
  Rng rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const MatchingProblem p =
        RandomMatchingProblem(3, 2, RuleClass::kArbitrary, rng);
    for (const Matching& m : EnumerateMatchings(p)) {
      const StabilityReport r = CheckStability(p, m);
      if (!r.individually_stable) continue;
      if (!r.alpha) {
        const Blocking& w = *r.alpha_witness;
        ASSERT_EQ(w.agents.size(), 1);
        const int i = *w.agents.begin();
        EXPECT_TRUE(p.StrictlyPrefers(i, w.object, m.assign_of[i]));
        EXPECT_TRUE(
            p.choice(w.object)(m.AssignedTo(w.object) | w.agents).Contains(i));
      }
      if (!r.beta) {
        const Blocking& w = *r.beta_witness;
        const int i = *w.agents.begin();
        EXPECT_TRUE(p.StrictlyPrefers(i, w.object, m.assign_of[i]));
        EXPECT_NE(p.choice(w.object)(m.AssignedTo(w.object) | w.agents),
                  m.AssignedTo(w.object));
      }
      if (!r.group) {
        const Blocking& w = *r.group_witness;
        for (int i : w.agents) {
          EXPECT_TRUE(p.StrictlyPrefers(i, w.object, m.assign_of[i]));
        }
        EXPECT_TRUE(w.agents.IsSubsetOf(
            p.choice(w.object)(m.AssignedTo(w.object) | w.agents)));
      }
    }
  }
}

TEST(StabilityTest, NotionNames) {
  for (StabilityNotion n :
       {StabilityNotion::kIndividual, StabilityNotion::kAlpha,
        StabilityNotion::kBeta, StabilityNotion::kGroup}) {
    EXPECT_EQ(ParseNotion(NotionName(n)), n);
  }
  EXPECT_FALSE(ParseNotion("gamma").has_value());
}

TEST(StabilityTest, EnumerationCountsAndLimits) {
  const MatchingProblem p = PriorityExample();
  EXPECT_EQ(EnumerateMatchings(p).size(), 4u);
  const auto stable = EnumerateStable(p, StabilityNotion::kAlpha);
  ASSERT_EQ(stable.size(), 1u);
  EXPECT_EQ(stable[0].assign_of, (std::vector<int>{0, kUnmatched}));
  Rng rng(113);
  const MatchingProblem big =
      RandomMatchingProblem(7, 2, RuleClass::kArbitrary, rng);
  EXPECT_THROW(EnumerateMatchings(big), ScaleError);
}

TEST(StabilityTest, ImplicationsOnRandomProblems) {
  Rng rng(127);
  for (int trial = 0; trial < 80; ++trial) {
    const RuleClass cls = static_cast<RuleClass>(trial % 4);
    const MatchingProblem p = RandomMatchingProblem(3, 2, cls, rng);
    const StabilityImplications r = CheckStabilityImplications(p);
    EXPECT_TRUE(r.beta_implies_alpha);
    if (r.alpha_iff_beta) {
      EXPECT_TRUE(*r.alpha_iff_beta);
    }
    if (r.alpha_iff_group) {
      EXPECT_TRUE(*r.alpha_iff_group);
    }
    EXPECT_EQ(r.matchings_examined, 27);
  }
}

TEST(StabilityTest, CkUnderPathIndependenceIsStable) {
  Rng rng(131);
  for (int trial = 0; trial < 100; ++trial) {
    const MatchingProblem p = RandomMatchingProblem(
        1 + trial % 5, 1 + trial % 3, RuleClass::kPathIndependent, rng);
    const DaOutcome ck = RunCkDa(p);
    ASSERT_TRUE(ck.feasible());
    const StabilityReport r = CheckStability(p, ck.matching());
    EXPECT_TRUE(r.alpha && r.beta && r.group);
    const auto stable = EnumerateStable(p, StabilityNotion::kAlpha);
    EXPECT_NE(std::find(stable.begin(), stable.end(), ck.matching()),
              stable.end());
  }
}

}  // namespace
}  // namespace combchoice
