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

#ifndef COMBCHOICE_MATCHING_H_
#define COMBCHOICE_MATCHING_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "combchoice/bundle.h"
#include "combchoice/choice_function.h"
#include "combchoice/ground_set.h"

namespace combchoice {

// Objects are indexed 0..m-1; kUnmatched stands for ∅.
inline constexpr int kUnmatched = -1;

// Agents A (the ground set of every object's choice function), objects O with
// names, per-agent strict rankings of acceptable objects (unlisted objects
// rank below ∅), and per-object choice functions over A.
class MatchingProblem {
 public:
  MatchingProblem() = default;
  // Throws InputError for duplicate or out-of-range ranking entries,
  // duplicate object names, or choice functions over a different ground set.
  MatchingProblem(GroundSet agents, std::vector<std::string> objects,
                  std::vector<std::vector<int>> preferences,
                  std::vector<ChoiceFunction> choices);

  const GroundSet& agents() const { return agents_; }
  int agent_count() const { return agents_.size(); }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(int o) const { return objects_.at(o); }
  // -1 if absent.
  int ObjectIndex(const std::string& name) const;
  const std::vector<int>& preference(int agent) const {
    return preferences_.at(agent);
  }
  const ChoiceFunction& choice(int object) const {
    return choices_.at(object);
  }

  // Position in the agent's ranking; ∅ ranks at the list length and
  // unacceptable objects after it.
  int Rank(int agent, int object) const;
  bool Acceptable(int agent, int object) const;
  // a P_i b, with either side possibly kUnmatched.
  bool StrictlyPrefers(int agent, int a, int b) const;

 private:
  GroundSet agents_;
  std::vector<std::string> objects_;
  std::vector<std::vector<int>> preferences_;
  std::vector<ChoiceFunction> choices_;
};

struct Matching {
  std::vector<int> assign_of;  // object per agent, or kUnmatched

  // μ(a).
  Bundle AssignedTo(int object) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Agents held by more than one object when a deferred acceptance run stops.
struct InfeasibleReport {
  struct Offender {
    int agent;
    std::vector<int> objects;
  };
  std::vector<Offender> offenders;
};

struct DaOutcome {
  std::variant<Matching, InfeasibleReport> result;
  // Held sets per object after each proposal round.
  std::vector<std::vector<Bundle>> trace;

  bool feasible() const { return std::holds_alternative<Matching>(result); }
  const Matching& matching() const { return std::get<Matching>(result); }
  const InfeasibleReport& infeasible() const {
    return std::get<InfeasibleReport>(result);
  }
};

// Choice-keeping deferred acceptance: an object's pool is what it chose.
DaOutcome RunCkDa(const MatchingProblem& problem);
// Applicant-keeping (cumulative offer): an object's pool keeps every
// proposal it has received.
DaOutcome RunAkDa(const MatchingProblem& problem);

// "agent: object" per agent, "-" when unmatched, one per line.
std::string FormatMatching(const MatchingProblem& problem, const Matching& m);
// "round k: o ← {agents}; o2 ← {...}" per round, one per line.
std::string FormatTrace(const MatchingProblem& problem,
                        const std::vector<std::vector<Bundle>>& trace);
// "agent 2 held by a, b" per offender, one per line.
std::string FormatInfeasible(const MatchingProblem& problem,
                             const InfeasibleReport& report);

enum class StabilityNotion { kIndividual, kAlpha, kBeta, kGroup };
// "individual", "alpha", "beta", "group".
std::string NotionName(StabilityNotion notion);
std::optional<StabilityNotion> ParseNotion(const std::string& name);

// A blocking object and agent set: the agent assigned an unacceptable object,
// the object whose assignees C_a does not keep, the blocking agent {i}, or
// the blocking coalition S.
struct Blocking {
  int object = kUnmatched;
  Bundle agents;
};

struct StabilityReport {
  bool individually_stable = true;
  bool alpha = true;
  bool beta = true;
  bool group = true;
  // Present exactly for the failing notions. A notion failing only through
  // individual stability carries the individual witness.
  std::optional<Blocking> individual_witness;
  std::optional<Blocking> alpha_witness;
  std::optional<Blocking> beta_witness;
  std::optional<Blocking> group_witness;

  bool Holds(StabilityNotion notion) const;
  const std::optional<Blocking>& WitnessFor(StabilityNotion notion) const;
};

// Throws InputError when the matching has the wrong size or names an unknown
// object.
StabilityReport CheckStability(const MatchingProblem& problem,
                               const Matching& m);

// Every assignment of agents to objects or ∅, in odometer order with the
// last agent varying fastest and ∅ first. Throws ScaleError beyond 6 agents
// or 4 objects.
std::vector<Matching> EnumerateMatchings(const MatchingProblem& problem);
std::vector<Matching> EnumerateStable(const MatchingProblem& problem,
                                      StabilityNotion notion);

struct StabilityImplications {
  int matchings_examined = 0;
  bool beta_implies_alpha = true;
  // Present when every object's choice function satisfies IRE.
  std::optional<bool> alpha_iff_beta;
  // Present when every object's choice function is substitutable.
  std::optional<bool> alpha_iff_group;
  // First matching breaking a checked implication.
  std::optional<Matching> counterexample;
};

StabilityImplications CheckStabilityImplications(
    const MatchingProblem& problem);

}  // namespace combchoice

#endif  // COMBCHOICE_MATCHING_H_
