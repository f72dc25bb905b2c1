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

#include "combchoice/matching.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "combchoice/axioms.h"
#include "combchoice/errors.h"

namespace combchoice {

namespace {

constexpr int kMaxEnumerateAgents = 6;
constexpr int kMaxEnumerateObjects = 4;

enum class Pooling { kChosen, kCumulative };

DaOutcome RunDa(const MatchingProblem& problem, Pooling pooling) {
  const int n = problem.agent_count();
  const int m = problem.object_count();

  std::vector<std::vector<bool>> available(n, std::vector<bool>(m, false));
  Bundle active;
  for (int i = 0; i < n; ++i) {
    for (int o : problem.preference(i)) available[i][o] = true;
    if (!problem.preference(i).empty()) active = active.With(i);
  }
  auto top_available = [&](int i) {
    for (int o : problem.preference(i)) {
      if (available[i][o]) return o;
    }
    return kUnmatched;
  };
  auto has_available = [&](int i) { return top_available(i) != kUnmatched; };

  std::vector<Bundle> held(m);
  std::vector<Bundle> pool(m);
  DaOutcome outcome;
  while (!active.empty()) {
    std::vector<Bundle> proposers(m);
    for (int i : active) {
      const int o = top_available(i);
      proposers[o] = proposers[o].With(i);
    }
    Bundle rejected;
    for (int o = 0; o < m; ++o) {
      const Bundle chosen = problem.choice(o).EvalUnchecked(proposers[o] | pool[o]);
      const Bundle rejected_here = (proposers[o] | held[o]) - chosen;
      for (int i : rejected_here) available[i][o] = false;
      rejected |= rejected_here;
      held[o] = chosen;
      pool[o] = pooling == Pooling::kChosen ? chosen : proposers[o] | pool[o];
    }
    Bundle held_any;
    for (const Bundle& h : held) held_any |= h;
    active = Bundle();
    for (int i : rejected - held_any) {
      if (has_available(i)) active = active.With(i);
    }
    outcome.trace.push_back(held);
  }

  InfeasibleReport report;
  Matching matching{std::vector<int>(n, kUnmatched)};
  for (int i = 0; i < n; ++i) {
    std::vector<int> holders;
    for (int o = 0; o < m; ++o) {
      if (held[o].Contains(i)) holders.push_back(o);
    }
    if (holders.size() > 1) {
      report.offenders.push_back({i, holders});
    } else if (holders.size() == 1) {
      matching.assign_of[i] = holders.front();
    }
  }
  if (report.offenders.empty()) {
    outcome.result = std::move(matching);
  } else {
    outcome.result = std::move(report);
  }
  return outcome;
}

// First agent i (with object a) such that a P_i μ(i) and `blocks(a, i)`.
std::optional<Blocking> FindBlockingAgent(
    const MatchingProblem& problem, const Matching& m,
    const std::function<bool(int, int, Bundle)>& blocks) {
  for (int a = 0; a < problem.object_count(); ++a) {
    const Bundle assigned = m.AssignedTo(a);
    for (int i = 0; i < problem.agent_count(); ++i) {
      if (!problem.StrictlyPrefers(i, a, m.assign_of[i])) continue;
      if (blocks(a, i, assigned)) return Blocking{a, Bundle::Singleton(i)};
    }
  }
  return std::nullopt;
}

}  // namespace

MatchingProblem::MatchingProblem(GroundSet agents,
                                 std::vector<std::string> objects,
                                 std::vector<std::vector<int>> preferences,
                                 std::vector<ChoiceFunction> choices)
    : agents_(std::move(agents)),
      objects_(std::move(objects)),
      preferences_(std::move(preferences)),
      choices_(std::move(choices)) {
  const int m = object_count();
  if (std::set<std::string>(objects_.begin(), objects_.end()).size() !=
      objects_.size()) {
    throw InputError("duplicate object name");
  }
  if (static_cast<int>(preferences_.size()) != agent_count()) {
    throw InputError("expected a ranking for each of " +
                     std::to_string(agent_count()) + " agents");
  }
  if (static_cast<int>(choices_.size()) != m) {
    throw InputError("expected a choice function for each of " +
                     std::to_string(m) + " objects");
  }
  for (int i = 0; i < agent_count(); ++i) {
    std::vector<bool> seen(m, false);
    for (int o : preferences_[i]) {
      if (o < 0 || o >= m) {
        throw InputError("agent " + agents_.label(i) +
                         " ranks an unknown object");
      }
      if (seen[o]) {
        throw InputError("agent " + agents_.label(i) + " ranks object " +
                         objects_[o] + " twice");
      }
      seen[o] = true;
    }
  }
  for (int o = 0; o < m; ++o) {
    if (choices_[o].ground() != agents_) {
      throw InputError("choice function of object " + objects_[o] +
                       " is not over the agents");
    }
  }
}

int MatchingProblem::ObjectIndex(const std::string& name) const {
  for (int o = 0; o < object_count(); ++o) {
    if (objects_[o] == name) return o;
  }
  return -1;
}

int MatchingProblem::Rank(int agent, int object) const {
  const auto& pref = preferences_.at(agent);
  const int unmatched_rank = static_cast<int>(pref.size());
  if (object == kUnmatched) return unmatched_rank;
  const auto it = std::find(pref.begin(), pref.end(), object);
  return it == pref.end() ? unmatched_rank + 1
                          : static_cast<int>(it - pref.begin());
}

bool MatchingProblem::Acceptable(int agent, int object) const {
  return Rank(agent, object) <= Rank(agent, kUnmatched);
}

bool MatchingProblem::StrictlyPrefers(int agent, int a, int b) const {
  return a != b && Rank(agent, a) < Rank(agent, b);
}

Bundle Matching::AssignedTo(int object) const {
  Bundle out;
  for (std::size_t i = 0; i < assign_of.size(); ++i) {
    if (assign_of[i] == object) out = out.With(static_cast<int>(i));
  }
  return out;
}

DaOutcome RunCkDa(const MatchingProblem& problem) {
  return RunDa(problem, Pooling::kChosen);
}

DaOutcome RunAkDa(const MatchingProblem& problem) {
  return RunDa(problem, Pooling::kCumulative);
}

std::string FormatMatching(const MatchingProblem& problem, const Matching& m) {
  std::ostringstream out;
  for (int i = 0; i < problem.agent_count(); ++i) {
    out << problem.agents().label(i) << ": "
        << (m.assign_of[i] == kUnmatched ? "-"
                                         : problem.object_name(m.assign_of[i]))
        << '\n';
  }
  return out.str();
}

std::string FormatTrace(const MatchingProblem& problem,
                        const std::vector<std::vector<Bundle>>& trace) {
  std::ostringstream out;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    out << "round " << k + 1 << ':';
    for (int o = 0; o < problem.object_count(); ++o) {
      out << (o == 0 ? " " : "; ") << problem.object_name(o) << " ← "
          << problem.agents().Format(trace[k][o]);
    }
    out << '\n';
  }
  return out.str();
}

std::string FormatInfeasible(const MatchingProblem& problem,
                             const InfeasibleReport& report) {
  std::ostringstream out;
  for (const auto& offender : report.offenders) {
    out << "agent " << problem.agents().label(offender.agent) << " held by ";
    for (std::size_t k = 0; k < offender.objects.size(); ++k) {
      out << (k ? ", " : "") << problem.object_name(offender.objects[k]);
    }
    out << '\n';
  }
  return out.str();
}

std::string NotionName(StabilityNotion notion) {
  switch (notion) {
    case StabilityNotion::kIndividual:
      return "individual";
    case StabilityNotion::kAlpha:
      return "alpha";
    case StabilityNotion::kBeta:
      return "beta";
    case StabilityNotion::kGroup:
      return "group";
  }
  return "";
}

std::optional<StabilityNotion> ParseNotion(const std::string& name) {
  for (auto notion : {StabilityNotion::kIndividual, StabilityNotion::kAlpha,
                      StabilityNotion::kBeta, StabilityNotion::kGroup}) {
    if (NotionName(notion) == name) return notion;
  }
  return std::nullopt;
}

bool StabilityReport::Holds(StabilityNotion notion) const {
  switch (notion) {
    case StabilityNotion::kIndividual:
      return individually_stable;
    case StabilityNotion::kAlpha:
      return alpha;
    case StabilityNotion::kBeta:
      return beta;
    case StabilityNotion::kGroup:
      return group;
  }
  return false;
}

const std::optional<Blocking>& StabilityReport::WitnessFor(
    StabilityNotion notion) const {
  switch (notion) {
    case StabilityNotion::kIndividual:
      return individual_witness;
    case StabilityNotion::kAlpha:
      return alpha_witness;
    case StabilityNotion::kBeta:
      return beta_witness;
    case StabilityNotion::kGroup:
      break;
  }
  return group_witness;
}

StabilityReport CheckStability(const MatchingProblem& problem,
                               const Matching& m) {
  const int n = problem.agent_count();
  if (static_cast<int>(m.assign_of.size()) != n) {
    throw InputError("matching assigns " + std::to_string(m.assign_of.size()) +
                     " agents; problem has " + std::to_string(n));
  }
  for (int o : m.assign_of) {
    if (o != kUnmatched && (o < 0 || o >= problem.object_count())) {
      throw InputError("matching names an unknown object");
    }
  }

  StabilityReport report;
  for (int i = 0; i < n && !report.individual_witness; ++i) {
    const int o = m.assign_of[i];
    if (o != kUnmatched && !problem.Acceptable(i, o)) {
      report.individual_witness = Blocking{o, Bundle::Singleton(i)};
    }
  }
  for (int a = 0; a < problem.object_count() && !report.individual_witness;
       ++a) {
    const Bundle assigned = m.AssignedTo(a);
    if (problem.choice(a).EvalUnchecked(assigned) != assigned) {
      report.individual_witness = Blocking{a, assigned};
    }
  }
  report.individually_stable = !report.individual_witness;

  const auto alpha_block = FindBlockingAgent(
      problem, m, [&](int a, int i, Bundle assigned) {
        return problem.choice(a).EvalUnchecked(assigned.With(i)).Contains(i);
      });
  const auto beta_block = FindBlockingAgent(
      problem, m, [&](int a, int i, Bundle assigned) {
        return problem.choice(a).EvalUnchecked(assigned.With(i)) != assigned;
      });
  std::optional<Blocking> group_block;
  for (int a = 0; a < problem.object_count() && !group_block; ++a) {
    const Bundle assigned = m.AssignedTo(a);
    Bundle eager;
    for (int i = 0; i < n; ++i) {
      if (problem.StrictlyPrefers(i, a, m.assign_of[i])) eager = eager.With(i);
    }
    ForEachSubset(eager, [&](Bundle s) {
      if (group_block || s.empty()) return;
      if (s.IsSubsetOf(problem.choice(a).EvalUnchecked(assigned | s))) {
        group_block = Blocking{a, s};
      }
    });
  }

  auto settle = [&](const std::optional<Blocking>& block, bool& flag,
                    std::optional<Blocking>& witness) {
    flag = report.individually_stable && !block;
    if (!flag) witness = block ? block : report.individual_witness;
  };
  settle(alpha_block, report.alpha, report.alpha_witness);
  settle(beta_block, report.beta, report.beta_witness);
  settle(group_block, report.group, report.group_witness);
  return report;
}

std::vector<Matching> EnumerateMatchings(const MatchingProblem& problem) {
  const int n = problem.agent_count();
  const int m = problem.object_count();
  if (n > kMaxEnumerateAgents || m > kMaxEnumerateObjects) {
    throw ScaleError("matching enumeration supports at most " +
                     std::to_string(kMaxEnumerateAgents) + " agents and " +
                     std::to_string(kMaxEnumerateObjects) + " objects");
  }
  std::vector<Matching> out;
  Matching current{std::vector<int>(n, kUnmatched)};
  while (true) {
    out.push_back(current);
    int i = n - 1;
    while (i >= 0 && current.assign_of[i] == m - 1) {
      current.assign_of[i] = kUnmatched;
      --i;
    }
    if (i < 0) break;
    ++current.assign_of[i];
  }
  return out;
}

std::vector<Matching> EnumerateStable(const MatchingProblem& problem,
                                      StabilityNotion notion) {
  std::vector<Matching> out;
  for (Matching& m : EnumerateMatchings(problem)) {
    if (CheckStability(problem, m).Holds(notion)) out.push_back(std::move(m));
  }
  return out;
}

StabilityImplications CheckStabilityImplications(
    const MatchingProblem& problem) {
  bool all_ire = true;
  bool all_subs = true;
  for (int o = 0; o < problem.object_count(); ++o) {
    all_ire = all_ire && CheckIre(problem.choice(o)).holds;
    all_subs = all_subs && CheckSubstitutability(problem.choice(o)).holds;
  }
  StabilityImplications out;
  if (all_ire) out.alpha_iff_beta = true;
  if (all_subs) out.alpha_iff_group = true;
  for (const Matching& m : EnumerateMatchings(problem)) {
    ++out.matchings_examined;
    const StabilityReport r = CheckStability(problem, m);
    bool broken = false;
    if (r.beta && !r.alpha) {
      out.beta_implies_alpha = false;
      broken = true;
    }
    if (out.alpha_iff_beta && r.alpha != r.beta) {
      out.alpha_iff_beta = false;
      broken = true;
    }
    if (out.alpha_iff_group && r.alpha != r.group) {
      out.alpha_iff_group = false;
      broken = true;
    }
    if (broken && !out.counterexample) out.counterexample = m;
  }
  return out;
}

}  // namespace combchoice
