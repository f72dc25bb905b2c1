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

#include "combchoice/search.h"

#include <random>

#include "combchoice/axioms.h"
#include "combchoice/errors.h"
#include "combchoice/generators.h"

namespace combchoice {

namespace {

constexpr int kMaxExhaustiveSize = 3;

bool AllRules(const MatchingProblem& problem,
              AxiomReport (*check)(const ChoiceFunction&, const ScanOptions&)) {
  for (int o = 0; o < problem.object_count(); ++o) {
    if (!check(problem.choice(o), {}).holds) return false;
  }
  return true;
}

RuleClass ClassFor(SearchKind kind) {
  switch (kind) {
    case SearchKind::kCkNeAkSubs:
      return RuleClass::kSubstitutable;
    case SearchKind::kCkUnstableIre:
      return RuleClass::kIre;
    default:
      return RuleClass::kArbitrary;
  }
}

std::optional<SearchResult> SearchWarsprioNotSubs(const SearchBounds& bounds,
                                                  std::uint64_t seed) {
  const int n = bounds.max_size;
  if (n < 1 || n > kMaxExhaustiveSize) {
    throw ScaleError("exhaustive search supports 1 to " +
                     std::to_string(kMaxExhaustiveSize) + " elements");
  }
  const GroundSet ground = GroundSet::Letters(n);
  const std::uint64_t count = ChoiceFunctionCount(n);
  const std::uint64_t limit = std::min(count, bounds.max_candidates);
  for (std::uint64_t k = 0; k < limit; ++k) {
    const std::uint64_t code = (seed + k) % count;
    SearchResult result{ChoiceFunctionFromCode(ground, code), std::nullopt, k};
    if (ReplayCounterexample(SearchKind::kWarsprioNotSubs, result)) {
      return result;
    }
  }
  return std::nullopt;
}

std::optional<SearchResult> SearchAlphaNotBeta(const SearchBounds& bounds,
                                               std::uint64_t seed) {
  const GroundSet agents = GroundSet::Numbered(2);
  const std::uint64_t tables = ChoiceFunctionCount(2);
  // Tables × acceptability patterns × matchings (each agent on a or ∅).
  const std::uint64_t count = tables * 4 * 4;
  const std::uint64_t limit = std::min(count, bounds.max_candidates);
  for (std::uint64_t k = 0; k < limit; ++k) {
    std::uint64_t code = (seed + k) % count;
    const std::uint64_t table = code % tables;
    code /= tables;
    const std::uint64_t accept = code % 4;
    const std::uint64_t assign = code / 4;
    std::vector<std::vector<int>> preferences(2);
    Matching m{{kUnmatched, kUnmatched}};
    for (int i = 0; i < 2; ++i) {
      if (accept >> i & 1u) preferences[i] = {0};
      if (assign >> i & 1u) m.assign_of[i] = 0;
    }
    SearchResult result{
        MatchingProblem(agents, {"a"}, std::move(preferences),
                        {ChoiceFunctionFromCode(agents, table)}),
        m, k};
    if (ReplayCounterexample(SearchKind::kAlphaNotBetaSubs, result)) {
      return result;
    }
  }
  return std::nullopt;
}

std::optional<SearchResult> SearchMatching(SearchKind kind,
                                           const SearchBounds& bounds,
                                           std::uint64_t seed) {
  if (bounds.max_size < 2 || bounds.max_objects < 1) {
    throw InputError("matching search needs at least 2 agents and 1 object");
  }
  for (std::uint64_t k = 0; k < bounds.max_candidates; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k),
                      static_cast<std::uint32_t>(k >> 32)};
    Rng rng(seq);
    const int agents =
        std::uniform_int_distribution<int>(2, bounds.max_size)(rng);
    const int objects =
        std::uniform_int_distribution<int>(1, bounds.max_objects)(rng);
    SearchResult result{
        RandomMatchingProblem(agents, objects, ClassFor(kind), rng),
        std::nullopt, k};
    if (ReplayCounterexample(kind, result)) return result;
  }
  return std::nullopt;
}

}  // namespace

std::string SearchKindName(SearchKind kind) {
  switch (kind) {
    case SearchKind::kWarsprioNotSubs:
      return "warsprio_not_subs";
    case SearchKind::kCkNeAkSubs:
      return "ck_ne_ak_subs";
    case SearchKind::kCkUnstableIre:
      return "ck_unstable_ire";
    case SearchKind::kAkInfeasible:
      return "ak_infeasible";
    case SearchKind::kAlphaNotBetaSubs:
      return "alpha_not_beta_subs";
  }
  return "";
}

std::optional<SearchKind> ParseSearchKind(const std::string& name) {
  for (auto kind :
       {SearchKind::kWarsprioNotSubs, SearchKind::kCkNeAkSubs,
        SearchKind::kCkUnstableIre, SearchKind::kAkInfeasible,
        SearchKind::kAlphaNotBetaSubs}) {
    if (SearchKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<SearchResult> SearchCounterexample(SearchKind kind,
                                                 const SearchBounds& bounds,
                                                 std::uint64_t seed) {
  switch (kind) {
    case SearchKind::kWarsprioNotSubs:
      return SearchWarsprioNotSubs(bounds, seed);
    case SearchKind::kAlphaNotBetaSubs:
      return SearchAlphaNotBeta(bounds, seed);
    default:
      return SearchMatching(kind, bounds, seed);
  }
}

bool ReplayCounterexample(SearchKind kind, const SearchResult& result) {
  if (kind == SearchKind::kWarsprioNotSubs) {
    const auto* c = std::get_if<ChoiceFunction>(&result.instance);
    return c && CheckWarsprio(*c).holds && !CheckSubstitutability(*c).holds;
  }
  const auto* problem = std::get_if<MatchingProblem>(&result.instance);
  if (!problem) return false;
  switch (kind) {
    case SearchKind::kCkNeAkSubs: {
      if (!AllRules(*problem, CheckSubstitutability)) return false;
      const DaOutcome ck = RunCkDa(*problem);
      const DaOutcome ak = RunAkDa(*problem);
      return ck.feasible() && ak.feasible() && ck.matching() != ak.matching();
    }
    case SearchKind::kCkUnstableIre: {
      if (!AllRules(*problem, CheckIre)) return false;
      const DaOutcome ck = RunCkDa(*problem);
      return ck.feasible() && !CheckStability(*problem, ck.matching()).alpha;
    }
    case SearchKind::kAkInfeasible:
      return !AllRules(*problem, CheckSubstitutability) &&
             !RunAkDa(*problem).feasible();
    case SearchKind::kAlphaNotBetaSubs: {
      if (!result.matching || problem->agent_count() != 2 ||
          problem->object_count() != 1 ||
          !AllRules(*problem, CheckSubstitutability)) {
        return false;
      }
      const StabilityReport report = CheckStability(*problem, *result.matching);
      return report.alpha && !report.beta;
    }
    case SearchKind::kWarsprioNotSubs:
      break;
  }
  return false;
}

}  // namespace combchoice
