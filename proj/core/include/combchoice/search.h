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

#ifndef COMBCHOICE_SEARCH_H_
#define COMBCHOICE_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "combchoice/choice_function.h"
#include "combchoice/matching.h"

namespace combchoice {

enum class SearchKind {
  // A choice function satisfying WARSPrio but not substitutability.
  kWarsprioNotSubs,
  // All-substitutable rules whose CK and AK outcomes differ.
  kCkNeAkSubs,
  // All-IRE rules whose CK outcome is not α-stable.
  kCkUnstableIre,
  // Rules under which AK stops with an agent held twice.
  kAkInfeasible,
  // Two agents, one object with a substitutable rule, and a matching that is
  // α-stable but not β-stable.
  kAlphaNotBetaSubs,
};

// warsprio_not_subs, ck_ne_ak_subs, ck_unstable_ire, ak_infeasible,
// alpha_not_beta_subs.
std::string SearchKindName(SearchKind kind);
std::optional<SearchKind> ParseSearchKind(const std::string& name);

struct SearchBounds {
  // Ground-set size for warsprio_not_subs (at most 3, exhaustive), agent
  // count for the matching kinds.
  int max_size = 3;
  int max_objects = 2;
  std::uint64_t max_candidates = 200'000;
};

struct SearchResult {
  std::variant<ChoiceFunction, MatchingProblem> instance;
  // The offending matching for alpha_not_beta_subs.
  std::optional<Matching> matching;
  std::uint64_t candidate_index = 0;
};

// First verified hit in candidate order. The exhaustive kind starts at
// candidate seed mod count and wraps; the randomized kinds draw candidate k
// from a generator seeded with (seed, k). nullopt when the candidates run out.
std::optional<SearchResult> SearchCounterexample(SearchKind kind,
                                                 const SearchBounds& bounds,
                                                 std::uint64_t seed);

// Re-runs the axiom checks and deferred acceptance on the instance and
// confirms the verdicts claimed for `kind`.
bool ReplayCounterexample(SearchKind kind, const SearchResult& result);

}  // namespace combchoice

#endif  // COMBCHOICE_SEARCH_H_
