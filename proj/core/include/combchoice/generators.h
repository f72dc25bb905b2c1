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

#ifndef COMBCHOICE_GENERATORS_H_
#define COMBCHOICE_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "combchoice/choice_function.h"
#include "combchoice/demand.h"
#include "combchoice/linear_order.h"
#include "combchoice/matching.h"
#include "combchoice/rules.h"

namespace combchoice {

using Rng = std::mt19937_64;

// Number of choice functions on n elements: ∏_S 2^|S| = 2^(n·2^(n-1)).
// Throws ScaleError when that exceeds 2^62.
std::uint64_t ChoiceFunctionCount(int n);
// The code-th choice function in mixed-radix order: digit S (in bundle bit
// order, radix 2^|S|) indexes C(S) among the submasks of S in ascending
// order. Table-backed.
ChoiceFunction ChoiceFunctionFromCode(const GroundSet& ground,
                                      std::uint64_t code);

LinearOrder RandomLinearOrder(int n, Rng& rng);
// Uniform C(S) ⊆ S independently for each S.
ChoiceFunction RandomChoiceFunction(const GroundSet& ground, Rng& rng);
// Substitutable by construction: each element carries up to two random
// rejection sets containing it and is rejected from S when one of them lies
// inside S. Usually fails IRE.
ChoiceFunction RandomSubstitutable(const GroundSet& ground, Rng& rng);
// IRE by construction: C(S) is the best subset of S under a random linear
// order over bundles. Usually fails substitutability.
ChoiceFunction RandomIre(const GroundSet& ground, Rng& rng);
// Path independent by construction: a maximizer-collecting rule with one to
// three random orders, or priority maximization with a random capacity.
ChoiceFunction RandomPathIndependent(const GroundSet& ground, Rng& rng);

ChoiceFunction RandomPriorityMax(const GroundSet& ground, Rng& rng);
ChoiceFunction RandomSeqPrioRivalry(const GroundSet& ground, Rng& rng);
// Two or three labels drawn per element, reserves summing to at most q.
ChoiceFunction RandomReserves(const GroundSet& ground, Rng& rng);

enum class RuleClass { kArbitrary, kSubstitutable, kIre, kPathIndependent };
ChoiceFunction RandomInClass(const GroundSet& ground, RuleClass rule_class,
                             Rng& rng);

// Agents "1".."agents", objects "a", "b", ...; each agent ranks a random
// subset of the objects in random order.
MatchingProblem RandomMatchingProblem(int agents, int objects,
                                      RuleClass rule_class, Rng& rng);

// Integer values in [0, 4·n], v(∅) = 0.
Valuation RandomValuation(int n, Rng& rng);
// Prices k/d with k in [1, 12] and d in [1, 3].
PriceVector RandomPriceVector(int n, Rng& rng);

}  // namespace combchoice

#endif  // COMBCHOICE_GENERATORS_H_
