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

#ifndef COMBCHOICE_LATTICE_H_
#define COMBCHOICE_LATTICE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combchoice/axioms.h"
#include "combchoice/choice_function.h"
#include "combchoice/linear_order.h"

namespace combchoice {

// The largest option set choice-equivalent to S, computed elementwise as
// C(S) ∪ {a : C(C(S) ∪ {a}) = C(S)}. Requires path independence; throws
// NotPathIndependent when the result is not choice-equivalent to S.
Bundle Sharp(const ChoiceFunction& c, Bundle s);

// The family ℳ of maximal option sets (S = S♯), ordered by decreasing size
// and then increasing bits. Its top is E; its bottom is ∅♯, which is ∅
// exactly when every element is chosen from some option set.
struct MaximalFamily {
  std::vector<Bundle> sets;
  // Absent for hand-built families.
  std::optional<ChoiceFunction> for_choice;

  bool Contains(Bundle s) const;
};

// Builds ℳ top-down from E by removing one chosen element at a time and
// cross-checks it against {S : S♯ = S}. Throws NotPathIndependent.
MaximalFamily ComputeMaximalFamily(const ChoiceFunction& c);

// E ∈ ℳ, bottom ∈ ℳ, and ℳ closed under pairwise intersection. The bottom is
// ∅♯ of the source function, or ∅ for hand-built families; `universe` is the
// ground-set size used for E. Witness: the violating pair S, T, or the
// missing set "missing".
AxiomReport VerifyLattice(const MaximalFamily& family, int universe);

struct HasseEdge {
  Bundle parent;
  Bundle child;  // parent minus {label}
  int label;     // chosen from parent
};

struct HasseDiagram {
  GroundSet ground;
  std::vector<Bundle> nodes;   // ordered as in MaximalFamily
  std::vector<Bundle> chosen;  // C(node), parallel to nodes
  std::vector<HasseEdge> edges;
};

// One edge per (S ∈ ℳ, a ∈ C(S)). Throws NotPathIndependent.
HasseDiagram Hasse(const ChoiceFunction& c);

// Graphviz text: nodes labelled with sorted member lists and a chosen="..."
// attribute, edges labelled "-a". Byte-identical for identical input.
std::string ToDot(const HasseDiagram& diagram);

// Orders whose maximizers, collected over the elements in `scope`, reproduce
// C. `scope` is the set of elements chosen from some option set; elements
// outside it trail every order and are never collected.
struct McRationalization {
  std::vector<LinearOrder> orders;
  Bundle scope;
};

// ∪_i Top(S ∩ scope, orders[i]).
Bundle AmEval(const McRationalization& mc, Bundle s);

// All distinct orders read off the maximal chains of the Hasse diagram from E
// down to the bottom, in depth-first order with chosen elements tried in
// ground order. Verified against C before returning. Throws
// NotPathIndependent, or ScaleError beyond max_orders chains.
McRationalization MaximalMcRationalization(const ChoiceFunction& c,
                                           std::uint64_t max_orders = 1'000'000);

struct MinimumMc {
  int size = 0;
  McRationalization witness;
};

// Smallest subset of the chain orders that still rationalizes C, by
// exhaustive search over subsets of increasing size. nullopt when more than
// `budget` subsets would need examining.
std::optional<MinimumMc> MinMcSize(const ChoiceFunction& c,
                                   std::uint64_t budget = 1'000'000);

}  // namespace combchoice

#endif  // COMBCHOICE_LATTICE_H_
