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

#ifndef COMBCHOICE_REVEALED_H_
#define COMBCHOICE_REVEALED_H_

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "combchoice/axioms.h"
#include "combchoice/choice_function.h"
#include "combchoice/relation.h"

namespace combchoice {

// A subset of the alternatives of a pure model.
using AltSet = boost::dynamic_bitset<>;

// Pure choice model (X, ℬ, c) with states identified with budgets. When X
// carries a partial order, `order` holds it as x ≤ y ⟺ order.Contains(x, y).
class PureModel {
 public:
  // Throws InputError unless every budget is a nonempty subset of X and
  // every choice is a nonempty subset of its budget.
  PureModel(std::vector<std::string> alternatives, std::vector<AltSet> budgets,
            std::vector<AltSet> choices,
            std::optional<Relation> order = std::nullopt);

  int alternative_count() const {
    return static_cast<int>(alternatives_.size());
  }
  int budget_count() const { return static_cast<int>(budgets_.size()); }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::vector<AltSet>& budgets() const { return budgets_; }
  const std::vector<AltSet>& choices() const { return choices_; }
  const AltSet& budget(int i) const { return budgets_.at(i); }
  const AltSet& choice(int i) const { return choices_.at(i); }
  const std::optional<Relation>& order() const { return order_; }

  AltSet EmptySet() const { return AltSet(alternatives_.size()); }
  // Index lookup by label; -1 if absent.
  int IndexOf(const std::string& label) const;
  // "{x,y}".
  std::string Format(const AltSet& set) const;

 private:
  std::vector<std::string> alternatives_;
  std::vector<AltSet> budgets_;
  std::vector<AltSet> choices_;
  std::optional<Relation> order_;
};

// Builds an AltSet over `size` alternatives from member indices.
AltSet MakeAltSet(int size, const std::vector<int>& members);

// Items whose role starts with 'B' are budget indices, rendered "#k"; the
// rest are alternatives, rendered by label. Sets are not used.
std::string FormatPureWitness(const Witness& witness, const PureModel& m);

struct RevealedRelations {
  Relation weak;    // x chosen, y in the budget
  Relation strict;  // x chosen, y in the budget but not chosen
};

RevealedRelations ComputeRevealedRelations(const PureModel& m);

// No (x, y) in strict with (y, x) in weak. Witness: x, y and the budgets
// B_strict, B_weak revealing each direction.
AxiomReport CheckWarp(const PureModel& m);

// {x ∈ B : (x, y) ∈ r for every y ∈ B}.
AltSet Greatest(const AltSet& budget, const Relation& r);

// R_c when Greatest(B, R_c) = c(B) for every budget; nullopt otherwise.
std::optional<Relation> CheckRationalizable(const PureModel& m);

struct DomainFlag {
  bool holds = true;
  std::optional<Witness> witness;
};

struct DomainReport {
  DomainFlag complete;
  DomainFlag additive;
  DomainFlag connected;
  // Present only when the model carries an order.
  std::optional<DomainFlag> comprehensive;
  std::optional<DomainFlag> combinatorial;
};

// Witness roles: complete lists the "missing" alternatives; additive names
// budgets B1, B2; connected names x, y, z; comprehensive names B, x and the
// lower y; combinatorial adds "join" failures (B, x, y) and "unbounded"
// alternatives x that are not maximal in any budget.
DomainReport DomainPredicates(const PureModel& m);

// A transitive relation rationalizing c, or nullopt when none exists.
// The candidate τ(R_c) is tried; any transitive rationalization contains
// R_c and hence τ(R_c), so a failing candidate settles the question. At
// |X| ≤ 4 the verdict is cross-checked by exhaustive search.
std::optional<Relation> CheckTransitiveRationalizable(const PureModel& m);

// 𝔉(C): X = 2^E in bit order, one budget 2^Y per option set Y with choice
// {C(Y)}, ordered by inclusion. Throws ScaleError beyond 12 elements.
PureModel FaithfulF(const ChoiceFunction& c);

// 𝔊(m) for a model whose alternatives form a finite Boolean lattice under
// its order. Atoms become the ground set, labelled by their alternative label
// with one pair of surrounding braces removed. Throws NotBooleanLattice for
// structural violations and NotDecisive for non-singleton choices;
// InputError when the budgets leave a nonempty option set undetermined or
// two budgets disagree on one.
ChoiceFunction FaithfulG(const PureModel& m);

}  // namespace combchoice

#endif  // COMBCHOICE_REVEALED_H_
