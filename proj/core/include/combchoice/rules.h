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

#ifndef COMBCHOICE_RULES_H_
#define COMBCHOICE_RULES_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "combchoice/axioms.h"
#include "combchoice/choice_function.h"
#include "combchoice/linear_order.h"

namespace combchoice {

// Total map from elements onto a finite label set L, inducing the partition
// {E_l}. Labels are processed in lexicographic order wherever order matters.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<std::string> label_of);

  int size() const { return static_cast<int>(label_of_.size()); }
  const std::string& label_of(int element) const { return label_of_.at(element); }
  const std::vector<std::string>& labels() const { return labels_; }
  // E_l; empty for unknown labels.
  Bundle Members(const std::string& label) const;

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.label_of_ == b.label_of_;
  }

 private:
  std::vector<std::string> label_of_;
  std::vector<std::string> labels_;  // sorted, distinct
};

// C(S) = S if |S| ≤ q, else the q highest-priority members of S.
struct PriorityMaxRule {
  int capacity = 0;
  LinearOrder order;
};

// C(S) = ∪_i Top(S, ≻_i).
struct McRule {
  std::vector<LinearOrder> orders;
};

// C(S) = S if |S| ≤ q, else {s_1..s_q} with s_m = Top(S \ {s_1..s_{m-1}}, ≻_m).
struct SeqPrioRivalryRule {
  int capacity = 0;
  std::vector<LinearOrder> orders;
};

// Stage one takes up to r_l top members of E_l ∩ S for each label; stage two
// fills the residual capacity from the rest of S by priority.
struct ReservesRule {
  int capacity = 0;
  Labeling labeling;
  std::map<std::string, int> reserves;  // missing labels reserve 0
  LinearOrder order;
};

// H(S) = C1(S) ∪ C2(S \ C1(S)).
struct TwoStageRule {
  ChoiceFunction first;
  ChoiceFunction second;
};

struct RuleSpec {
  std::variant<PriorityMaxRule, McRule, SeqPrioRivalryRule, ReservesRule,
               TwoStageRule>
      variant;
};

// Throws InputError when the parameters do not fit the ground set or violate
// the rule's invariants (q ≥ 0, q orders for rivalry, Σ r_l ≤ q, ...).
void ValidateRule(const RuleSpec& rule, const GroundSet& ground);
// Evaluates the rule at S without validation.
Bundle EvaluateRule(const RuleSpec& rule, Bundle s);
// Short variant tag: priority_max, mc, seq_prio_rivalry, reserves, two_stage.
std::string RuleName(const RuleSpec& rule);

ChoiceFunction PriorityMax(const GroundSet& ground, int capacity,
                           LinearOrder order);
ChoiceFunction MaximizerCollecting(const GroundSet& ground,
                                   std::vector<LinearOrder> orders);
ChoiceFunction SeqPrioRivalry(const GroundSet& ground, int capacity,
                              std::vector<LinearOrder> orders);
ChoiceFunction Reserves(const GroundSet& ground, int capacity,
                        Labeling labeling, std::map<std::string, int> reserves,
                        LinearOrder order);
// Both functions must share a ground set.
ChoiceFunction TwoStage(ChoiceFunction first, ChoiceFunction second);

// ∪_i Top(S, orders[i]); ∅ iff S = ∅ or orders is empty.
Bundle AmEval(std::span<const LinearOrder> orders, Bundle s);

// How a priority ordering is rebuilt when a group of elements moves to the
// top: keep the group's relative order, or reverse it.
enum class MoveConvention { kKeepGroupOrder, kReverseGroupOrder };
LinearOrder MoveToTop(const LinearOrder& order, Bundle group,
                      MoveConvention convention);

struct ResponsiveRationalization {
  int capacity = 0;
  LinearOrder order;
};

// (q, ≻) with C = PriorityMax(q, ≻) when C is capacity-filling and satisfies
// WARSPrio; nullopt otherwise. ≻ is the tie-broken extension of ≻*. Throws
// InternalError if ≻* is not transitive or the reconstruction differs from C.
std::optional<ResponsiveRationalization> ResponsiveRationalize(
    const ChoiceFunction& c);

// C(S) = PriorityMax(q, order)(S) for every S. Witness: first differing S.
AxiomReport CheckQResponsive(const ChoiceFunction& c, int capacity,
                             const LinearOrder& order);

}  // namespace combchoice

#endif  // COMBCHOICE_RULES_H_
