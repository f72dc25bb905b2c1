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

#ifndef COMBCHOICE_CHOICE_FUNCTION_H_
#define COMBCHOICE_CHOICE_FUNCTION_H_

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "combchoice/bundle.h"
#include "combchoice/ground_set.h"

namespace combchoice {

struct RuleSpec;  // rules.h

// A combinatorial choice function C: 2^E → 2^E with C(S) ⊆ S on the complete
// domain. Backed either by an explicit table indexed by bundle bits or by a
// named rule evaluated on demand. Immutable; copies share their body.
class ChoiceFunction {
 public:
  using Table = std::vector<Bundle>;

  // Validates |table| = 2^n, table[S] ⊆ S, and table[∅] = ∅.
  static ChoiceFunction FromTable(GroundSet ground, Table table);
  static ChoiceFunction FromRule(GroundSet ground,
                                 std::shared_ptr<const RuleSpec> rule);
  // C(S) = S.
  static ChoiceFunction Identity(GroundSet ground);
  // C(S) = ∅.
  static ChoiceFunction Empty(GroundSet ground);

  const GroundSet& ground() const { return *ground_; }
  int size() const { return ground_->size(); }

  // C(S). Throws InputError when S has members outside the ground set.
  Bundle operator()(Bundle s) const;
  // C(S) without validating S.
  Bundle EvalUnchecked(Bundle s) const;

  bool is_table() const { return table_ != nullptr; }
  // Null unless rule-backed.
  const RuleSpec* rule() const { return rule_.get(); }

  // Every C(S) indexed by S.bits().
  Table Tabulate() const;
  // Table-backed copy of this function.
  ChoiceFunction Compile() const;

 private:
  ChoiceFunction() = default;

  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<const RuleSpec> rule_;
};

// Same ground set and C(S) agrees for every S.
bool SameChoices(const ChoiceFunction& a, const ChoiceFunction& b);

// First S (increasing bit order) with a(S) ≠ b(S); nullopt if none. Ground
// sets must have equal size.
std::optional<Bundle> FirstDisagreement(const ChoiceFunction& a,
                                        const ChoiceFunction& b);

}  // namespace combchoice

#endif  // COMBCHOICE_CHOICE_FUNCTION_H_
