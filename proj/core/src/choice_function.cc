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

#include "combchoice/choice_function.h"

#include <string>

#include "combchoice/errors.h"
#include "combchoice/rules.h"

namespace combchoice {

ChoiceFunction ChoiceFunction::FromTable(GroundSet ground, Table table) {
  if (table.size() != ground.PowerSetSize()) {
    throw InputError("choice table has " + std::to_string(table.size()) +
                     " entries; expected " +
                     std::to_string(ground.PowerSetSize()));
  }
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    const Bundle s = Bundle::FromBits(static_cast<std::uint32_t>(bits));
    if (!table[bits].IsSubsetOf(s)) {
      throw InputError("choice from " + ground.Format(s) + " is " +
                       ground.Format(table[bits]) +
                       ", which is not a subset of the option set");
    }
  }
  ChoiceFunction c;
  c.ground_ = std::make_shared<const GroundSet>(std::move(ground));
  c.table_ = std::make_shared<const Table>(std::move(table));
  return c;
}

ChoiceFunction ChoiceFunction::FromRule(GroundSet ground,
                                        std::shared_ptr<const RuleSpec> rule) {
  if (!rule) throw InputError("null rule");
  ValidateRule(*rule, ground);
  ChoiceFunction c;
  c.ground_ = std::make_shared<const GroundSet>(std::move(ground));
  c.rule_ = std::move(rule);
  return c;
}

ChoiceFunction ChoiceFunction::Identity(GroundSet ground) {
  Table table(ground.PowerSetSize());
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    table[bits] = Bundle::FromBits(static_cast<std::uint32_t>(bits));
  }
  return FromTable(std::move(ground), std::move(table));
}

ChoiceFunction ChoiceFunction::Empty(GroundSet ground) {
  Table table(ground.PowerSetSize());
  return FromTable(std::move(ground), std::move(table));
}

Bundle ChoiceFunction::operator()(Bundle s) const {
  ground_->Validate(s);
  return EvalUnchecked(s);
}

Bundle ChoiceFunction::EvalUnchecked(Bundle s) const {
  if (table_) return (*table_)[s.bits()];
  return EvaluateRule(*rule_, s);
}

ChoiceFunction::Table ChoiceFunction::Tabulate() const {
  if (table_) return *table_;
  if (size() > 20) {
    throw ScaleError("refusing to tabulate a choice function on " +
                     std::to_string(size()) + " elements");
  }
  Table table(ground_->PowerSetSize());
  ForEachBundle(size(), [&](Bundle s) { table[s.bits()] = EvalUnchecked(s); });
  return table;
}

ChoiceFunction ChoiceFunction::Compile() const {
  if (table_) return *this;
  ChoiceFunction c;
  c.ground_ = ground_;
  c.table_ = std::make_shared<const Table>(Tabulate());
  return c;
}

bool SameChoices(const ChoiceFunction& a, const ChoiceFunction& b) {
  return a.ground() == b.ground() && !FirstDisagreement(a, b);
}

std::optional<Bundle> FirstDisagreement(const ChoiceFunction& a,
                                        const ChoiceFunction& b) {
  if (a.size() != b.size()) {
    throw InputError("choice functions have ground sets of different sizes");
  }
  const std::uint64_t count = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Bundle s = Bundle::FromBits(static_cast<std::uint32_t>(bits));
    if (a.EvalUnchecked(s) != b.EvalUnchecked(s)) return s;
  }
  return std::nullopt;
}

}  // namespace combchoice
