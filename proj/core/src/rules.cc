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

#include "combchoice/rules.h"

#include <algorithm>
#include <memory>
#include <set>

#include "combchoice/errors.h"

namespace combchoice {

Labeling::Labeling(std::vector<std::string> label_of)
    : label_of_(std::move(label_of)) {
  std::set<std::string> distinct(label_of_.begin(), label_of_.end());
  labels_.assign(distinct.begin(), distinct.end());
}

Bundle Labeling::Members(const std::string& label) const {
  Bundle out;
  for (int e = 0; e < size(); ++e) {
    if (label_of_[e] == label) out = out.With(e);
  }
  return out;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckOrder(const LinearOrder& order, const GroundSet& ground) {
  if (order.size() != ground.size()) {
    throw InputError("priority ordering ranks " + std::to_string(order.size()) +
                     " elements; ground set has " +
                     std::to_string(ground.size()));
  }
}

void CheckCapacity(int q) {
  if (q < 0) throw InputError("capacity must be non-negative");
}

ChoiceFunction Make(const GroundSet& ground, RuleSpec spec) {
  return ChoiceFunction::FromRule(
      ground, std::make_shared<const RuleSpec>(std::move(spec)));
}

}  // namespace

void ValidateRule(const RuleSpec& rule, const GroundSet& ground) {
  std::visit(
      Overloaded{
          [&](const PriorityMaxRule& r) {
            CheckCapacity(r.capacity);
            CheckOrder(r.order, ground);
          },
          [&](const McRule& r) {
            for (const auto& order : r.orders) CheckOrder(order, ground);
          },
          [&](const SeqPrioRivalryRule& r) {
            CheckCapacity(r.capacity);
            if (static_cast<int>(r.orders.size()) != r.capacity) {
              throw InputError("sequenced rivalry rule needs exactly " +
                               std::to_string(r.capacity) +
                               " priority orderings, got " +
                               std::to_string(r.orders.size()));
            }
            for (const auto& order : r.orders) CheckOrder(order, ground);
          },
          [&](const ReservesRule& r) {
            CheckCapacity(r.capacity);
            CheckOrder(r.order, ground);
            if (r.labeling.size() != ground.size()) {
              throw InputError("labeling covers " +
                               std::to_string(r.labeling.size()) +
                               " elements; ground set has " +
                               std::to_string(ground.size()));
            }
            int total = 0;
            for (const auto& [label, reserve] : r.reserves) {
              if (!std::binary_search(r.labeling.labels().begin(),
                                      r.labeling.labels().end(), label)) {
                throw InputError("reserve for unknown label '" + label + "'");
              }
              if (reserve < 0) {
                throw InputError("reserve for '" + label + "' is negative");
              }
              total += reserve;
            }
            if (total > r.capacity) {
              throw InputError("reserves sum to " + std::to_string(total) +
                               ", exceeding capacity " +
                               std::to_string(r.capacity));
            }
          },
          [&](const TwoStageRule& r) {
            if (r.first.ground() != ground || r.second.ground() != ground) {
              throw InputError("two-stage components use a different ground set");
            }
          },
      },
      rule.variant);
}

Bundle EvaluateRule(const RuleSpec& rule, Bundle s) {
  return std::visit(
      Overloaded{
          [&](const PriorityMaxRule& r) {
            return s.size() <= r.capacity ? s : r.order.TopK(s, r.capacity);
          },
          [&](const McRule& r) { return AmEval(r.orders, s); },
          [&](const SeqPrioRivalryRule& r) {
            if (s.size() <= r.capacity) return s;
            Bundle chosen;
            for (const auto& order : r.orders) {
              chosen = chosen.With(*order.Top(s - chosen));
            }
            return chosen;
          },
          [&](const ReservesRule& r) {
            Bundle reserved;
            for (const auto& label : r.labeling.labels()) {
              auto it = r.reserves.find(label);
              if (it == r.reserves.end() || it->second == 0) continue;
              reserved |=
                  r.order.TopK(s & r.labeling.Members(label), it->second);
            }
            const int residual = r.capacity - reserved.size();
            return reserved | r.order.TopK(s - reserved, residual);
          },
          [&](const TwoStageRule& r) {
            const Bundle first = r.first.EvalUnchecked(s);
            return first | r.second.EvalUnchecked(s - first);
          },
      },
      rule.variant);
}

std::string RuleName(const RuleSpec& rule) {
  return std::visit(Overloaded{
                        [](const PriorityMaxRule&) { return "priority_max"; },
                        [](const McRule&) { return "mc"; },
                        [](const SeqPrioRivalryRule&) {
                          return "seq_prio_rivalry";
                        },
                        [](const ReservesRule&) { return "reserves"; },
                        [](const TwoStageRule&) { return "two_stage"; },
                    },
                    rule.variant);
}

ChoiceFunction PriorityMax(const GroundSet& ground, int capacity,
                           LinearOrder order) {
  return Make(ground, {PriorityMaxRule{capacity, std::move(order)}});
}

ChoiceFunction MaximizerCollecting(const GroundSet& ground,
                                   std::vector<LinearOrder> orders) {
  return Make(ground, {McRule{std::move(orders)}});
}

ChoiceFunction SeqPrioRivalry(const GroundSet& ground, int capacity,
                              std::vector<LinearOrder> orders) {
  return Make(ground, {SeqPrioRivalryRule{capacity, std::move(orders)}});
}

ChoiceFunction Reserves(const GroundSet& ground, int capacity,
                        Labeling labeling, std::map<std::string, int> reserves,
                        LinearOrder order) {
  return Make(ground, {ReservesRule{capacity, std::move(labeling),
                                    std::move(reserves), std::move(order)}});
}

ChoiceFunction TwoStage(ChoiceFunction first, ChoiceFunction second) {
  GroundSet ground = first.ground();
  return Make(ground, {TwoStageRule{std::move(first), std::move(second)}});
}

Bundle AmEval(std::span<const LinearOrder> orders, Bundle s) {
  Bundle out;
  for (const auto& order : orders) {
    if (auto top = order.Top(s)) out = out.With(*top);
  }
  return out;
}

LinearOrder MoveToTop(const LinearOrder& order, Bundle group,
                      MoveConvention convention) {
  std::vector<int> head;
  std::vector<int> tail;
  for (int e : order.ranking()) (group.Contains(e) ? head : tail).push_back(e);
  if (convention == MoveConvention::kReverseGroupOrder) {
    std::reverse(head.begin(), head.end());
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return LinearOrder(std::move(head));
}

std::optional<ResponsiveRationalization> ResponsiveRationalize(
    const ChoiceFunction& c) {
  const CapacityReport filling = CheckCapacityFilling(c);
  if (!filling.capacity) return std::nullopt;
  if (!CheckWarsprio(c).holds) return std::nullopt;
  const RevealedPriority revealed = RevealedStrictPriority(c);
  if (!revealed.relation.IsTransitive()) {
    throw InternalError(
        "revealed strict priority of a capacity-filling WARSPrio choice "
        "function is not transitive");
  }
  LinearOrder order = SzpilrajnExtend(revealed.relation);
  const AxiomReport check = CheckQResponsive(c, *filling.capacity, order);
  if (!check.holds) {
    throw InternalError("priority maximization with the extended order does "
                        "not reproduce the choice function at " +
                        c.ground().Format(*check.witness->set("S")));
  }
  return ResponsiveRationalization{*filling.capacity, std::move(order)};
}

AxiomReport CheckQResponsive(const ChoiceFunction& c, int capacity,
                             const LinearOrder& order) {
  const ChoiceFunction reference = PriorityMax(c.ground(), capacity, order);
  Coverage coverage;
  coverage.examined = c.ground().PowerSetSize();
  if (auto s = FirstDisagreement(c, reference)) {
    return AxiomReport::Fail(Witness{{{"S", *s}}, {}}, coverage);
  }
  return AxiomReport::Pass(coverage);
}

}  // namespace combchoice
