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

#include "combchoice/revealed.h"

#include <map>
#include <set>
#include <sstream>

#include "combchoice/errors.h"

namespace combchoice {

namespace {

constexpr int kMaxFaithfulElements = 12;
constexpr int kMaxBruteForceAlternatives = 4;

bool Rationalizes(const PureModel& m, const Relation& r) {
  for (int i = 0; i < m.budget_count(); ++i) {
    if (Greatest(m.budget(i), r) != m.choice(i)) return false;
  }
  return true;
}

// Brute-force search over all transitive relations on at most four
// alternatives.
bool AnyTransitiveRationalization(const PureModel& m) {
  const int n = m.alternative_count();
  const std::uint32_t count = 1u << (n * n);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    Relation r(n);
    for (int k = 0; k < n * n; ++k) {
      if (bits >> k & 1u) r.Add(k / n, k % n);
    }
    if (r.IsTransitive() && Rationalizes(m, r)) return true;
  }
  return false;
}

Witness ItemWitness(std::vector<std::pair<std::string, int>> items) {
  return Witness{{}, std::move(items)};
}

// Least upper bound of x and y under `order`, if it exists.
std::optional<int> Join(const Relation& order, int x, int y) {
  const Relation::Row upper = order.row(x) & order.row(y);
  for (auto z = upper.find_first(); z != Relation::Row::npos;
       z = upper.find_next(z)) {
    if (upper.is_subset_of(order.row(z))) return static_cast<int>(z);
  }
  return std::nullopt;
}

std::string StripBraces(const std::string& label) {
  if (label.size() >= 2 && label.front() == '{' && label.back() == '}') {
    return label.substr(1, label.size() - 2);
  }
  return label;
}

}  // namespace

PureModel::PureModel(std::vector<std::string> alternatives,
                     std::vector<AltSet> budgets, std::vector<AltSet> choices,
                     std::optional<Relation> order)
    : alternatives_(std::move(alternatives)),
      budgets_(std::move(budgets)),
      choices_(std::move(choices)),
      order_(std::move(order)) {
  const std::size_t n = alternatives_.size();
  if (budgets_.size() != choices_.size()) {
    throw InputError("pure model has " + std::to_string(budgets_.size()) +
                     " budgets but " + std::to_string(choices_.size()) +
                     " choices");
  }
  for (std::size_t i = 0; i < budgets_.size(); ++i) {
    if (budgets_[i].size() != n || choices_[i].size() != n) {
      throw InputError("budget #" + std::to_string(i) +
                       " is not over the model's alternatives");
    }
    if (budgets_[i].none()) {
      throw InputError("budget #" + std::to_string(i) + " is empty");
    }
    if (choices_[i].none()) {
      throw InputError("choice from budget #" + std::to_string(i) +
                       " is empty");
    }
    if (!choices_[i].is_subset_of(budgets_[i])) {
      throw InputError("choice from budget #" + std::to_string(i) +
                       " leaves the budget");
    }
  }
  if (order_ && order_->carrier_size() != static_cast<int>(n)) {
    throw InputError("order is not over the model's alternatives");
  }
}

int PureModel::IndexOf(const std::string& label) const {
  for (int i = 0; i < alternative_count(); ++i) {
    if (alternatives_[i] == label) return i;
  }
  return -1;
}

std::string PureModel::Format(const AltSet& set) const {
  std::string out = "{";
  bool first = true;
  for (auto x = set.find_first(); x != AltSet::npos; x = set.find_next(x)) {
    if (!first) out += ",";
    out += alternatives_[x];
    first = false;
  }
  return out + "}";
}

AltSet MakeAltSet(int size, const std::vector<int>& members) {
  AltSet out(size);
  for (int x : members) out.set(x);
  return out;
}

std::string FormatPureWitness(const Witness& witness, const PureModel& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [role, value] : witness.items) {
    if (!first) out << ' ';
    first = false;
    out << role << '=';
    if (!role.empty() && role.front() == 'B') {
      out << '#' << value;
    } else {
      out << m.alternatives().at(value);
    }
  }
  return out.str();
}

RevealedRelations ComputeRevealedRelations(const PureModel& m) {
  const int n = m.alternative_count();
  RevealedRelations out{Relation(n), Relation(n)};
  for (int i = 0; i < m.budget_count(); ++i) {
    const AltSet& budget = m.budget(i);
    const AltSet& chosen = m.choice(i);
    const AltSet rejected = budget - chosen;
    for (auto x = chosen.find_first(); x != AltSet::npos;
         x = chosen.find_next(x)) {
      out.weak.AddAll(static_cast<int>(x), budget);
      out.strict.AddAll(static_cast<int>(x), rejected);
    }
  }
  return out;
}

AxiomReport CheckWarp(const PureModel& m) {
  const RevealedRelations rel = ComputeRevealedRelations(m);
  Coverage coverage;
  for (const auto& [x, y] : rel.strict.Pairs()) {
    ++coverage.examined;
    if (!rel.weak.Contains(y, x)) continue;
    int strict_budget = -1;
    int weak_budget = -1;
    for (int i = 0; i < m.budget_count(); ++i) {
      const AltSet& b = m.budget(i);
      const AltSet& c = m.choice(i);
      if (strict_budget < 0 && c.test(x) && b.test(y) && !c.test(y)) {
        strict_budget = i;
      }
      if (weak_budget < 0 && c.test(y) && b.test(x)) weak_budget = i;
    }
    return AxiomReport::Fail(ItemWitness({{"x", x},
                                          {"y", y},
                                          {"B_strict", strict_budget},
                                          {"B_weak", weak_budget}}),
                             coverage);
  }
  return AxiomReport::Pass(coverage);
}

AltSet Greatest(const AltSet& budget, const Relation& r) {
  AltSet out(budget.size());
  for (auto x = budget.find_first(); x != AltSet::npos;
       x = budget.find_next(x)) {
    if (budget.is_subset_of(r.row(static_cast<int>(x)))) out.set(x);
  }
  return out;
}

std::optional<Relation> CheckRationalizable(const PureModel& m) {
  Relation weak = ComputeRevealedRelations(m).weak;
  if (!Rationalizes(m, weak)) return std::nullopt;
  return weak;
}

DomainReport DomainPredicates(const PureModel& m) {
  const int n = m.alternative_count();
  const std::set<AltSet> budgets(m.budgets().begin(), m.budgets().end());
  auto present = [&](const AltSet& s) { return budgets.count(s) > 0; };
  DomainReport report;

  // Complete: every nonempty subset. Missing subsets are searched by
  // increasing size, which terminates quickly because ℬ is finite.
  const bool all_present =
      n < 63 && budgets.size() == (std::uint64_t{1} << n) - 1;
  if (!all_present) {
    for (int k = 1; k <= n && report.complete.holds; ++k) {
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        if (!present(MakeAltSet(n, pick))) {
          Witness w;
          for (int x : pick) w.items.emplace_back("missing", x);
          report.complete = {false, w};
          break;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  for (int i = 0; i < m.budget_count() && report.additive.holds; ++i) {
    for (int j = i + 1; j < m.budget_count(); ++j) {
      if (!present(m.budget(i) | m.budget(j))) {
        report.additive = {false, ItemWitness({{"B1", i}, {"B2", j}})};
        break;
      }
    }
  }

  for (int x = 0; x < n && report.connected.holds; ++x) {
    for (int y = x; y < n && report.connected.holds; ++y) {
      for (int z = y; z < n; ++z) {
        if (!present(MakeAltSet(n, {x, y, z}))) {
          report.connected = {false,
                              ItemWitness({{"x", x}, {"y", y}, {"z", z}})};
          break;
        }
      }
    }
  }

  if (!m.order()) return report;
  const Relation& leq = *m.order();

  DomainFlag comprehensive;
  for (int i = 0; i < m.budget_count() && comprehensive.holds; ++i) {
    const AltSet& b = m.budget(i);
    for (auto x = b.find_first(); x != AltSet::npos && comprehensive.holds;
         x = b.find_next(x)) {
      for (int y = 0; y < n; ++y) {
        if (leq.Contains(y, static_cast<int>(x)) && !b.test(y)) {
          comprehensive = {false,
                           ItemWitness({{"B", i},
                                        {"x", static_cast<int>(x)},
                                        {"y", y}})};
          break;
        }
      }
    }
  }
  report.comprehensive = comprehensive;

  DomainFlag combinatorial = comprehensive;
  for (int i = 0; i < m.budget_count() && combinatorial.holds; ++i) {
    const AltSet& b = m.budget(i);
    for (auto x = b.find_first(); x != AltSet::npos && combinatorial.holds;
         x = b.find_next(x)) {
      for (auto y = b.find_next(x); y != AltSet::npos; y = b.find_next(y)) {
        const auto join =
            Join(leq, static_cast<int>(x), static_cast<int>(y));
        if (!join || !b.test(*join)) {
          combinatorial = {false, ItemWitness({{"B", i},
                                               {"x", static_cast<int>(x)},
                                               {"y", static_cast<int>(y)}})};
          break;
        }
      }
    }
  }
  for (int x = 0; x < n && combinatorial.holds; ++x) {
    bool bounded = false;
    for (const AltSet& b : m.budgets()) {
      if (!b.test(x)) continue;
      bool maximal = true;
      for (auto y = b.find_first(); y != AltSet::npos; y = b.find_next(y)) {
        if (static_cast<int>(y) != x && leq.Contains(x, static_cast<int>(y))) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        bounded = true;
        break;
      }
    }
    if (!bounded) combinatorial = {false, ItemWitness({{"unbounded", x}})};
  }
  report.combinatorial = combinatorial;
  return report;
}

std::optional<Relation> CheckTransitiveRationalizable(const PureModel& m) {
  Relation candidate =
      TransitiveClosure(ComputeRevealedRelations(m).weak);
  if (Rationalizes(m, candidate)) return candidate;
  if (m.alternative_count() <= kMaxBruteForceAlternatives &&
      AnyTransitiveRationalization(m)) {
    throw InternalError(
        "transitive rationalization exists although the closure of the "
        "revealed relation fails");
  }
  return std::nullopt;
}

PureModel FaithfulF(const ChoiceFunction& c) {
  const int n = c.size();
  if (n > kMaxFaithfulElements) {
    throw ScaleError("faithful map needs at most " +
                     std::to_string(kMaxFaithfulElements) +
                     " elements; got " + std::to_string(n));
  }
  const GroundSet& g = c.ground();
  const int count = 1 << n;
  std::vector<std::string> alternatives;
  alternatives.reserve(count);
  ForEachBundle(n, [&](Bundle x) { alternatives.push_back(g.Format(x)); });

  std::vector<AltSet> budgets;
  std::vector<AltSet> choices;
  Relation order(count);
  ForEachBundle(n, [&](Bundle y) {
    AltSet budget(count);
    ForEachSubset(y, [&](Bundle x) {
      budget.set(x.bits());
      order.Add(static_cast<int>(x.bits()), static_cast<int>(y.bits()));
    });
    AltSet chosen(count);
    chosen.set(c.EvalUnchecked(y).bits());
    budgets.push_back(std::move(budget));
    choices.push_back(std::move(chosen));
  });
  return PureModel(std::move(alternatives), std::move(budgets),
                   std::move(choices), std::move(order));
}

ChoiceFunction FaithfulG(const PureModel& m) {
  if (!m.order()) throw NotBooleanLattice("alternatives carry no order");
  const Relation& leq = *m.order();
  const int n = m.alternative_count();
  auto label = [&](int x) { return m.alternatives()[x]; };

  for (int x = 0; x < n; ++x) {
    if (!leq.Contains(x, x)) {
      throw NotBooleanLattice("order is not reflexive at " + label(x));
    }
    for (int y = x + 1; y < n; ++y) {
      if (leq.Contains(x, y) && leq.Contains(y, x)) {
        throw NotBooleanLattice("order is not antisymmetric at " + label(x) +
                                ", " + label(y));
      }
    }
  }
  if (!leq.IsTransitive()) throw NotBooleanLattice("order is not transitive");

  int bottom = -1;
  for (int x = 0; x < n && bottom < 0; ++x) {
    if (leq.row(x).all()) bottom = x;
  }
  if (bottom < 0) throw NotBooleanLattice("order has no bottom");

  std::vector<int> atoms;
  for (int x = 0; x < n; ++x) {
    if (x == bottom) continue;
    int below = 0;
    for (int y = 0; y < n; ++y) below += leq.Contains(y, x) ? 1 : 0;
    if (below == 2) atoms.push_back(x);
  }
  const int k = static_cast<int>(atoms.size());
  if (k > GroundSet::kMaxSize || (std::size_t{1} << k) != std::size_t(n)) {
    throw NotBooleanLattice(std::to_string(n) + " alternatives with " +
                            std::to_string(k) + " atoms");
  }

  // Representation x ↦ atoms below x, required to be an order isomorphism
  // onto 2^atoms.
  std::vector<Bundle> rep(n);
  std::vector<int> of_rep(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < k; ++i) {
      if (leq.Contains(atoms[i], x)) rep[x] = rep[x].With(i);
    }
    int& slot = of_rep[rep[x].bits()];
    if (slot >= 0) {
      throw NotBooleanLattice(label(slot) + " and " + label(x) +
                              " lie above the same atoms");
    }
    slot = x;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (leq.Contains(x, y) != rep[x].IsSubsetOf(rep[y])) {
        throw NotBooleanLattice("order is not the inclusion order of atoms at " +
                                label(x) + ", " + label(y));
      }
    }
  }

  std::vector<std::string> element_labels;
  for (int a : atoms) element_labels.push_back(StripBraces(label(a)));
  GroundSet ground(std::move(element_labels));

  std::vector<std::optional<Bundle>> table(n);
  for (int i = 0; i < m.budget_count(); ++i) {
    const AltSet& b = m.budget(i);
    Bundle option;
    for (auto x = b.find_first(); x != AltSet::npos; x = b.find_next(x)) {
      option |= rep[x];
      for (int y = 0; y < n; ++y) {
        if (leq.Contains(y, static_cast<int>(x)) && !b.test(y)) {
          throw NotBooleanLattice("budget #" + std::to_string(i) +
                                  " is not downward closed at " +
                                  label(static_cast<int>(x)));
        }
      }
    }
    if (!b.test(of_rep[option.bits()])) {
      throw NotBooleanLattice("budget #" + std::to_string(i) +
                              " is not join-closed");
    }
    if (m.choice(i).count() != 1) {
      throw NotDecisive("choice from budget #" + std::to_string(i) + " has " +
                        std::to_string(m.choice(i).count()) +
                        " alternatives");
    }
    const Bundle chosen = rep[m.choice(i).find_first()];
    auto& slot = table[option.bits()];
    if (slot && *slot != chosen) {
      throw InputError("budgets disagree on the choice from option set " +
                       ground.Format(option));
    }
    slot = chosen;
  }

  ChoiceFunction::Table out(n);
  for (int bits = 0; bits < n; ++bits) {
    const Bundle s = Bundle::FromBits(static_cast<std::uint32_t>(bits));
    if (table[bits]) {
      out[bits] = *table[bits];
    } else if (!s.empty()) {
      throw InputError("no budget determines the choice from option set " +
                       ground.Format(s));
    }
  }
  return ChoiceFunction::FromTable(std::move(ground), std::move(out));
}

}  // namespace combchoice
