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

#include "combchoice/lattice.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "combchoice/errors.h"

namespace combchoice {

namespace {

bool FamilyOrder(Bundle a, Bundle b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace

Bundle Sharp(const ChoiceFunction& c, Bundle s) {
  c.ground().Validate(s);
  const Bundle chosen = c.EvalUnchecked(s);
  Bundle sharp = chosen;
  for (int a = 0; a < c.size(); ++a) {
    if (chosen.Contains(a)) continue;
    if (c.EvalUnchecked(chosen.With(a)) == chosen) sharp = sharp.With(a);
  }
  if (c.EvalUnchecked(sharp) != chosen || !s.IsSubsetOf(sharp)) {
    throw NotPathIndependent("elementwise maximal set " +
                             c.ground().Format(sharp) +
                             " is not choice-equivalent to " +
                             c.ground().Format(s));
  }
  return sharp;
}

bool MaximalFamily::Contains(Bundle s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

MaximalFamily ComputeMaximalFamily(const ChoiceFunction& c) {
  const Bundle top = c.ground().Full();
  std::set<std::uint32_t> seen{top.bits()};
  std::deque<Bundle> queue{top};
  std::vector<Bundle> sets;
  while (!queue.empty()) {
    const Bundle s = queue.front();
    queue.pop_front();
    sets.push_back(s);
    for (int a : c.EvalUnchecked(s)) {
      const Bundle child = s.Without(a);
      if (seen.insert(child.bits()).second) queue.push_back(child);
    }
  }
  std::sort(sets.begin(), sets.end(), FamilyOrder);

  std::vector<Bundle> fixed_points;
  ForEachBundle(c.size(), [&](Bundle s) {
    if (Sharp(c, s) == s) fixed_points.push_back(s);
  });
  std::sort(fixed_points.begin(), fixed_points.end(), FamilyOrder);
  if (fixed_points != sets) {
    throw NotPathIndependent(
        "top-down construction and fixed points of the maximal-set map "
        "disagree");
  }
  return MaximalFamily{std::move(sets), c};
}

AxiomReport VerifyLattice(const MaximalFamily& family, int universe) {
  Coverage coverage;
  const auto& sets = family.sets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ++coverage.examined;
      if (!family.Contains(sets[i] & sets[j])) {
        return AxiomReport::Fail(
            Witness{{{"S", sets[i]}, {"T", sets[j]}}, {}}, coverage);
      }
    }
  }
  const Bundle top = Bundle::Full(universe);
  if (!family.Contains(top)) {
    return AxiomReport::Fail(Witness{{{"missing", top}}, {}}, coverage);
  }
  const Bundle bottom =
      family.for_choice ? Sharp(*family.for_choice, Bundle()) : Bundle();
  if (!family.Contains(bottom)) {
    return AxiomReport::Fail(Witness{{{"missing", bottom}}, {}}, coverage);
  }
  return AxiomReport::Pass(coverage);
}

HasseDiagram Hasse(const ChoiceFunction& c) {
  MaximalFamily family = ComputeMaximalFamily(c);
  HasseDiagram diagram{c.ground(), family.sets, {}, {}};
  for (Bundle s : diagram.nodes) {
    const Bundle chosen = c.EvalUnchecked(s);
    diagram.chosen.push_back(chosen);
    for (int a : chosen) diagram.edges.push_back({s, s.Without(a), a});
  }
  return diagram;
}

std::string ToDot(const HasseDiagram& diagram) {
  const GroundSet& g = diagram.ground;
  auto id_of = [&](Bundle s) {
    return std::find(diagram.nodes.begin(), diagram.nodes.end(), s) -
           diagram.nodes.begin();
  };
  std::ostringstream out;
  out << "digraph maximal_option_sets {\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << g.Format(diagram.nodes[i])
        << "\", chosen=\"" << g.Key(diagram.chosen[i]) << "\"];\n";
  }
  for (const auto& edge : diagram.edges) {
    out << "  n" << id_of(edge.parent) << " -> n" << id_of(edge.child)
        << " [label=\"-" << g.label(edge.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Bundle AmEval(const McRationalization& mc, Bundle s) {
  const Bundle visible = s & mc.scope;
  Bundle out;
  for (const auto& order : mc.orders) {
    if (auto top = order.Top(visible)) out = out.With(*top);
  }
  return out;
}

McRationalization MaximalMcRationalization(const ChoiceFunction& c,
                                           std::uint64_t max_orders) {
  ComputeMaximalFamily(c);  // rejects non-path-independent input
  const Bundle bottom = Sharp(c, Bundle());
  McRationalization mc{{}, c.ground().Full() - bottom};

  std::set<std::vector<int>> seen;
  std::uint64_t chains = 0;
  std::vector<int> prefix;
  auto dfs = [&](auto&& self, Bundle s) -> void {
    const Bundle chosen = c.EvalUnchecked(s);
    if (chosen.empty()) {
      if (++chains > max_orders) {
        throw ScaleError("more than " + std::to_string(max_orders) +
                         " maximal chains");
      }
      std::vector<int> ranking = prefix;
      for (int e : s) ranking.push_back(e);
      if (seen.insert(ranking).second) {
        mc.orders.emplace_back(std::move(ranking));
      }
      return;
    }
    for (int a : chosen) {
      prefix.push_back(a);
      self(self, s.Without(a));
      prefix.pop_back();
    }
  };
  dfs(dfs, c.ground().Full());

  std::optional<Bundle> bad;
  ForEachBundle(c.size(), [&](Bundle s) {
    if (!bad && AmEval(mc, s) != c.EvalUnchecked(s)) bad = s;
  });
  if (bad) {
    throw NotPathIndependent("chain orders do not reproduce the choice at " +
                             c.ground().Format(*bad));
  }
  return mc;
}

std::optional<MinimumMc> MinMcSize(const ChoiceFunction& c,
                                   std::uint64_t budget) {
  const McRationalization all = MaximalMcRationalization(c);
  const ChoiceFunction::Table table = c.Tabulate();
  const int m = static_cast<int>(all.orders.size());
  std::uint64_t examined = 0;

  auto reproduces = [&](const McRationalization& candidate) {
    for (std::size_t bits = 0; bits < table.size(); ++bits) {
      const Bundle s = Bundle::FromBits(static_cast<std::uint32_t>(bits));
      if (AmEval(candidate, s) != table[bits]) return false;
    }
    return true;
  };

  for (int k = 0; k <= m; ++k) {
    // Lexicographic k-combinations of the chain orders.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++examined > budget) return std::nullopt;
      McRationalization candidate{{}, all.scope};
      for (int i : pick) candidate.orders.push_back(all.orders[i]);
      if (reproduces(candidate)) return MinimumMc{k, std::move(candidate)};
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InternalError("full chain-order set failed to rationalize");
}

}  // namespace combchoice
