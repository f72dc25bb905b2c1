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

#include "combchoice/generators.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "combchoice/errors.h"

namespace combchoice {

namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Bundle RandomSubset(Bundle s, Rng& rng) {
  Bundle out;
  for (int e : s) {
    if (Uniform(rng, 0, 1)) out = out.With(e);
  }
  return out;
}

std::vector<std::string> ObjectNames(int count) {
  std::vector<std::string> names;
  for (int o = 0; o < count; ++o) names.emplace_back(1, char('a' + o));
  return names;
}

}  // namespace

std::uint64_t ChoiceFunctionCount(int n) {
  if (n < 0 || n > 5) {
    throw ScaleError("choice function count overflows beyond 5 elements");
  }
  const int exponent = n == 0 ? 0 : n << (n - 1);
  if (exponent > 62) {
    throw ScaleError("2^" + std::to_string(exponent) + " choice functions");
  }
  return std::uint64_t{1} << exponent;
}

ChoiceFunction ChoiceFunctionFromCode(const GroundSet& ground,
                                      std::uint64_t code) {
  const int n = ground.size();
  if (code >= ChoiceFunctionCount(n)) {
    throw InputError("choice function code out of range");
  }
  ChoiceFunction::Table table(std::size_t{1} << n);
  ForEachBundle(n, [&](Bundle s) {
    const std::uint64_t radix = std::uint64_t{1} << s.size();
    std::uint64_t digit = code % radix;
    code /= radix;
    ForEachSubset(s, [&](Bundle t) {
      if (digit-- == 0) table[s.bits()] = t;
    });
  });
  return ChoiceFunction::FromTable(ground, std::move(table));
}

LinearOrder RandomLinearOrder(int n, Rng& rng) {
  std::vector<int> ranking(n);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::shuffle(ranking.begin(), ranking.end(), rng);
  return LinearOrder(std::move(ranking));
}

ChoiceFunction RandomChoiceFunction(const GroundSet& ground, Rng& rng) {
  ChoiceFunction::Table table(ground.PowerSetSize());
  ForEachBundle(ground.size(),
                [&](Bundle s) { table[s.bits()] = RandomSubset(s, rng); });
  return ChoiceFunction::FromTable(ground, std::move(table));
}

ChoiceFunction RandomSubstitutable(const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  std::vector<std::vector<Bundle>> generators(n);
  for (int e = 0; e < n; ++e) {
    const int count = Uniform(rng, 0, 2);
    for (int k = 0; k < count; ++k) {
      generators[e].push_back(RandomSubset(ground.Full(), rng).With(e));
    }
  }
  ChoiceFunction::Table table(ground.PowerSetSize());
  ForEachBundle(n, [&](Bundle s) {
    Bundle chosen = s;
    for (int e : s) {
      for (Bundle g : generators[e]) {
        if (g.IsSubsetOf(s)) {
          chosen = chosen.Without(e);
          break;
        }
      }
    }
    table[s.bits()] = chosen;
  });
  return ChoiceFunction::FromTable(ground, std::move(table));
}

ChoiceFunction RandomIre(const GroundSet& ground, Rng& rng) {
  const int size = ground.PowerSetSize();
  std::vector<int> rank(size);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  ChoiceFunction::Table table(size);
  ForEachBundle(ground.size(), [&](Bundle s) {
    Bundle best = s;
    ForEachSubset(s, [&](Bundle t) {
      if (rank[t.bits()] < rank[best.bits()]) best = t;
    });
    table[s.bits()] = best;
  });
  return ChoiceFunction::FromTable(ground, std::move(table));
}

ChoiceFunction RandomPathIndependent(const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  if (Uniform(rng, 0, 1) == 0) return RandomPriorityMax(ground, rng).Compile();
  std::vector<LinearOrder> orders;
  const int count = Uniform(rng, 1, 3);
  for (int k = 0; k < count; ++k) orders.push_back(RandomLinearOrder(n, rng));
  return MaximizerCollecting(ground, std::move(orders)).Compile();
}

ChoiceFunction RandomPriorityMax(const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  return PriorityMax(ground, Uniform(rng, 0, n), RandomLinearOrder(n, rng));
}

ChoiceFunction RandomSeqPrioRivalry(const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  const int q = Uniform(rng, 0, n);
  std::vector<LinearOrder> orders;
  for (int k = 0; k < q; ++k) orders.push_back(RandomLinearOrder(n, rng));
  return SeqPrioRivalry(ground, q, std::move(orders));
}

ChoiceFunction RandomReserves(const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  const int label_count = Uniform(rng, 2, 3);
  std::vector<std::string> label_of;
  for (int e = 0; e < n; ++e) {
    label_of.push_back("g" + std::to_string(Uniform(rng, 1, label_count)));
  }
  Labeling labeling(std::move(label_of));
  const int q = Uniform(rng, 0, n);
  std::map<std::string, int> reserves;
  int left = q;
  for (const auto& label : labeling.labels()) {
    const int r = Uniform(rng, 0, left);
    reserves[label] = r;
    left -= r;
  }
  return Reserves(ground, q, std::move(labeling), std::move(reserves),
                  RandomLinearOrder(n, rng));
}

ChoiceFunction RandomInClass(const GroundSet& ground, RuleClass rule_class,
                             Rng& rng) {
  switch (rule_class) {
    case RuleClass::kArbitrary:
      return RandomChoiceFunction(ground, rng);
    case RuleClass::kSubstitutable:
      return RandomSubstitutable(ground, rng);
    case RuleClass::kIre:
      return RandomIre(ground, rng);
    case RuleClass::kPathIndependent:
      return RandomPathIndependent(ground, rng);
  }
  throw InternalError("unknown rule class");
}

MatchingProblem RandomMatchingProblem(int agents, int objects,
                                      RuleClass rule_class, Rng& rng) {
  const GroundSet ground = GroundSet::Numbered(agents);
  std::vector<std::vector<int>> preferences(agents);
  for (auto& pref : preferences) {
    std::vector<int> all(objects);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(Uniform(rng, 0, objects));
    pref = std::move(all);
  }
  std::vector<ChoiceFunction> choices;
  for (int o = 0; o < objects; ++o) {
    choices.push_back(RandomInClass(ground, rule_class, rng));
  }
  return MatchingProblem(ground, ObjectNames(objects), std::move(preferences),
                         std::move(choices));
}

Valuation RandomValuation(int n, Rng& rng) {
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::size_t b = 1; b < values.size(); ++b) {
    values[b] = Uniform(rng, 0, 4 * n);
  }
  return Valuation(n, std::move(values));
}

PriceVector RandomPriceVector(int n, Rng& rng) {
  std::vector<Rational> prices;
  for (int e = 0; e < n; ++e) {
    prices.emplace_back(Uniform(rng, 1, 12), Uniform(rng, 1, 3));
  }
  return PriceVector(std::move(prices));
}

}  // namespace combchoice
