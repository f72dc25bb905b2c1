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

#include "combchoice/demand.h"

#include <sstream>

#include "combchoice/errors.h"

namespace combchoice {

namespace {

constexpr int kMaxRationalizeElements = 12;

boost::multiprecision::cpp_int ParseInteger(std::string_view text,
                                            std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  const boost::multiprecision::cpp_int value{std::string(digits)};
  return !text.empty() && text.front() == '-' ? -value : value;
}

Witness PairWitness(int i, int j, Bundle a, Bundle a_prime) {
  return Witness{{{"A", a}, {"A_prime", a_prime}}, {{"p", i}, {"p_prime", j}}};
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  const auto num = ParseInteger(text.substr(0, slash), text);
  const auto den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string FormatRational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

PriceVector::PriceVector(std::vector<Rational> price_of)
    : price_of_(std::move(price_of)) {
  for (std::size_t a = 0; a < price_of_.size(); ++a) {
    if (price_of_[a] <= 0) {
      throw InputError("price of element " + std::to_string(a) +
                       " is not positive: " + FormatRational(price_of_[a]));
    }
  }
}

Valuation::Valuation(int n, std::vector<Rational> value_of)
    : n_(n), value_of_(std::move(value_of)) {
  if (n < 0 || n > GroundSet::kMaxSize ||
      value_of_.size() != (std::size_t{1} << n)) {
    throw InputError("valuation over " + std::to_string(n) +
                     " elements needs " + std::to_string(1u << n) +
                     " values");
  }
}

void ValidateObservations(std::span<const DemandObservation> observations,
                          int n) {
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const auto& obs = observations[i];
    if (obs.price.size() != n) {
      throw InputError("observation #" + std::to_string(i) + " prices " +
                       std::to_string(obs.price.size()) +
                       " elements; expected " + std::to_string(n));
    }
    if (obs.demanded.empty()) {
      throw InputError("observation #" + std::to_string(i) +
                       " has no demanded bundle");
    }
    for (Bundle a : obs.demanded) {
      if (!a.IsSubsetOf(Bundle::Full(n))) {
        throw InputError("observation #" + std::to_string(i) +
                         " demands a bundle outside the ground set");
      }
    }
  }
}

Rational BundleValue(const PriceVector& p, Bundle a) {
  Rational total = 0;
  for (int e : a) total += p[e];
  return total;
}

std::string FormatDemandWitness(const Witness& witness,
                                const GroundSet& ground) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [role, set] : witness.sets) {
    if (!first) out << ' ';
    first = false;
    out << role << '=' << ground.Format(set);
  }
  for (const auto& [role, index] : witness.items) {
    if (!first) out << ' ';
    first = false;
    out << role << "=#" << index;
  }
  return out.str();
}

AxiomReport CheckLawOfDemand(std::span<const DemandObservation> observations) {
  Coverage coverage;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    for (std::size_t j = i + 1; j < observations.size(); ++j) {
      const PriceVector& p = observations[i].price;
      const PriceVector& q = observations[j].price;
      for (Bundle a : observations[i].demanded) {
        for (Bundle b : observations[j].demanded) {
          ++coverage.examined;
          // ⟨p − q, A − B⟩ = ⟨p, A⟩ − ⟨p, B⟩ − ⟨q, A⟩ + ⟨q, B⟩.
          const Rational inner = BundleValue(p, a) - BundleValue(p, b) -
                                 BundleValue(q, a) + BundleValue(q, b);
          if (inner > 0) {
            return AxiomReport::Fail(PairWitness(static_cast<int>(i),
                                                 static_cast<int>(j), a, b),
                                     coverage);
          }
        }
      }
    }
  }
  return AxiomReport::Pass(coverage);
}

AxiomReport CheckDemandWarp(std::span<const DemandObservation> observations) {
  Coverage coverage;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    for (std::size_t j = 0; j < observations.size(); ++j) {
      const PriceVector& p = observations[i].price;
      const PriceVector& q = observations[j].price;
      for (Bundle a : observations[i].demanded) {
        for (Bundle b : observations[j].demanded) {
          ++coverage.examined;
          if (BundleValue(p, b) < BundleValue(p, a) &&
              !(BundleValue(q, a) > BundleValue(q, b))) {
            return AxiomReport::Fail(PairWitness(static_cast<int>(i),
                                                 static_cast<int>(j), a, b),
                                     coverage);
          }
        }
      }
    }
  }
  return AxiomReport::Pass(coverage);
}

std::vector<Bundle> DerivedDemand(const Valuation& v, const PriceVector& p) {
  if (p.size() != v.size()) {
    throw InputError("price vector and valuation cover different elements");
  }
  std::vector<Bundle> best;
  Rational best_utility;
  ForEachBundle(v.size(), [&](Bundle a) {
    const Rational utility = v(a) - BundleValue(p, a);
    if (best.empty() || utility > best_utility) {
      best = {a};
      best_utility = utility;
    } else if (utility == best_utility) {
      best.push_back(a);
    }
  });
  return best;
}

QuasilinearResult QuasilinearRationalize(
    std::span<const DemandObservation> observations, int n) {
  if (n > kMaxRationalizeElements) {
    throw ScaleError("quasilinear rationalization needs at most " +
                     std::to_string(kMaxRationalizeElements) +
                     " elements; got " + std::to_string(n));
  }
  ValidateObservations(observations, n);
  const int count = 1 << n;

  std::vector<ConstraintEdge> edges;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const PriceVector& p = observations[i].price;
    for (Bundle a : observations[i].demanded) {
      const Rational cost_a = BundleValue(p, a);
      ForEachBundle(n, [&](Bundle b) {
        if (b == a) return;
        edges.push_back(
            {a, b, static_cast<int>(i), BundleValue(p, b) - cost_a});
      });
    }
  }

  // Bellman-Ford from an implicit source joined to every bundle by a
  // zero-weight edge.
  std::vector<Rational> dist(count, Rational(0));
  std::vector<int> pred(count, -1);
  int relaxed_at = -1;
  for (int round = 0; round <= count; ++round) {
    relaxed_at = -1;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      const Rational candidate = dist[e.from.bits()] + e.weight;
      if (candidate < dist[e.to.bits()]) {
        dist[e.to.bits()] = candidate;
        pred[e.to.bits()] = static_cast<int>(k);
        relaxed_at = static_cast<int>(e.to.bits());
      }
    }
    if (relaxed_at < 0) break;
  }

  QuasilinearResult result;
  if (relaxed_at >= 0) {
    int node = relaxed_at;
    for (int i = 0; i < count; ++i) {
      if (pred[node] < 0) {
        throw InternalError("negative cycle walk left the predecessor graph");
      }
      node = static_cast<int>(edges[pred[node]].from.bits());
    }
    const int start = node;
    std::vector<ConstraintEdge> backwards;
    do {
      const auto& e = edges[pred[node]];
      backwards.push_back(e);
      node = static_cast<int>(e.from.bits());
    } while (node != start);
    result.cycle.assign(backwards.rbegin(), backwards.rend());
    return result;
  }

  std::vector<Rational> values(count);
  for (int b = 0; b < count; ++b) values[b] = dist[b] - dist[0];
  Valuation v(n, std::move(values));
  for (const auto& e : edges) {
    if (v(e.to) - v(e.from) > e.weight) {
      throw InternalError("quasilinear solution violates a constraint");
    }
  }
  result.valuation = std::move(v);
  return result;
}

}  // namespace combchoice
