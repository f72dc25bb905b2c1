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

#ifndef COMBCHOICE_DEMAND_H_
#define COMBCHOICE_DEMAND_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "combchoice/axioms.h"
#include "combchoice/bundle.h"
#include "combchoice/ground_set.h"

namespace combchoice {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" or an integer, optionally signed. Throws InputError.
Rational ParseRational(std::string_view text);
// Lowest terms; "p" when the denominator is 1, else "p/q".
std::string FormatRational(const Rational& r);

// Strictly positive price per element.
class PriceVector {
 public:
  PriceVector() = default;
  // Throws InputError unless every entry is > 0.
  explicit PriceVector(std::vector<Rational> price_of);

  int size() const { return static_cast<int>(price_of_.size()); }
  const Rational& operator[](int element) const { return price_of_.at(element); }
  const std::vector<Rational>& entries() const { return price_of_; }

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> price_of_;
};

// v : 2^E → ℚ, indexed by bundle bits.
class Valuation {
 public:
  Valuation() = default;
  // Throws InputError unless value_of has 2^n entries.
  Valuation(int n, std::vector<Rational> value_of);

  int size() const { return n_; }
  const Rational& operator()(Bundle a) const { return value_of_.at(a.bits()); }
  const std::vector<Rational>& values() const { return value_of_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> value_of_;
};

struct DemandObservation {
  PriceVector price;
  std::vector<Bundle> demanded;  // nonempty
};

// Throws InputError for empty demand, bundles outside E, or prices of the
// wrong length.
void ValidateObservations(std::span<const DemandObservation> observations,
                          int n);

// ⟨p, A⟩.
Rational BundleValue(const PriceVector& p, Bundle a);

// Items are observation indices ("p", "p_prime") rendered "#k"; sets use
// ground labels.
std::string FormatDemandWitness(const Witness& witness,
                                const GroundSet& ground);

// ⟨p − p′, A − A′⟩ ≤ 0 for every pair of observations and demanded bundles.
// Witness: observations p, p_prime and bundles A, A_prime.
AxiomReport CheckLawOfDemand(std::span<const DemandObservation> observations);

// A ∈ D(p), A′ ∈ D(p′), ⟨p, A′⟩ < ⟨p, A⟩ ⇒ ⟨p′, A⟩ > ⟨p′, A′⟩. Same witness
// roles as the law of demand.
AxiomReport CheckDemandWarp(std::span<const DemandObservation> observations);

// argmax_A v(A) − ⟨p, A⟩ over 2^E, in increasing bit order.
std::vector<Bundle> DerivedDemand(const Valuation& v, const PriceVector& p);

// Edge of the constraint graph: v(to) − v(from) ≤ ⟨p, to⟩ − ⟨p, from⟩ from
// observation `observation`, where `from` is demanded there.
struct ConstraintEdge {
  Bundle from;
  Bundle to;
  int observation = 0;
  Rational weight;
};

struct QuasilinearResult {
  // Normalized so that v(∅) = 0.
  std::optional<Valuation> valuation;
  // Negative-weight cycle of constraints when infeasible, in traversal order.
  std::vector<ConstraintEdge> cycle;
};

// A valuation v with v(A) − ⟨p, A⟩ ≥ v(B) − ⟨p, B⟩ for every observation,
// demanded A and bundle B. Throws ScaleError beyond 12 elements and
// InternalError if a solution fails verification.
QuasilinearResult QuasilinearRationalize(
    std::span<const DemandObservation> observations, int n);

}  // namespace combchoice

#endif  // COMBCHOICE_DEMAND_H_
