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

#ifndef COMBCHOICE_AXIOMS_H_
#define COMBCHOICE_AXIOMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combchoice/choice_function.h"
#include "combchoice/linear_order.h"
#include "combchoice/relation.h"

namespace combchoice {

// Counterexample to an axiom. Sets and elements carry the role they play in
// the axiom's formula ("S", "T", "a", ...).
struct Witness {
  std::vector<std::pair<std::string, Bundle>> sets;
  std::vector<std::pair<std::string, int>> items;

  std::optional<Bundle> set(std::string_view role) const;
  std::optional<int> item(std::string_view role) const;
};

struct Coverage {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t examined = 0;
};

// holds == false iff witness is present.
struct AxiomReport {
  bool holds = true;
  std::optional<Witness> witness;
  Coverage coverage;

  static AxiomReport Pass(Coverage coverage = {}) {
    return {true, std::nullopt, coverage};
  }
  static AxiomReport Fail(Witness witness, Coverage coverage = {}) {
    return {false, std::move(witness), coverage};
  }
};

// "S={a,b} T={a} a=a": sets and items in witness order, items rendered as
// ground labels.
std::string FormatWitness(const Witness& witness, const GroundSet& ground);

// Pair scans are exhaustive unless the number of pairs exceeds max_pairs, in
// which case max_pairs pairs are drawn with a generator seeded by `seed` and
// the report's coverage says so. Exhaustive witnesses are the first violation
// in increasing (S, T) bit order.
struct ScanOptions {
  std::optional<std::uint64_t> max_pairs;
  std::uint64_t seed = 0;
};

// T ⊆ S ⇒ C(S) ∩ T ⊆ C(T). Witness: S, T, a ∈ C(S) ∩ T \ C(T).
AxiomReport CheckSubstitutability(const ChoiceFunction& c,
                                  const ScanOptions& options = {});

// C(S) ⊆ T ⊆ S ⇒ C(T) = C(S). Witness: S, T.
AxiomReport CheckIre(const ChoiceFunction& c, const ScanOptions& options = {});

// C(S ∪ T) = C(C(S) ∪ C(T)). Witness: S, T.
AxiomReport CheckPathIndependence(const ChoiceFunction& c,
                                  const ScanOptions& options = {});

// T ⊆ S ⇒ |C(T)| ≤ |C(S)|, checked on one-element extensions S = T ∪ {a}.
// Witness: T, S.
AxiomReport CheckSizeMonotonicity(const ChoiceFunction& c);
// Same axiom over every nested pair.
AxiomReport CheckSizeMonotonicityFull(const ChoiceFunction& c,
                                      const ScanOptions& options = {});

struct CapacityReport {
  // max_S |C(S)| when the function is capacity-filling for it.
  std::optional<int> capacity;
  AxiomReport report;
};
// |C(S)| = min(|S|, q) for q = max_S |C(S)|. Witness: S.
CapacityReport CheckCapacityFilling(const ChoiceFunction& c);

// a ∈ C(S), b ∈ S \ C(S) ⇒ a ≻ b. Witness: S, chosen a, rejected b.
AxiomReport CheckRespectsPriorities(const ChoiceFunction& c,
                                    const LinearOrder& order);

// ≻*: a ≻* b iff some S has a, b ∈ S, a ∈ C(S), b ∉ C(S).
struct RevealedPriority {
  Relation relation;
  // First S (increasing bit order) revealing (a, b); index a * n + b.
  std::vector<std::optional<Bundle>> evidence;

  std::optional<Bundle> EvidenceFor(int a, int b) const {
    return evidence.at(static_cast<std::size_t>(a) * relation.carrier_size() +
                       b);
  }
};
RevealedPriority RevealedStrictPriority(const ChoiceFunction& c);

// Asymmetry of ≻*. Witness: items a < b revealed both ways, sets S_ab, S_ba.
AxiomReport CheckWarsprio(const ChoiceFunction& c);

struct SubsEquivalents {
  // C(S ∪ T) ⊆ C(S) ∪ C(T).
  AxiomReport subadditivity;
  // S ⊆ T ⇒ S \ C(S) ⊆ T \ C(T).
  AxiomReport monotone_rejection;
  // S ⊆ T ⇒ C(S) ∪ (E \ S) ⊇ C(T) ∪ (E \ T).
  AxiomReport antitone_non_rejection;
};
SubsEquivalents CheckSubsEquivalents(const ChoiceFunction& c,
                                     const ScanOptions& options = {});

// C(C(S)) = C(S). Witness: S.
AxiomReport CheckIdempotence(const ChoiceFunction& c);

struct PiVariants {
  // C(S ∪ T) = C(C(S) ∪ T).
  AxiomReport absorb_one_side;
  // Idempotence and C(C(S ∪ T)) = C(C(S) ∪ C(T)).
  AxiomReport additive_in_image;
};
PiVariants CheckPiVariants(const ChoiceFunction& c,
                           const ScanOptions& options = {});

}  // namespace combchoice

#endif  // COMBCHOICE_AXIOMS_H_
