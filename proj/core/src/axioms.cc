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

#include "combchoice/axioms.h"

#include <random>

#include "combchoice/errors.h"

namespace combchoice {

std::optional<Bundle> Witness::set(std::string_view role) const {
  for (const auto& [name, value] : sets) {
    if (name == role) return value;
  }
  return std::nullopt;
}

std::optional<int> Witness::item(std::string_view role) const {
  for (const auto& [name, value] : items) {
    if (name == role) return value;
  }
  return std::nullopt;
}

std::string FormatWitness(const Witness& witness, const GroundSet& ground) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  for (const auto& [role, value] : witness.sets) {
    sep();
    out += role + "=" + ground.Format(value);
  }
  for (const auto& [role, value] : witness.items) {
    sep();
    out += role + "=" +
           (value >= 0 && value < ground.size() ? ground.label(value)
                                                : std::to_string(value));
  }
  return out;
}

namespace {

// Table-backed evaluation for the scans; falls back to the function itself
// beyond the tabulation cap.
class Evaluator {
 public:
  explicit Evaluator(const ChoiceFunction& c) : c_(c) {
    if (c.size() <= 20) table_ = c.Tabulate();
  }
  Bundle operator()(Bundle s) const {
    return table_.empty() ? c_.EvalUnchecked(s) : table_[s.bits()];
  }
  int n() const { return c_.size(); }
  Bundle full() const { return Bundle::Full(c_.size()); }

 private:
  const ChoiceFunction& c_;
  ChoiceFunction::Table table_;
};

enum class PairDomain {
  kAll,     // every (S, T)
  kNested,  // T ⊆ S
};

std::uint64_t PairCount(int n, PairDomain domain) {
  // 4^n or 3^n, saturating.
  const std::uint64_t base = domain == PairDomain::kAll ? 4 : 3;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > (std::uint64_t{1} << 62) / base) return ~std::uint64_t{0};
    count *= base;
  }
  return count;
}

// check(S, T) returns a witness on violation.
template <typename Check>
AxiomReport ScanPairs(int n, PairDomain domain, const ScanOptions& options,
                      Check&& check) {
  const std::uint64_t total = PairCount(n, domain);
  const std::uint32_t full = Bundle::Full(n).bits();
  if (options.max_pairs && total > *options.max_pairs) {
    Coverage coverage{false, options.seed, *options.max_pairs};
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < *options.max_pairs; ++i) {
      const auto s = static_cast<std::uint32_t>(rng()) & full;
      auto t = static_cast<std::uint32_t>(rng()) & full;
      if (domain == PairDomain::kNested) t &= s;
      if (auto w = check(Bundle::FromBits(s), Bundle::FromBits(t))) {
        coverage.examined = i + 1;
        return AxiomReport::Fail(std::move(*w), coverage);
      }
    }
    return AxiomReport::Pass(coverage);
  }
  Coverage coverage{true, 0, 0};
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t sb = 0; sb < count; ++sb) {
    const Bundle s = Bundle::FromBits(static_cast<std::uint32_t>(sb));
    std::optional<Witness> found;
    auto visit = [&](Bundle t) {
      if (found) return;
      ++coverage.examined;
      found = check(s, t);
    };
    if (domain == PairDomain::kNested) {
      ForEachSubset(s, visit);
    } else {
      ForEachBundle(n, visit);
    }
    if (found) return AxiomReport::Fail(std::move(*found), coverage);
  }
  return AxiomReport::Pass(coverage);
}

Witness SetsWitness(Bundle s, Bundle t) { return Witness{{{"S", s}, {"T", t}}, {}}; }

}  // namespace

AxiomReport CheckSubstitutability(const ChoiceFunction& c,
                                  const ScanOptions& options) {
  const Evaluator eval(c);
  return ScanPairs(
      c.size(), PairDomain::kNested, options,
      [&](Bundle s, Bundle t) -> std::optional<Witness> {
        const Bundle lost = (eval(s) & t) - eval(t);
        if (lost.empty()) return std::nullopt;
        return Witness{{{"S", s}, {"T", t}}, {{"a", *lost.begin()}}};
      });
}

AxiomReport CheckIre(const ChoiceFunction& c, const ScanOptions& options) {
  const Evaluator eval(c);
  return ScanPairs(c.size(), PairDomain::kNested, options,
                   [&](Bundle s, Bundle t) -> std::optional<Witness> {
                     const Bundle cs = eval(s);
                     if (!cs.IsSubsetOf(t) || eval(t) == cs) return std::nullopt;
                     return SetsWitness(s, t);
                   });
}

AxiomReport CheckPathIndependence(const ChoiceFunction& c,
                                  const ScanOptions& options) {
  const Evaluator eval(c);
  return ScanPairs(c.size(), PairDomain::kAll, options,
                   [&](Bundle s, Bundle t) -> std::optional<Witness> {
                     if (eval(s | t) == eval(eval(s) | eval(t))) {
                       return std::nullopt;
                     }
                     return SetsWitness(s, t);
                   });
}

AxiomReport CheckSizeMonotonicity(const ChoiceFunction& c) {
  const Evaluator eval(c);
  const int n = c.size();
  Coverage coverage;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t tb = 0; tb < count; ++tb) {
    const Bundle t = Bundle::FromBits(static_cast<std::uint32_t>(tb));
    const int small = eval(t).size();
    for (int a = 0; a < n; ++a) {
      if (t.Contains(a)) continue;
      ++coverage.examined;
      const Bundle s = t.With(a);
      if (eval(s).size() < small) {
        return AxiomReport::Fail(Witness{{{"T", t}, {"S", s}}, {}}, coverage);
      }
    }
  }
  return AxiomReport::Pass(coverage);
}

AxiomReport CheckSizeMonotonicityFull(const ChoiceFunction& c,
                                      const ScanOptions& options) {
  const Evaluator eval(c);
  return ScanPairs(c.size(), PairDomain::kNested, options,
                   [&](Bundle s, Bundle t) -> std::optional<Witness> {
                     if (eval(t).size() <= eval(s).size()) return std::nullopt;
                     return Witness{{{"T", t}, {"S", s}}, {}};
                   });
}

CapacityReport CheckCapacityFilling(const ChoiceFunction& c) {
  const Evaluator eval(c);
  int q = 0;
  ForEachBundle(c.size(), [&](Bundle s) { q = std::max(q, eval(s).size()); });
  Coverage coverage;
  std::optional<Witness> found;
  ForEachBundle(c.size(), [&](Bundle s) {
    if (found) return;
    ++coverage.examined;
    if (eval(s).size() != std::min(s.size(), q)) {
      found = Witness{{{"S", s}}, {}};
    }
  });
  if (found) return {std::nullopt, AxiomReport::Fail(std::move(*found), coverage)};
  return {q, AxiomReport::Pass(coverage)};
}

AxiomReport CheckRespectsPriorities(const ChoiceFunction& c,
                                    const LinearOrder& order) {
  if (order.size() != c.size()) {
    throw InputError("priority ordering and choice function sizes differ");
  }
  const Evaluator eval(c);
  Coverage coverage;
  std::optional<Witness> found;
  ForEachBundle(c.size(), [&](Bundle s) {
    if (found) return;
    ++coverage.examined;
    const Bundle chosen = eval(s);
    for (int a : chosen) {
      for (int b : s - chosen) {
        if (!order.Prefers(a, b)) {
          found = Witness{{{"S", s}}, {{"chosen", a}, {"rejected", b}}};
          return;
        }
      }
    }
  });
  if (found) return AxiomReport::Fail(std::move(*found), coverage);
  return AxiomReport::Pass(coverage);
}

RevealedPriority RevealedStrictPriority(const ChoiceFunction& c) {
  const Evaluator eval(c);
  const int n = c.size();
  RevealedPriority out{Relation(n),
                       std::vector<std::optional<Bundle>>(
                           static_cast<std::size_t>(n) * n)};
  ForEachBundle(n, [&](Bundle s) {
    const Bundle chosen = eval(s);
    for (int a : chosen) {
      for (int b : s - chosen) {
        if (out.relation.Contains(a, b)) continue;
        out.relation.Add(a, b);
        out.evidence[static_cast<std::size_t>(a) * n + b] = s;
      }
    }
  });
  return out;
}

AxiomReport CheckWarsprio(const ChoiceFunction& c) {
  const RevealedPriority revealed = RevealedStrictPriority(c);
  const int n = c.size();
  Coverage coverage;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      ++coverage.examined;
      if (revealed.relation.Contains(a, b) && revealed.relation.Contains(b, a)) {
        return AxiomReport::Fail(
            Witness{{{"S_ab", *revealed.EvidenceFor(a, b)},
                     {"S_ba", *revealed.EvidenceFor(b, a)}},
                    {{"a", a}, {"b", b}}},
            coverage);
      }
    }
  }
  return AxiomReport::Pass(coverage);
}

SubsEquivalents CheckSubsEquivalents(const ChoiceFunction& c,
                                     const ScanOptions& options) {
  const Evaluator eval(c);
  const Bundle full = eval.full();
  SubsEquivalents out;
  out.subadditivity = ScanPairs(
      c.size(), PairDomain::kAll, options,
      [&](Bundle s, Bundle t) -> std::optional<Witness> {
        const Bundle extra = eval(s | t) - (eval(s) | eval(t));
        if (extra.empty()) return std::nullopt;
        return Witness{{{"S", s}, {"T", t}}, {{"a", *extra.begin()}}};
      });
  // Nested scans enumerate (outer, inner) with inner ⊆ outer; the formulas
  // name the smaller set S and the larger T.
  out.monotone_rejection = ScanPairs(
      c.size(), PairDomain::kNested, options,
      [&](Bundle big, Bundle small) -> std::optional<Witness> {
        const Bundle lost = (small - eval(small)) - (big - eval(big));
        if (lost.empty()) return std::nullopt;
        return Witness{{{"S", small}, {"T", big}}, {{"a", *lost.begin()}}};
      });
  out.antitone_non_rejection = ScanPairs(
      c.size(), PairDomain::kNested, options,
      [&](Bundle big, Bundle small) -> std::optional<Witness> {
        const Bundle lhs = eval(small) | (full - small);
        const Bundle rhs = eval(big) | (full - big);
        const Bundle missing = rhs - lhs;
        if (missing.empty()) return std::nullopt;
        return Witness{{{"S", small}, {"T", big}}, {{"a", *missing.begin()}}};
      });
  return out;
}

AxiomReport CheckIdempotence(const ChoiceFunction& c) {
  const Evaluator eval(c);
  Coverage coverage;
  std::optional<Witness> found;
  ForEachBundle(c.size(), [&](Bundle s) {
    if (found) return;
    ++coverage.examined;
    if (eval(eval(s)) != eval(s)) found = Witness{{{"S", s}}, {}};
  });
  if (found) return AxiomReport::Fail(std::move(*found), coverage);
  return AxiomReport::Pass(coverage);
}

PiVariants CheckPiVariants(const ChoiceFunction& c,
                           const ScanOptions& options) {
  const Evaluator eval(c);
  PiVariants out;
  out.absorb_one_side = ScanPairs(
      c.size(), PairDomain::kAll, options,
      [&](Bundle s, Bundle t) -> std::optional<Witness> {
        if (eval(s | t) == eval(eval(s) | t)) return std::nullopt;
        return SetsWitness(s, t);
      });
  const AxiomReport idempotent = CheckIdempotence(c);
  if (!idempotent.holds) {
    out.additive_in_image = idempotent;
    return out;
  }
  out.additive_in_image = ScanPairs(
      c.size(), PairDomain::kAll, options,
      [&](Bundle s, Bundle t) -> std::optional<Witness> {
        if (eval(eval(s | t)) == eval(eval(s) | eval(t))) return std::nullopt;
        return SetsWitness(s, t);
      });
  return out;
}

}  // namespace combchoice
