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

#ifndef COMBCHOICE_RELATION_H_
#define COMBCHOICE_RELATION_H_

#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "combchoice/linear_order.h"

namespace combchoice {

// A binary relation on the carrier {0, ..., size-1}, stored as one bit row per
// left-hand member: (a, b) is present iff row(a)[b] is set.
class Relation {
 public:
  using Row = boost::dynamic_bitset<>;

  Relation() = default;
  explicit Relation(int carrier_size);
  static Relation FromPairs(int carrier_size,
                            const std::vector<std::pair<int, int>>& pairs);

  int carrier_size() const { return static_cast<int>(rows_.size()); }
  bool Contains(int a, int b) const { return rows_.at(a).test(b); }
  void Add(int a, int b) { rows_.at(a).set(b); }
  void Remove(int a, int b) { rows_.at(a).reset(b); }
  // Adds (a, x) for every x set in `targets`.
  void AddAll(int a, const Row& targets) { rows_.at(a) |= targets; }
  const Row& row(int a) const { return rows_.at(a); }

  // Pairs in row-major order.
  std::vector<std::pair<int, int>> Pairs() const;
  std::size_t PairCount() const;
  bool empty() const { return PairCount() == 0; }

  bool IsTransitive() const;
  bool IsIrreflexive() const;
  bool IsAsymmetric() const;
  bool IsSubsetOf(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Row> rows_;
};

// τ(R): the smallest transitive relation containing R.
Relation TransitiveClosure(const Relation& relation);

// A linear order ≻ with a ≻ b for every (a, b) ∈ R. Ties are broken by
// repeatedly taking the smallest-index element with no predecessor among the
// elements not yet placed. Throws CycleError (with the cycle) when τ(R) is not
// irreflexive.
LinearOrder SzpilrajnExtend(const Relation& relation);

}  // namespace combchoice

#endif  // COMBCHOICE_RELATION_H_
