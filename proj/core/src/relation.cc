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

#include "combchoice/relation.h"

#include <algorithm>
#include <string>

#include "combchoice/errors.h"

namespace combchoice {

Relation::Relation(int carrier_size)
    : rows_(carrier_size, Row(static_cast<std::size_t>(carrier_size))) {}

Relation Relation::FromPairs(int carrier_size,
                             const std::vector<std::pair<int, int>>& pairs) {
  Relation r(carrier_size);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= carrier_size || b >= carrier_size) {
      throw InputError("relation pair outside carrier of size " +
                       std::to_string(carrier_size));
    }
    r.Add(a, b);
  }
  return r;
}

std::vector<std::pair<int, int>> Relation::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < carrier_size(); ++a) {
    for (auto b = rows_[a].find_first(); b != Row::npos;
         b = rows_[a].find_next(b)) {
      out.emplace_back(a, static_cast<int>(b));
    }
  }
  return out;
}

std::size_t Relation::PairCount() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.count();
  return count;
}

bool Relation::IsTransitive() const {
  // R∘R ⊆ R, row by row.
  for (int a = 0; a < carrier_size(); ++a) {
    for (auto b = rows_[a].find_first(); b != Row::npos;
         b = rows_[a].find_next(b)) {
      if (!rows_[b].is_subset_of(rows_[a])) return false;
    }
  }
  return true;
}

bool Relation::IsIrreflexive() const {
  for (int a = 0; a < carrier_size(); ++a) {
    if (rows_[a].test(a)) return false;
  }
  return true;
}

bool Relation::IsAsymmetric() const {
  for (int a = 0; a < carrier_size(); ++a) {
    for (auto b = rows_[a].find_first(); b != Row::npos;
         b = rows_[a].find_next(b)) {
      if (rows_[b].test(a)) return false;
    }
  }
  return true;
}

bool Relation::IsSubsetOf(const Relation& other) const {
  if (other.carrier_size() != carrier_size()) return false;
  for (int a = 0; a < carrier_size(); ++a) {
    if (!rows_[a].is_subset_of(other.rows_[a])) return false;
  }
  return true;
}

Relation TransitiveClosure(const Relation& relation) {
  // Warshall over bit rows.
  Relation closure = relation;
  const int n = relation.carrier_size();
  for (int k = 0; k < n; ++k) {
    const Relation::Row through = closure.row(k);
    for (int i = 0; i < n; ++i) {
      if (closure.Contains(i, k)) closure.AddAll(i, through);
    }
  }
  return closure;
}

namespace {

// Every remaining node has a remaining predecessor; walking predecessors must
// revisit a node. Returns the cycle in forward orientation, smallest first.
std::vector<int> ExtractCycle(const Relation& relation,
                              const std::vector<bool>& placed, int start) {
  const int n = relation.carrier_size();
  auto predecessor = [&](int node) {
    for (int x = 0; x < n; ++x) {
      if (!placed[x] && relation.Contains(x, node)) return x;
    }
    throw InternalError("cycle extraction reached a node without predecessor");
  };
  std::vector<int> walk;
  std::vector<int> seen_at(n, -1);
  int node = start;
  while (seen_at[node] < 0) {
    seen_at[node] = static_cast<int>(walk.size());
    walk.push_back(node);
    node = predecessor(node);
  }
  // walk[seen_at[node]..] lists the cycle against the edge direction.
  std::vector<int> cycle(walk.begin() + seen_at[node], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
              cycle.end());
  return cycle;
}

}  // namespace

LinearOrder SzpilrajnExtend(const Relation& relation) {
  const int n = relation.carrier_size();
  std::vector<bool> placed(n, false);
  std::vector<int> ranking;
  ranking.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int e = 0; e < n && pick < 0; ++e) {
      if (placed[e]) continue;
      bool dominated = false;
      for (int x = 0; x < n && !dominated; ++x) {
        dominated = !placed[x] && relation.Contains(x, e);
      }
      if (!dominated) pick = e;
    }
    if (pick < 0) {
      int start = 0;
      while (placed[start]) ++start;
      auto cycle = ExtractCycle(relation, placed, start);
      std::string text;
      for (int c : cycle) text += (text.empty() ? "" : " ") + std::to_string(c);
      throw CycleError("relation has a cycle: " + text, std::move(cycle));
    }
    placed[pick] = true;
    ranking.push_back(pick);
  }
  return LinearOrder(std::move(ranking));
}

}  // namespace combchoice
