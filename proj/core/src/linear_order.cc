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

#include "combchoice/linear_order.h"

#include <numeric>

#include "combchoice/errors.h"

namespace combchoice {

LinearOrder::LinearOrder(std::vector<int> ranking)
    : ranking_(std::move(ranking)), rank_(ranking_.size(), -1) {
  const int n = size();
  for (int pos = 0; pos < n; ++pos) {
    const int e = ranking_[pos];
    if (e < 0 || e >= n || rank_[e] != -1) {
      throw InputError("priority ordering is not a permutation of the " +
                       std::to_string(n) + " elements");
    }
    rank_[e] = pos;
  }
}

LinearOrder LinearOrder::FromLabels(const GroundSet& ground,
                                    std::span<const std::string> ranking) {
  if (static_cast<int>(ranking.size()) != ground.size()) {
    throw InputError("priority ordering lists " +
                     std::to_string(ranking.size()) + " elements, expected " +
                     std::to_string(ground.size()));
  }
  std::vector<int> indices;
  indices.reserve(ranking.size());
  for (const auto& label : ranking) indices.push_back(ground.IndexOrThrow(label));
  return LinearOrder(std::move(indices));
}

LinearOrder LinearOrder::FromLabels(
    const GroundSet& ground, std::initializer_list<std::string_view> ranking) {
  std::vector<std::string> labels(ranking.begin(), ranking.end());
  return FromLabels(ground, labels);
}

LinearOrder LinearOrder::Identity(int n) {
  std::vector<int> ranking(n);
  std::iota(ranking.begin(), ranking.end(), 0);
  return LinearOrder(std::move(ranking));
}

std::optional<int> LinearOrder::Top(Bundle s) const {
  std::optional<int> best;
  for (int e : s) {
    if (!best || rank_.at(e) < rank_.at(*best)) best = e;
  }
  return best;
}

Bundle LinearOrder::TopK(Bundle s, int k) const {
  Bundle out;
  if (k <= 0) return out;
  for (int e : ranking_) {
    if (!s.Contains(e)) continue;
    out = out.With(e);
    if (--k == 0) break;
  }
  return out;
}

std::string LinearOrder::Format(const GroundSet& ground) const {
  std::string out;
  for (int e : ranking_) {
    if (!out.empty()) out += '>';
    out += ground.label(e);
  }
  return out;
}

}  // namespace combchoice
