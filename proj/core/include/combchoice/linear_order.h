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

#ifndef COMBCHOICE_LINEAR_ORDER_H_
#define COMBCHOICE_LINEAR_ORDER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "combchoice/bundle.h"
#include "combchoice/ground_set.h"

namespace combchoice {

// A strict priority ordering over element indices 0..n-1, highest first.
class LinearOrder {
 public:
  LinearOrder() = default;
  // `ranking` must be a permutation of 0..n-1; throws InputError otherwise.
  explicit LinearOrder(std::vector<int> ranking);

  static LinearOrder FromLabels(const GroundSet& ground,
                                std::span<const std::string> ranking);
  static LinearOrder FromLabels(const GroundSet& ground,
                                std::initializer_list<std::string_view> ranking);
  // The order 0 ≻ 1 ≻ ... ≻ n-1.
  static LinearOrder Identity(int n);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  int rank_of(int element) const { return rank_.at(element); }
  // True when a has strictly higher priority than b.
  bool Prefers(int a, int b) const { return rank_.at(a) < rank_.at(b); }

  // Highest-priority member of s; nullopt iff s is empty.
  std::optional<int> Top(Bundle s) const;
  // The min(k, |s|) highest-priority members of s.
  Bundle TopK(Bundle s, int k) const;

  // "a>b>c" using ground labels.
  std::string Format(const GroundSet& ground) const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> rank_;
};

// Free-function form of LinearOrder::Top.
inline std::optional<int> Top(Bundle s, const LinearOrder& order) {
  return order.Top(s);
}

}  // namespace combchoice

#endif  // COMBCHOICE_LINEAR_ORDER_H_
