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

#ifndef COMBCHOICE_GROUND_SET_H_
#define COMBCHOICE_GROUND_SET_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "combchoice/bundle.h"

namespace combchoice {

// The finite set E of elements. Label order fixes element indices and every
// iteration order derived from them.
class GroundSet {
 public:
  static constexpr int kMaxSize = 24;

  GroundSet() = default;
  // Throws InputError on duplicate or empty labels, or more than kMaxSize.
  explicit GroundSet(std::vector<std::string> labels);

  // Ground set labelled "a", "b", ... (n ≤ 24).
  static GroundSet Letters(int n);
  // Ground set labelled "1", "2", ..., "n".
  static GroundSet Numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int index) const { return labels_.at(index); }
  std::optional<int> IndexOf(std::string_view label) const;
  // Throws InputError for unknown labels.
  int IndexOrThrow(std::string_view label) const;

  Bundle Full() const { return Bundle::Full(size()); }
  std::uint64_t PowerSetSize() const { return std::uint64_t{1} << size(); }
  bool Owns(Bundle b) const { return b.IsSubsetOf(Full()); }
  // Throws InputError when b has members outside this ground set.
  void Validate(Bundle b) const;

  // Builds a bundle from labels; throws InputError on unknown labels.
  Bundle Parse(std::span<const std::string> labels) const;
  Bundle Parse(std::initializer_list<std::string_view> labels) const;
  // Parses a comma-joined label list ("a,b"); "" is the empty bundle.
  Bundle ParseKey(std::string_view key) const;

  // "{a,b}" with members in ground order.
  std::string Format(Bundle b) const;
  // "a,b" with members in ground order; "" for the empty bundle.
  std::string Key(Bundle b) const;
  std::vector<std::string> LabelsOf(Bundle b) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace combchoice

#endif  // COMBCHOICE_GROUND_SET_H_
