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

#include "combchoice/ground_set.h"

#include <set>

#include "combchoice/errors.h"

namespace combchoice {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (size() > kMaxSize) {
    throw InputError("ground set has " + std::to_string(size()) +
                     " elements; at most " + std::to_string(kMaxSize) +
                     " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("empty element label");
    if (label.find(',') != std::string::npos) {
      throw InputError("element label '" + label + "' contains a comma");
    }
    if (!seen.insert(label).second) {
      throw InputError("duplicate element label '" + label + "'");
    }
  }
}

GroundSet GroundSet::Letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

GroundSet GroundSet::Numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

int GroundSet::IndexOrThrow(std::string_view label) const {
  if (auto index = IndexOf(label)) return *index;
  throw InputError("unknown element '" + std::string(label) + "'");
}

void GroundSet::Validate(Bundle b) const {
  if (!Owns(b)) {
    throw InputError("bundle has members outside the ground set of size " +
                     std::to_string(size()));
  }
}

Bundle GroundSet::Parse(std::span<const std::string> labels) const {
  Bundle b;
  for (const auto& label : labels) b = b.With(IndexOrThrow(label));
  return b;
}

Bundle GroundSet::Parse(std::initializer_list<std::string_view> labels) const {
  Bundle b;
  for (auto label : labels) b = b.With(IndexOrThrow(label));
  return b;
}

Bundle GroundSet::ParseKey(std::string_view key) const {
  Bundle b;
  if (key.empty()) return b;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string_view part =
        key.substr(start, comma == std::string_view::npos ? key.npos
                                                          : comma - start);
    const int index = IndexOrThrow(part);
    if (b.Contains(index)) {
      throw InputError("element '" + std::string(part) +
                       "' repeated in key '" + std::string(key) + "'");
    }
    b = b.With(index);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return b;
}

std::string GroundSet::Format(Bundle b) const { return "{" + Key(b) + "}"; }

std::string GroundSet::Key(Bundle b) const {
  std::string out;
  for (int e : b) {
    if (!out.empty()) out += ',';
    out += labels_.at(e);
  }
  return out;
}

std::vector<std::string> GroundSet::LabelsOf(Bundle b) const {
  std::vector<std::string> out;
  for (int e : b) out.push_back(labels_.at(e));
  return out;
}

}  // namespace combchoice
