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

#ifndef COMBCHOICE_TOOLS_FORMATS_H_
#define COMBCHOICE_TOOLS_FORMATS_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "combchoice/choice_function.h"
#include "combchoice/demand.h"
#include "combchoice/matching.h"

namespace combchoice::cli {

using Json = nlohmann::ordered_json;

// Parses a document; throws InputError carrying `source` and the parser's
// byte offset.
Json ParseJson(const std::string& text, const std::string& source);
Json ReadJsonFile(const std::string& path);

// Instance files: {"elements": [...], "choice_table": {...}} or
// {"elements": [...], "rule": {...}}. Table keys are comma-joined element
// lists ("" for ∅) in any order; every subset must be present.
ChoiceFunction LoadInstance(const Json& doc);
Json SaveInstance(const ChoiceFunction& c);

// The choice part alone ({"choice_table": ...} or {"rule": ...}) over a
// known ground set. `where` prefixes error locations.
ChoiceFunction LoadChoice(const Json& doc, const GroundSet& ground,
                          const std::string& where);
Json SaveChoice(const ChoiceFunction& c);

// Matching files: {"agents": [{"name", "ranking"}], "objects": [{"name",
// "choice_table" | "rule"}]} with an optional "matching" object mapping
// agent names to object names or "-".
struct MatchingDocument {
  MatchingProblem problem;
  std::optional<Matching> matching;
};
MatchingDocument LoadMatchingFile(const Json& doc);
Json SaveMatchingFile(const MatchingProblem& problem,
                      const std::optional<Matching>& matching = std::nullopt);

Matching LoadMatching(const Json& doc, const MatchingProblem& problem);
Json SaveMatching(const MatchingProblem& problem, const Matching& m);
// "agent: object|-" lines as printed by the da command; blank lines ignored.
Matching ParseMatchingText(const std::string& text,
                           const MatchingProblem& problem);

// Demand files: {"elements": [...], "observations": [{"prices": {element:
// "p/q"}, "demanded": [[...], ...]}]}.
struct DemandDocument {
  GroundSet ground;
  std::vector<DemandObservation> observations;
};
DemandDocument LoadDemandFile(const Json& doc);
Json SaveDemandFile(const DemandDocument& doc);

// {"": "0", "a": "3/2", ...} in bundle bit order.
Json SaveValuation(const GroundSet& ground, const Valuation& v);

}  // namespace combchoice::cli

#endif  // COMBCHOICE_TOOLS_FORMATS_H_
