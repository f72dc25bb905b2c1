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

#ifndef COMBCHOICE_TOOLS_COMMANDS_H_
#define COMBCHOICE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace combchoice::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// Axiom names accepted by the axioms command, in report order.
const std::vector<std::string>& AxiomNames();

struct AxiomsArgs {
  std::string input;
  std::vector<std::string> which;  // empty: all
  std::optional<std::uint64_t> max_pairs;
  std::uint64_t seed = 0;
};
int CmdAxioms(const AxiomsArgs& args, std::ostream& out);

struct LatticeArgs {
  std::string input;
  std::optional<std::string> dot;  // path, or "-" to append to the report
};
int CmdLattice(const LatticeArgs& args, std::ostream& out);

struct RationalizeArgs {
  std::string input;
  std::string mode;  // mc | mc-min | responsive
  std::uint64_t budget = 1'000'000;
};
int CmdRationalize(const RationalizeArgs& args, std::ostream& out);

struct DemandArgs {
  std::string input;
  std::string mode;  // lod | warp | rationalize
};
int CmdDemand(const DemandArgs& args, std::ostream& out);

struct DaArgs {
  std::string input;
  std::string variant = "ck";  // ck | ak
  bool trace = false;
};
int CmdDa(const DaArgs& args, std::ostream& out);

struct StabilityArgs {
  std::string input;
  // "agent: object" lines; falls back to the file's "matching" entry.
  std::optional<std::string> matching;
  std::string notion = "all";
};
int CmdStability(const StabilityArgs& args, std::ostream& out);

struct SearchArgs {
  std::string kind;
  std::uint64_t seed = 0;
  // Defaults to 3 elements for warsprio_not_subs and 4 agents otherwise.
  std::optional<int> max_size;
  int max_objects = 2;
  std::uint64_t max_candidates = 200'000;
};
int CmdSearch(const SearchArgs& args, std::ostream& out);

}  // namespace combchoice::cli

#endif  // COMBCHOICE_TOOLS_COMMANDS_H_
