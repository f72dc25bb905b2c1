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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using combchoice::cli::kExitInputError;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial choice toolkit"};
  app.require_subcommand(1);
  std::string output = "-";

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "Report destination, - for stdout");
  };

  combchoice::cli::AxiomsArgs axioms;
  auto* axioms_cmd = app.add_subcommand("axioms", "Check choice axioms");
  axioms_cmd->add_option("--input", axioms.input, "Instance file")->required();
  axioms_cmd->add_option("--which", axioms.which,
                         "Axioms: subs ire pi size_mono filling warsprio warp")
      ->delimiter(',');
  axioms_cmd->add_option("--max-pairs", axioms.max_pairs,
                         "Sample at most this many pairs");
  axioms_cmd->add_option("--seed", axioms.seed, "Sampling seed");
  add_output(axioms_cmd);

  combchoice::cli::LatticeArgs lattice;
  auto* lattice_cmd =
      app.add_subcommand("lattice", "Maximal option sets and chain orders");
  lattice_cmd->add_option("--input", lattice.input, "Instance file")
      ->required();
  lattice_cmd->add_option("--dot", lattice.dot,
                          "Write the Hasse diagram as DOT, - for the report");
  add_output(lattice_cmd);

  combchoice::cli::RationalizeArgs rationalize;
  auto* rationalize_cmd =
      app.add_subcommand("rationalize", "Rationalize a choice function");
  rationalize_cmd->add_option("--input", rationalize.input, "Instance file")
      ->required();
  rationalize_cmd->add_option("--mode", rationalize.mode, "mc | mc-min | responsive")
      ->required()
      ->check(CLI::IsMember({"mc", "mc-min", "responsive"}));
  rationalize_cmd->add_option("--budget", rationalize.budget,
                              "Subset budget for mc-min");
  add_output(rationalize_cmd);

  combchoice::cli::DemandArgs demand;
  auto* demand_cmd = app.add_subcommand("demand", "Demand observations");
  demand_cmd->add_option("--input", demand.input, "Demand file")->required();
  demand_cmd->add_option("--mode", demand.mode, "lod | warp | rationalize")
      ->required()
      ->check(CLI::IsMember({"lod", "warp", "rationalize"}));
  add_output(demand_cmd);

  combchoice::cli::DaArgs da;
  auto* da_cmd = app.add_subcommand("da", "Run deferred acceptance");
  da_cmd->add_option("--input", da.input, "Matching file")->required();
  da_cmd->add_option("--variant", da.variant, "ck | ak")
      ->check(CLI::IsMember({"ck", "ak"}));
  da_cmd->add_flag("--trace", da.trace, "Print held sets per round");
  add_output(da_cmd);

  combchoice::cli::StabilityArgs stability;
  auto* stability_cmd =
      app.add_subcommand("stability", "Check stability of a matching");
  stability_cmd->add_option("--input", stability.input, "Matching file")
      ->required();
  stability_cmd->add_option("--matching", stability.matching,
                            "File of 'agent: object' lines");
  stability_cmd->add_option("--notion", stability.notion,
                            "all | individual | alpha | beta | group");
  add_output(stability_cmd);

  combchoice::cli::SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Search for counterexamples");
  search_cmd->add_option("--kind", search.kind,
                         "warsprio_not_subs | ck_ne_ak_subs | ck_unstable_ire "
                         "| ak_infeasible | alpha_not_beta_subs")
      ->required();
  search_cmd->add_option("--seed", search.seed, "Search seed");
  search_cmd->add_option("--max-size", search.max_size,
                         "Elements (warsprio_not_subs) or agents");
  search_cmd->add_option("--max-objects", search.max_objects, "Objects");
  search_cmd->add_option("--max-candidates", search.max_candidates,
                         "Candidates examined before giving up");
  add_output(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (output != "-") {
    file.open(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: " << output << ": cannot write file\n";
      return kExitInputError;
    }
    out = &file;
  }

  try {
    namespace cli = combchoice::cli;
    if (*axioms_cmd) return cli::CmdAxioms(axioms, *out);
    if (*lattice_cmd) return cli::CmdLattice(lattice, *out);
    if (*rationalize_cmd) return cli::CmdRationalize(rationalize, *out);
    if (*demand_cmd) return cli::CmdDemand(demand, *out);
    if (*da_cmd) return cli::CmdDa(da, *out);
    if (*stability_cmd) return cli::CmdStability(stability, *out);
    if (*search_cmd) return cli::CmdSearch(search, *out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
