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

#include "commands.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "combchoice/axioms.h"
#include "combchoice/demand.h"
#include "combchoice/errors.h"
#include "combchoice/lattice.h"
#include "combchoice/matching.h"
#include "combchoice/revealed.h"
#include "combchoice/rules.h"
#include "combchoice/search.h"
#include "formats.h"

namespace combchoice::cli {

namespace {

constexpr int kMaxWarpElements = 12;

std::string Verdict(const AxiomReport& report, const std::string& witness) {
  std::string line = report.holds ? "PASS" : "FAIL " + witness;
  if (!report.coverage.exhaustive) {
    line += " (sampled " + std::to_string(report.coverage.examined) +
            " pairs, seed " + std::to_string(report.coverage.seed) + ")";
  }
  return line;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
}

void PrintOrders(const std::vector<LinearOrder>& orders,
                 const GroundSet& ground, std::ostream& out) {
  for (const auto& order : orders) out << order.Format(ground) << '\n';
}

}  // namespace

const std::vector<std::string>& AxiomNames() {
  static const std::vector<std::string> names = {
      "subs", "ire", "pi", "size_mono", "filling", "warsprio", "warp"};
  return names;
}

int CmdAxioms(const AxiomsArgs& args, std::ostream& out) {
  const ChoiceFunction c = LoadInstance(ReadJsonFile(args.input));
  const GroundSet& g = c.ground();
  const ScanOptions options{args.max_pairs, args.seed};
  const std::vector<std::string> which =
      args.which.empty() ? AxiomNames() : args.which;

  std::vector<std::function<std::string()>> checks;
  for (const auto& name : which) {
    std::function<std::string()> check;
    if (name == "subs") {
      check = [&] {
        const auto r = CheckSubstitutability(c, options);
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "ire") {
      check = [&] {
        const auto r = CheckIre(c, options);
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "pi") {
      check = [&] {
        const auto r = CheckPathIndependence(c, options);
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "size_mono") {
      check = [&] {
        const auto r = CheckSizeMonotonicity(c);
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "filling") {
      check = [&] {
        const auto r = CheckCapacityFilling(c).report;
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "warsprio") {
      check = [&] {
        const auto r = CheckWarsprio(c);
        return Verdict(r, r.witness ? FormatWitness(*r.witness, g) : "");
      };
    } else if (name == "warp") {
      if (c.size() > kMaxWarpElements) {
        throw ScaleError("warp needs at most " +
                         std::to_string(kMaxWarpElements) + " elements");
      }
      check = [&] {
        const PureModel m = FaithfulF(c);
        const auto r = CheckWarp(m);
        return Verdict(r, r.witness ? FormatPureWitness(*r.witness, m) : "");
      };
    } else {
      throw InputError("unknown axiom '" + name + "'");
    }
    checks.push_back(std::move(check));
  }

  bool all = true;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const std::string verdict = checks[k]();
    all = all && verdict.rfind("PASS", 0) == 0;
    out << which[k] << ": " << verdict << '\n';
  }
  return all ? kExitOk : kExitNegative;
}

int CmdLattice(const LatticeArgs& args, std::ostream& out) {
  const ChoiceFunction c = LoadInstance(ReadJsonFile(args.input));
  try {
    const HasseDiagram diagram = Hasse(c);
    const McRationalization mc = MaximalMcRationalization(c);
    out << "nodes: " << diagram.nodes.size() << '\n';
    out << "edges: " << diagram.edges.size() << '\n';
    out << "orders: " << mc.orders.size() << '\n';
    PrintOrders(mc.orders, c.ground(), out);
    if (args.dot) {
      const std::string dot = ToDot(diagram);
      if (*args.dot == "-") {
        out << dot;
      } else {
        WriteText(*args.dot, dot);
      }
    }
  } catch (const NotPathIndependent& e) {
    out << "NotPathIndependent: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitOk;
}

int CmdRationalize(const RationalizeArgs& args, std::ostream& out) {
  const ChoiceFunction c = LoadInstance(ReadJsonFile(args.input));
  const GroundSet& g = c.ground();
  if (args.mode == "responsive") {
    const auto filling = CheckCapacityFilling(c);
    if (!filling.capacity) {
      out << "NONE not capacity-filling "
          << FormatWitness(*filling.report.witness, g) << '\n';
      return kExitNegative;
    }
    const auto warsprio = CheckWarsprio(c);
    if (!warsprio.holds) {
      out << "NONE warsprio fails " << FormatWitness(*warsprio.witness, g)
          << '\n';
      return kExitNegative;
    }
    const auto r = ResponsiveRationalize(c);
    out << "capacity: " << r->capacity << '\n';
    out << "order: " << r->order.Format(g) << '\n';
    return kExitOk;
  }
  if (args.mode != "mc" && args.mode != "mc-min") {
    throw InputError("unknown rationalize mode '" + args.mode + "'");
  }
  try {
    if (args.mode == "mc") {
      const McRationalization mc = MaximalMcRationalization(c);
      out << "orders: " << mc.orders.size() << '\n';
      PrintOrders(mc.orders, g, out);
      return kExitOk;
    }
    const auto min = MinMcSize(c, args.budget);
    if (!min) {
      out << "NONE search budget of " << args.budget << " subsets exhausted\n";
      return kExitNegative;
    }
    out << "size: " << min->size << '\n';
    PrintOrders(min->witness.orders, g, out);
    return kExitOk;
  } catch (const NotPathIndependent& e) {
    out << "NONE not path independent: " << e.what() << '\n';
    return kExitNegative;
  }
}

int CmdDemand(const DemandArgs& args, std::ostream& out) {
  const DemandDocument doc = LoadDemandFile(ReadJsonFile(args.input));
  const GroundSet& g = doc.ground;
  if (args.mode == "lod" || args.mode == "warp") {
    const bool lod = args.mode == "lod";
    const AxiomReport r = lod ? CheckLawOfDemand(doc.observations)
                              : CheckDemandWarp(doc.observations);
    out << (lod ? "law_of_demand: " : "warp: ")
        << Verdict(r, r.witness ? FormatDemandWitness(*r.witness, g) : "")
        << '\n';
    return r.holds ? kExitOk : kExitNegative;
  }
  if (args.mode != "rationalize") {
    throw InputError("unknown demand mode '" + args.mode + "'");
  }
  const QuasilinearResult result =
      QuasilinearRationalize(doc.observations, g.size());
  if (!result.valuation) {
    out << "NONE cycle:";
    for (std::size_t k = 0; k < result.cycle.size(); ++k) {
      const auto& e = result.cycle[k];
      out << (k ? ";" : "") << ' ' << g.Format(e.from) << " -> "
          << g.Format(e.to) << " (observation #" << e.observation
          << ", bound " << FormatRational(e.weight) << ')';
    }
    out << '\n';
    return kExitNegative;
  }
  out << SaveValuation(g, *result.valuation).dump(2) << '\n';
  return kExitOk;
}

int CmdDa(const DaArgs& args, std::ostream& out) {
  if (args.variant != "ck" && args.variant != "ak") {
    throw InputError("unknown variant '" + args.variant + "'");
  }
  const MatchingDocument doc = LoadMatchingFile(ReadJsonFile(args.input));
  const DaOutcome outcome =
      args.variant == "ck" ? RunCkDa(doc.problem) : RunAkDa(doc.problem);
  if (outcome.feasible()) {
    out << FormatMatching(doc.problem, outcome.matching());
  } else {
    out << "INFEASIBLE\n" << FormatInfeasible(doc.problem, outcome.infeasible());
  }
  if (args.trace) out << FormatTrace(doc.problem, outcome.trace);
  return outcome.feasible() ? kExitOk : kExitNegative;
}

int CmdStability(const StabilityArgs& args, std::ostream& out) {
  const MatchingDocument doc = LoadMatchingFile(ReadJsonFile(args.input));
  Matching m;
  if (args.matching) {
    m = ParseMatchingText(ReadText(*args.matching), doc.problem);
  } else if (doc.matching) {
    m = *doc.matching;
  } else {
    throw InputError("no matching given: pass --matching or embed one");
  }
  std::vector<StabilityNotion> notions;
  if (args.notion == "all") {
    notions = {StabilityNotion::kIndividual, StabilityNotion::kAlpha,
               StabilityNotion::kBeta, StabilityNotion::kGroup};
  } else if (const auto notion = ParseNotion(args.notion)) {
    notions = {*notion};
  } else {
    throw InputError("unknown notion '" + args.notion + "'");
  }
  const StabilityReport report = CheckStability(doc.problem, m);
  bool all = true;
  for (StabilityNotion notion : notions) {
    out << NotionName(notion) << ": ";
    if (report.Holds(notion)) {
      out << "PASS\n";
      continue;
    }
    all = false;
    const Blocking& w = *report.WitnessFor(notion);
    out << "FAIL object=" << doc.problem.object_name(w.object)
        << " agents=" << doc.problem.agents().Format(w.agents) << '\n';
  }
  return all ? kExitOk : kExitNegative;
}

int CmdSearch(const SearchArgs& args, std::ostream& out) {
  const auto kind = ParseSearchKind(args.kind);
  if (!kind) throw InputError("unknown search kind '" + args.kind + "'");
  SearchBounds bounds;
  bounds.max_size = args.max_size.value_or(
      *kind == SearchKind::kWarsprioNotSubs ? 3 : 4);
  bounds.max_objects = args.max_objects;
  bounds.max_candidates = args.max_candidates;
  const auto result = SearchCounterexample(*kind, bounds, args.seed);
  if (!result) {
    out << "NONE\n";
    return kExitNegative;
  }
  Json doc;
  if (const auto* c = std::get_if<ChoiceFunction>(&result->instance)) {
    doc = SaveInstance(*c);
  } else {
    doc = SaveMatchingFile(std::get<MatchingProblem>(result->instance),
                           result->matching);
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace combchoice::cli
