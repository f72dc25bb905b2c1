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

#include "formats.h"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "combchoice/errors.h"
#include "combchoice/rules.h"

namespace combchoice::cli {

namespace {

// An InputError that already names its location.
class LocatedError : public InputError {
 public:
  using InputError::InputError;
};

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw LocatedError(where + ": " + what);
}

const Json& Require(const Json& doc, const char* key,
                    const std::string& where) {
  if (!doc.is_object()) Fail(where, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) Fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string AsString(const Json& value, const std::string& where) {
  if (!value.is_string()) Fail(where, "expected a string");
  return value.get<std::string>();
}

int AsInt(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where, "expected an integer");
  return value.get<int>();
}

const Json& AsArray(const Json& value, const std::string& where) {
  if (!value.is_array()) Fail(where, "expected an array");
  return value;
}

std::vector<std::string> AsStrings(const Json& value,
                                   const std::string& where) {
  std::vector<std::string> out;
  const Json& array = AsArray(value, where);
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(AsString(array[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Rethrows library validation errors with a location prefix.
template <class F>
auto At(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const LocatedError&) {
    throw;
  } catch (const InputError& e) {
    Fail(where, e.what());
  }
}

Bundle ParseBundle(const Json& value, const GroundSet& ground,
                   const std::string& where) {
  const auto labels = AsStrings(value, where);
  return At(where, [&] { return ground.Parse(labels); });
}

LinearOrder ParseOrder(const Json& value, const GroundSet& ground,
                       const std::string& where) {
  const auto labels = AsStrings(value, where);
  return At(where, [&] { return LinearOrder::FromLabels(ground, labels); });
}

std::vector<LinearOrder> ParseOrders(const Json& value,
                                     const GroundSet& ground,
                                     const std::string& where) {
  std::vector<LinearOrder> out;
  const Json& array = AsArray(value, where);
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(
        ParseOrder(array[i], ground, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json OrderToJson(const LinearOrder& order, const GroundSet& ground) {
  Json out = Json::array();
  for (int e : order.ranking()) out.push_back(ground.label(e));
  return out;
}

Json OrdersToJson(const std::vector<LinearOrder>& orders,
                  const GroundSet& ground) {
  Json out = Json::array();
  for (const auto& order : orders) out.push_back(OrderToJson(order, ground));
  return out;
}

Json BundleToJson(Bundle b, const GroundSet& ground) {
  Json out = Json::array();
  for (const auto& label : ground.LabelsOf(b)) out.push_back(label);
  return out;
}

ChoiceFunction ParseRule(const Json& rule, const GroundSet& ground,
                         const std::string& where) {
  const std::string type = AsString(Require(rule, "type", where), where + ".type");
  auto field = [&](const char* key) -> const Json& {
    return Require(rule, key, where);
  };
  auto path = [&](const char* key) { return where + "." + key; };
  return At(where, [&]() -> ChoiceFunction {
    if (type == "priority_max") {
      return PriorityMax(ground, AsInt(field("capacity"), path("capacity")),
                         ParseOrder(field("order"), ground, path("order")));
    }
    if (type == "mc") {
      return MaximizerCollecting(
          ground, ParseOrders(field("orders"), ground, path("orders")));
    }
    if (type == "seq_prio_rivalry") {
      return SeqPrioRivalry(ground,
                            AsInt(field("capacity"), path("capacity")),
                            ParseOrders(field("orders"), ground, path("orders")));
    }
    if (type == "reserves") {
      const Json& labels = field("labels");
      if (!labels.is_object()) Fail(path("labels"), "expected an object");
      std::vector<std::string> label_of(ground.size());
      std::vector<bool> seen(ground.size(), false);
      for (const auto& [element, label] : labels.items()) {
        const auto index = ground.IndexOf(element);
        if (!index) Fail(path("labels"), "unknown element '" + element + "'");
        label_of[*index] = AsString(label, path("labels") + "." + element);
        seen[*index] = true;
      }
      for (int e = 0; e < ground.size(); ++e) {
        if (!seen[e]) {
          Fail(path("labels"), "no label for element '" + ground.label(e) + "'");
        }
      }
      const Json& reserves_json = field("reserves");
      if (!reserves_json.is_object()) {
        Fail(path("reserves"), "expected an object");
      }
      std::map<std::string, int> reserves;
      for (const auto& [label, r] : reserves_json.items()) {
        reserves[label] = AsInt(r, path("reserves") + "." + label);
      }
      return Reserves(ground, AsInt(field("capacity"), path("capacity")),
                      Labeling(std::move(label_of)), std::move(reserves),
                      ParseOrder(field("order"), ground, path("order")));
    }
    if (type == "two_stage") {
      return TwoStage(LoadChoice(field("first"), ground, path("first")),
                      LoadChoice(field("second"), ground, path("second")));
    }
    Fail(path("type"), "unknown rule type '" + type + "'");
  });
}

Json RuleToJson(const RuleSpec& rule, const GroundSet& ground) {
  Json out;
  out["type"] = RuleName(rule);
  if (const auto* r = std::get_if<PriorityMaxRule>(&rule.variant)) {
    out["capacity"] = r->capacity;
    out["order"] = OrderToJson(r->order, ground);
  } else if (const auto* r = std::get_if<McRule>(&rule.variant)) {
    out["orders"] = OrdersToJson(r->orders, ground);
  } else if (const auto* r = std::get_if<SeqPrioRivalryRule>(&rule.variant)) {
    out["capacity"] = r->capacity;
    out["orders"] = OrdersToJson(r->orders, ground);
  } else if (const auto* r = std::get_if<ReservesRule>(&rule.variant)) {
    out["capacity"] = r->capacity;
    Json labels = Json::object();
    for (int e = 0; e < ground.size(); ++e) {
      labels[ground.label(e)] = r->labeling.label_of(e);
    }
    out["labels"] = labels;
    Json reserves = Json::object();
    for (const auto& [label, value] : r->reserves) reserves[label] = value;
    out["reserves"] = reserves;
    out["order"] = OrderToJson(r->order, ground);
  } else if (const auto* r = std::get_if<TwoStageRule>(&rule.variant)) {
    out["first"] = SaveChoice(r->first);
    out["second"] = SaveChoice(r->second);
  }
  return out;
}

GroundSet ParseGround(const Json& value, const std::string& where) {
  auto labels = AsStrings(value, where);
  return At(where, [&] { return GroundSet(std::move(labels)); });
}

}  // namespace

Json ParseJson(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": byte " + std::to_string(e.byte) +
                     ": malformed JSON");
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str(), path);
}

ChoiceFunction LoadChoice(const Json& doc, const GroundSet& ground,
                          const std::string& where) {
  if (!doc.is_object()) Fail(where, "expected an object");
  const bool has_table = doc.contains("choice_table");
  const bool has_rule = doc.contains("rule");
  if (has_table == has_rule) {
    Fail(where, "expected exactly one of \"choice_table\" and \"rule\"");
  }
  if (has_rule) return ParseRule(doc["rule"], ground, where + ".rule");

  const std::string table_where = where + ".choice_table";
  const Json& table_json = doc["choice_table"];
  if (!table_json.is_object()) Fail(table_where, "expected an object");
  ChoiceFunction::Table table(ground.PowerSetSize());
  std::vector<bool> seen(table.size(), false);
  for (const auto& [key, value] : table_json.items()) {
    const std::string entry = table_where + "[\"" + key + "\"]";
    const Bundle s = At(entry, [&] { return ground.ParseKey(key); });
    if (seen[s.bits()]) Fail(entry, "duplicate option set");
    seen[s.bits()] = true;
    const Bundle chosen = ParseBundle(value, ground, entry);
    if (!chosen.IsSubsetOf(s)) Fail(entry, "choice is not a subset of the key");
    table[s.bits()] = chosen;
  }
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    if (!seen[bits]) {
      Fail(table_where,
           "missing option set \"" +
               ground.Key(Bundle::FromBits(static_cast<std::uint32_t>(bits))) +
               "\"");
    }
  }
  return At(where, [&] { return ChoiceFunction::FromTable(ground, table); });
}

Json SaveChoice(const ChoiceFunction& c) {
  const GroundSet& ground = c.ground();
  Json out;
  if (const RuleSpec* rule = c.rule()) {
    out["rule"] = RuleToJson(*rule, ground);
    return out;
  }
  Json table = Json::object();
  ForEachBundle(ground.size(), [&](Bundle s) {
    table[ground.Key(s)] = BundleToJson(c.EvalUnchecked(s), ground);
  });
  out["choice_table"] = table;
  return out;
}

ChoiceFunction LoadInstance(const Json& doc) {
  const GroundSet ground =
      ParseGround(Require(doc, "elements", "instance"), "elements");
  return LoadChoice(doc, ground, "instance");
}

Json SaveInstance(const ChoiceFunction& c) {
  Json out;
  out["elements"] = c.ground().labels();
  const Json choice = SaveChoice(c);
  for (const auto& [key, value] : choice.items()) out[key] = value;
  return out;
}

MatchingDocument LoadMatchingFile(const Json& doc) {
  const Json& agents_json = AsArray(Require(doc, "agents", "matching file"),
                                    "agents");
  const Json& objects_json = AsArray(Require(doc, "objects", "matching file"),
                                     "objects");
  std::vector<std::string> agent_names;
  for (std::size_t i = 0; i < agents_json.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    agent_names.push_back(
        AsString(Require(agents_json[i], "name", where), where + ".name"));
  }
  const GroundSet agents = At("agents", [&] { return GroundSet(agent_names); });

  std::vector<std::string> object_names;
  for (std::size_t o = 0; o < objects_json.size(); ++o) {
    const std::string where = "objects[" + std::to_string(o) + "]";
    object_names.push_back(
        AsString(Require(objects_json[o], "name", where), where + ".name"));
  }
  std::map<std::string, int> object_index;
  for (std::size_t o = 0; o < object_names.size(); ++o) {
    if (!object_index.emplace(object_names[o], static_cast<int>(o)).second) {
      Fail("objects[" + std::to_string(o) + "]",
           "duplicate object '" + object_names[o] + "'");
    }
  }

  std::vector<std::vector<int>> preferences;
  for (std::size_t i = 0; i < agents_json.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "].ranking";
    std::vector<int> ranking;
    for (const auto& name :
         AsStrings(Require(agents_json[i], "ranking", where), where)) {
      const auto it = object_index.find(name);
      if (it == object_index.end()) Fail(where, "unknown object '" + name + "'");
      ranking.push_back(it->second);
    }
    preferences.push_back(std::move(ranking));
  }

  std::vector<ChoiceFunction> choices;
  for (std::size_t o = 0; o < objects_json.size(); ++o) {
    Json body = objects_json[o];
    body.erase("name");
    choices.push_back(
        LoadChoice(body, agents, "objects[" + std::to_string(o) + "]"));
  }
  MatchingDocument out{
      At("matching file",
         [&] {
           return MatchingProblem(agents, object_names, std::move(preferences),
                                  std::move(choices));
         }),
      std::nullopt};
  if (doc.contains("matching")) {
    out.matching = LoadMatching(doc["matching"], out.problem);
  }
  return out;
}

Json SaveMatchingFile(const MatchingProblem& problem,
                      const std::optional<Matching>& matching) {
  Json out;
  Json agents = Json::array();
  for (int i = 0; i < problem.agent_count(); ++i) {
    Json ranking = Json::array();
    for (int o : problem.preference(i)) ranking.push_back(problem.object_name(o));
    agents.push_back(
        Json{{"name", problem.agents().label(i)}, {"ranking", ranking}});
  }
  out["agents"] = agents;
  Json objects = Json::array();
  for (int o = 0; o < problem.object_count(); ++o) {
    Json entry;
    entry["name"] = problem.object_name(o);
    const Json choice = SaveChoice(problem.choice(o));
    for (const auto& [key, value] : choice.items()) {
      entry[key] = value;
    }
    objects.push_back(entry);
  }
  out["objects"] = objects;
  if (matching) out["matching"] = SaveMatching(problem, *matching);
  return out;
}

Matching LoadMatching(const Json& doc, const MatchingProblem& problem) {
  if (!doc.is_object()) Fail("matching", "expected an object");
  Matching m{std::vector<int>(problem.agent_count(), kUnmatched)};
  for (const auto& [agent, object] : doc.items()) {
    const std::string where = "matching." + agent;
    const auto i = problem.agents().IndexOf(agent);
    if (!i) Fail(where, "unknown agent");
    const std::string name = AsString(object, where);
    if (name == "-") continue;
    const int o = problem.ObjectIndex(name);
    if (o < 0) Fail(where, "unknown object '" + name + "'");
    m.assign_of[*i] = o;
  }
  return m;
}

Json SaveMatching(const MatchingProblem& problem, const Matching& m) {
  Json out = Json::object();
  for (int i = 0; i < problem.agent_count(); ++i) {
    out[problem.agents().label(i)] =
        m.assign_of[i] == kUnmatched ? "-" : problem.object_name(m.assign_of[i]);
  }
  return out;
}

Matching ParseMatchingText(const std::string& text,
                           const MatchingProblem& problem) {
  Matching m{std::vector<int>(problem.agent_count(), kUnmatched)};
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_number;
    const std::string where = "matching line " + std::to_string(line_number);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) Fail(where, "expected 'agent: object'");
    const std::string agent = trim(line.substr(0, colon));
    const std::string object = trim(line.substr(colon + 1));
    const auto i = problem.agents().IndexOf(agent);
    if (!i) Fail(where, "unknown agent '" + agent + "'");
    if (object == "-") {
      m.assign_of[*i] = kUnmatched;
      continue;
    }
    const int o = problem.ObjectIndex(object);
    if (o < 0) Fail(where, "unknown object '" + object + "'");
    m.assign_of[*i] = o;
  }
  return m;
}

DemandDocument LoadDemandFile(const Json& doc) {
  DemandDocument out;
  out.ground = ParseGround(Require(doc, "elements", "demand file"), "elements");
  const Json& observations =
      AsArray(Require(doc, "observations", "demand file"), "observations");
  for (std::size_t k = 0; k < observations.size(); ++k) {
    const std::string where = "observations[" + std::to_string(k) + "]";
    const Json& prices = Require(observations[k], "prices", where);
    if (!prices.is_object()) Fail(where + ".prices", "expected an object");
    std::vector<std::optional<Rational>> price_of(out.ground.size());
    for (const auto& [element, value] : prices.items()) {
      const std::string entry = where + ".prices." + element;
      const auto index = out.ground.IndexOf(element);
      if (!index) Fail(entry, "unknown element");
      std::string text;
      if (value.is_number_integer()) {
        text = std::to_string(value.get<long long>());
      } else {
        text = AsString(value, entry);
      }
      price_of[*index] = At(entry, [&] { return ParseRational(text); });
    }
    std::vector<Rational> entries;
    for (int e = 0; e < out.ground.size(); ++e) {
      if (!price_of[e]) {
        Fail(where + ".prices", "no price for '" + out.ground.label(e) + "'");
      }
      entries.push_back(*price_of[e]);
    }
    DemandObservation obs{
        At(where + ".prices", [&] { return PriceVector(std::move(entries)); }),
        {}};
    const Json& demanded =
        AsArray(Require(observations[k], "demanded", where), where + ".demanded");
    if (demanded.empty()) Fail(where + ".demanded", "no demanded bundle");
    for (std::size_t j = 0; j < demanded.size(); ++j) {
      obs.demanded.push_back(
          ParseBundle(demanded[j], out.ground,
                      where + ".demanded[" + std::to_string(j) + "]"));
    }
    out.observations.push_back(std::move(obs));
  }
  return out;
}

Json SaveDemandFile(const DemandDocument& doc) {
  Json out;
  out["elements"] = doc.ground.labels();
  Json observations = Json::array();
  for (const auto& obs : doc.observations) {
    Json prices = Json::object();
    for (int e = 0; e < doc.ground.size(); ++e) {
      prices[doc.ground.label(e)] = FormatRational(obs.price[e]);
    }
    Json demanded = Json::array();
    for (Bundle a : obs.demanded) demanded.push_back(BundleToJson(a, doc.ground));
    observations.push_back(Json{{"prices", prices}, {"demanded", demanded}});
  }
  out["observations"] = observations;
  return out;
}

Json SaveValuation(const GroundSet& ground, const Valuation& v) {
  Json out = Json::object();
  ForEachBundle(ground.size(),
                [&](Bundle a) { out[ground.Key(a)] = FormatRational(v(a)); });
  return out;
}

}  // namespace combchoice::cli
