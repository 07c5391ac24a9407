// Copyright 2026 The latfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents for lattices, correspondences and games, plus the report
// documents printed by the command line tool.
//
//   lattice:        {"elements": [id...], "le": [[lo, hi]...]}
//   correspondence: {"lattice": <lattice doc or path>, "map": {id: [id...]}}
//   game:           {"players": [...], "strategies": {player: <lattice doc>},
//                    "feasible": [[id...]...], "payoffs": {player: {key: "p/q"}}}
//
// Writers are canonical: elements sorted, "le" holds the sorted cover pairs,
// object keys sorted. Syntax errors carry line and column; schema errors
// carry the JSON pointer of the offending value.

#ifndef LATFIX_JSON_IO_HPP
#define LATFIX_JSON_IO_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latfix/correspondence.hpp"
#include "latfix/error.hpp"
#include "latfix/fixed_points.hpp"
#include "latfix/game.hpp"
#include "latfix/game_lab.hpp"
#include "latfix/lattice.hpp"
#include "latfix/rational.hpp"
#include "latfix/report.hpp"
#include "latfix/supermodular.hpp"
#include "latfix/theorem_lab.hpp"

namespace latfix {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::kParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing \"" + key + "\"");
  return *it;
}

inline std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(str(j[k], where + "/" + std::to_string(k)));
  return out;
}

inline std::string pointer_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Parses JSON text; syntax errors become ParseError with "source:" and the
/// line and column of the offending character.
inline Json parse_json(std::string_view text, const std::string& source = "<input>") {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto tag = msg.find("] "); msg.rfind("[json.exception", 0) == 0 && tag != std::string::npos) {
      msg = msg.substr(tag + 2);
    }
    throw Error(Errc::kParseError, source + ": " + msg);
  }
}

inline Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParseError, "cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

// Lattices

inline Json lattice_to_json(const FiniteLattice& lat) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : lat.poset().covers()) covers.emplace_back(lat.name(lo), lat.name(hi));
  std::sort(covers.begin(), covers.end());
  Json le = Json::array();
  for (const auto& [lo, hi] : covers) le.push_back({lo, hi});
  std::vector<std::string> names;
  for (Elem e = 0; e < lat.size(); ++e) names.push_back(lat.name(e));
  return {{"elements", detail::sorted(names)}, {"le", le}};
}

inline LatticePtr lattice_from_json(const Json& j, const std::string& where = "") {
  const auto elements = detail::strings(detail::field(j, "elements", where), where + "/elements");
  const Json& le = detail::field(j, "le", where);
  if (!le.is_array()) detail::schema_error(where + "/le", "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t k = 0; k < le.size(); ++k) {
    const std::string at = where + "/le/" + std::to_string(k);
    const auto pair = detail::strings(le[k], at);
    if (pair.size() != 2) detail::schema_error(at, "expected a pair [lo, hi]");
    pairs.emplace_back(pair[0], pair[1]);
  }
  return make_lattice(elements, pairs);
}

// Correspondences

inline Json correspondence_to_json(const Correspondence& f) {
  const FiniteLattice& lat = f.lattice();
  Json map = Json::object();
  for (Elem x = 0; x < lat.size(); ++x) map[lat.name(x)] = detail::sorted(lat.names_of(f.value(x)));
  return {{"lattice", lattice_to_json(lat)}, {"map", map}};
}

/// A string "lattice" is a path, resolved against `base_dir`. With
/// `allow_empty_values` the result is relaxed, for counterexample witnesses.
inline Correspondence correspondence_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                                               bool allow_empty_values = false) {
  const Json& lj = detail::field(j, "lattice", "");
  LatticePtr lat;
  if (lj.is_string()) {
    std::filesystem::path p = lj.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    lat = lattice_from_json(load_json(p));
  } else {
    lat = lattice_from_json(lj, "/lattice");
  }
  const Json& map = detail::field(j, "map", "");
  if (!map.is_object()) detail::schema_error("/map", "expected an object");
  std::vector<ElemSet> values(lat->size(), ElemSet(lat->size()));
  std::vector<bool> seen(lat->size(), false);
  for (const auto& [key, val] : map.items()) {
    const std::string at = "/map/" + detail::pointer_key(key);
    auto x = lat->poset().find(key);
    if (!x) throw Error(Errc::kUnknownElement, "at " + at + ": unknown element '" + key + "'", {key});
    seen[*x] = true;
    const auto members = detail::strings(val, at);
    if (members.empty() && !allow_empty_values) {
      throw Error(Errc::kEmptyValue, "at " + at + ": F(" + key + ") is empty", {key});
    }
    values[*x] = lat->subset(members);
  }
  for (Elem x = 0; x < lat->size(); ++x) {
    if (!seen[x]) {
      throw Error(Errc::kEmptyValue, "at /map: no value given for '" + lat->name(x) + "'",
                  {lat->name(x)});
    }
  }
  if (allow_empty_values) return Correspondence::make_relaxed(lat, std::move(values));
  return Correspondence(lat, std::move(values));
}

// Games

inline Json game_to_json(const Game& g) {
  Json strategies = Json::object(), payoffs = Json::object(), feasible = Json::array();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    strategies[g.players()[i]] = lattice_to_json(g.strategies(i));
    Json table = Json::object();
    for (Elem e = 0; e < g.num_profiles(); ++e) table[g.key(g.profile(e))] = g.payoff(i, e).str();
    payoffs[g.players()[i]] = table;
  }
  std::vector<std::vector<std::string>> rows;
  for (Elem e = 0; e < g.num_profiles(); ++e) {
    std::vector<std::string> row;
    for (std::size_t i = 0; i < g.num_players(); ++i) row.push_back(g.strategies(i).name(g.profile(e)[i]));
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) feasible.push_back(r);
  return {{"players", g.players()}, {"strategies", strategies}, {"feasible", feasible}, {"payoffs", payoffs}};
}

inline Game game_from_json(const Json& j) {
  GameSpec spec;
  spec.players = detail::strings(detail::field(j, "players", ""), "/players");
  const Json& strategies = detail::field(j, "strategies", "");
  for (const auto& p : spec.players) {
    const std::string at = "/strategies/" + detail::pointer_key(p);
    if (!strategies.is_object() || !strategies.contains(p)) {
      detail::schema_error("/strategies", "missing strategy lattice for player '" + p + "'");
    }
    spec.strategies.push_back(lattice_from_json(strategies.at(p), at));
  }
  for (const auto& [p, unused] : strategies.items()) {
    if (std::find(spec.players.begin(), spec.players.end(), p) == spec.players.end()) {
      throw Error(Errc::kUnknownElement, "at /strategies: unknown player '" + p + "'", {p});
    }
  }
  const Json& feasible = detail::field(j, "feasible", "");
  if (!feasible.is_array()) detail::schema_error("/feasible", "expected an array of profiles");
  for (std::size_t k = 0; k < feasible.size(); ++k) {
    spec.feasible.push_back(detail::strings(feasible[k], "/feasible/" + std::to_string(k)));
  }
  const Json& payoffs = detail::field(j, "payoffs", "");
  if (!payoffs.is_object()) detail::schema_error("/payoffs", "expected an object");
  for (const auto& [player, table] : payoffs.items()) {
    const std::string at = "/payoffs/" + detail::pointer_key(player);
    if (!table.is_object()) detail::schema_error(at, "expected an object");
    for (const auto& [key, value] : table.items()) {
      const std::string vat = at + "/" + detail::pointer_key(key);
      try {
        spec.payoffs[player][key] = Rational::parse(detail::str(value, vat));
      } catch (const Error& e) {
        if (e.code() != Errc::kParseError) throw;
        std::string what = e.what();
        detail::schema_error(vat, what.substr(what.find(": ") + 2));
      }
    }
  }
  return build_game(spec);
}

// Reports

inline Json check_report_json(const CheckReport& r) {
  return {{"outcome", std::string(outcome_name(r.outcome))}, {"witness", r.witness}, {"detail", r.detail}};
}

inline Json generator_config_json(const GeneratorConfig& c) {
  return {{"seed", c.seed},
          {"max_lattice_size", c.max_lattice_size},
          {"max_value_size", c.max_value_size},
          {"target", target_name(c.target_class)},
          {"strategy", strategy_name(c.strategy)}};
}

inline Json witness_json(const Witness& w) {
  return {{"trial", w.trial},
          {"seed", w.seed},
          {"detail", w.detail},
          {"instance", correspondence_to_json(w.instance)}};
}

inline Json trial_report_json(const TrialReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  return {{"kind", "theorem-suite"},
          {"theorem", std::string(theorem_name(r.theorem))},
          {"config", generator_config_json(r.config)},
          {"trials", r.trials},
          {"hypothesis_hits", r.hypothesis_hits},
          {"conclusion_verified", r.conclusion_verified},
          {"conclusion_violations", r.conclusion_violations},
          {"route_mismatches", r.route_mismatches},
          {"skipped", r.skipped},
          {"passed", r.passed()},
          {"witnesses", ws}};
}

inline Json search_report_json(const SearchReport& r) {
  return {{"kind", "counterexample-search"},
          {"dropped", dropped_name(r.dropped)},
          {"config", generator_config_json(r.config)},
          {"trials", r.trials},
          {"candidates", r.candidates},
          {"skipped", r.skipped},
          {"witness", r.witness ? witness_json(*r.witness) : Json(nullptr)}};
}

inline Json game_suite_report_json(const GameSuiteReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"index", w.index}, {"seed", w.seed}, {"detail", w.detail}, {"game", game_to_json(w.game)}});
  }
  return {{"kind", "game-suite"},
          {"config",
           {{"seed", r.config.seed},
            {"max_players", r.config.max_players},
            {"max_strategies", r.config.max_strategies}}},
          {"games", r.games},
          {"product_form", r.product_form},
          {"validator_failures", r.validator_failures},
          {"fixpoint_premise_failures", r.fixpoint_premise_failures},
          {"equivalence_violations", r.equivalence_violations},
          {"empty_or_incomplete", r.empty_or_incomplete},
          {"affine_violations", r.affine_violations},
          {"nash_profiles", r.nash_profiles},
          {"passed", r.passed()},
          {"witnesses", ws}};
}

inline Json equilibrium_json(const Game& g, const EquilibriumSet& s) {
  const FiniteLattice& j = g.joint();
  auto opt = [&](const std::optional<Elem>& e) { return e ? Json(j.name(*e)) : Json(nullptr); };
  return {{"nash", detail::sorted(j.names_of(s.members))},
          {"least", opt(s.least)},
          {"greatest", opt(s.greatest)},
          {"is_complete_lattice", s.is_complete_lattice}};
}

/// Two-space indented text with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace latfix

#endif  // LATFIX_JSON_IO_HPP
