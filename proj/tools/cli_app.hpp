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

// The latfix command line. run() takes the arguments without the program
// name and writes the report to `out` and diagnostics to `err`.
//
// Exit codes: 0 every check holds, 1 a property failed or a witness was
// found, 2 usage or input error. Every report document carries "ok", and the
// exit code is 0 exactly when it is true.

#ifndef LATFIX_TOOLS_CLI_APP_HPP
#define LATFIX_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latfix/latfix.hpp"

namespace latfix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Result {
  Json report;  // always has a boolean "ok"
  std::string text;
};

namespace detail {

inline std::string braces(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

inline std::string witness_line(const std::vector<std::string>& w) {
  if (w.empty()) return {};
  std::string s = "witness:";
  for (const auto& e : w) s += " " + e;
  return s + "\n";
}

inline std::string check_line(const std::string& name, const CheckReport& r) {
  std::string s = name + ": " + std::string(outcome_name(r.outcome));
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  s += "\n";
  if (!r.holds()) s += "  " + witness_line(r.witness);
  return s;
}

inline Result failure(const std::string& kind, const Error& e) {
  Result res;
  res.report = {{"kind", kind},
                {"ok", false},
                {"error", std::string(errc_name(e.code()))},
                {"detail", e.what()},
                {"witness", e.elements()}};
  res.text = std::string(e.what()) + "\n" + witness_line(e.elements());
  return res;
}

inline Correspondence load_correspondence(const std::string& path) {
  return correspondence_from_json(load_json(path), std::filesystem::path(path).parent_path());
}

inline std::vector<std::string> split(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) throw Error(Errc::kParseError, "empty element name in '" + csv + "'");
    out.push_back(part);
  }
  return out;
}

inline Theorem parse_theorem(const std::string& s) {
  if (s == "fact-zhou") return Theorem::kFactZhou;
  if (s == "myzhou") return Theorem::kMyZhou;
  return Theorem::kCpltval;
}

}  // namespace detail

// Commands. Input errors propagate as exceptions; run() maps them to 2.

inline Result lattice_check(const std::string& path) {
  const Json doc = load_json(path);
  LatticePtr lat;
  try {
    lat = lattice_from_json(doc);
  } catch (const Error& e) {
    if (e.code() != Errc::kNotALattice && e.code() != Errc::kAntisymmetryViolation) throw;
    return detail::failure("lattice-check", e);
  }
  Result res;
  res.report = {{"kind", "lattice-check"},
                {"ok", true},
                {"size", lat->size()},
                {"bottom", lat->name(lat->bottom())},
                {"top", lat->name(lat->top())},
                {"lattice", lattice_to_json(*lat)}};
  res.text = "lattice with " + std::to_string(lat->size()) + " elements; bottom " +
             lat->name(lat->bottom()) + ", top " + lat->name(lat->top()) + "\n";
  return res;
}

inline const std::vector<std::string>& correspondence_properties() {
  static const std::vector<std::string> names = {"ascending", "v-ascending", "subcomplete-values",
                                                 "chain-subcomplete-values", "complete-values"};
  return names;
}

inline CheckReport check_property(const Correspondence& f, const std::string& property) {
  const FiniteLattice& lat = f.lattice();
  if (property == "ascending") return is_ascending(f);
  if (property == "v-ascending") {
    const CheckReport lo = is_lower_v_ascending(f), up = is_upper_v_ascending(f);
    if (lo && up) return CheckReport::pass("lower and upper V-ascending");
    const CheckReport& bad = lo ? up : lo;
    return {bad.outcome, bad.witness,
            std::string(lo ? "" : "not lower V-ascending") + (!lo && !up ? "; " : "") +
                (up ? "" : "not upper V-ascending")};
  }
  for (Elem x = 0; x < lat.size(); ++x) {
    CheckReport r;
    if (property == "subcomplete-values") r = is_subcomplete(lat, f.value(x));
    else if (property == "chain-subcomplete-values") r = is_chain_subcomplete(lat, f.value(x), Direction::kBoth);
    else r = is_induced_lattice(lat.poset(), f.value(x));
    if (!r) {
      r.detail = "F(" + lat.name(x) + ") = " + latfix::detail::set_text(lat, f.value(x)) + ": " + r.detail;
      r.witness.insert(r.witness.begin(), lat.name(x));
      return r;
    }
  }
  return CheckReport::pass("every value qualifies");
}

inline Result corr_check(const std::string& path, const std::string& property) {
  const Correspondence f = detail::load_correspondence(path);
  std::vector<std::string> props = property.empty() ? correspondence_properties() : std::vector{property};
  Result res;
  Json checks = Json::object();
  bool ok = true;
  for (const auto& p : props) {
    const CheckReport r = check_property(f, p);
    ok = ok && r.holds();
    checks[p] = check_report_json(r);
    res.text += detail::check_line(p, r);
  }
  res.report = {{"kind", "corr-check"}, {"ok", ok}, {"checks", checks}};
  return res;
}

inline Result fix_compute(const std::string& path, const std::string& method) {
  const Correspondence f = detail::load_correspondence(path);
  const FiniteLattice& lat = f.lattice();
  Result res;
  if (method == "brute") {
    const FixedPointSet fix = fixed_points_brute(f);
    auto opt = [&](const std::optional<Elem>& e) { return e ? Json(lat.name(*e)) : Json(nullptr); };
    res.report = {{"kind", "fix-compute"},
                  {"method", method},
                  {"ok", true},
                  {"fix", latfix::detail::sorted(lat.names_of(fix.members))},
                  {"least", opt(fix.least)},
                  {"greatest", opt(fix.greatest)},
                  {"is_complete_lattice", fix.is_complete_lattice}};
    res.text = "Fix = " + latfix::detail::set_text(lat, fix.members);
    if (fix.least) res.text += "; least " + lat.name(*fix.least);
    if (fix.greatest) res.text += "; greatest " + lat.name(*fix.greatest);
    res.text += fix.is_complete_lattice ? "; complete lattice\n" : "; not a complete lattice\n";
    return res;
  }
  try {
    const bool dual = method == "dual";
    const Elem e = method == "inf-c"     ? least_fixed_point_infC(f)
                   : method == "min-sel" ? least_fixed_point_minsel(f)
                                         : greatest_fixed_point(f, LfpMethod::kInfC);
    const char* which = dual ? "greatest" : "least";
    res.report = {{"kind", "fix-compute"}, {"method", method}, {"ok", true}, {which, lat.name(e)}};
    res.text = std::string(which) + " fixed point " + lat.name(e) + "\n";
  } catch (const Error& e) {
    if (e.code() != Errc::kHypothesisViolated && e.code() != Errc::kEmptyValue) throw;
    res = detail::failure("fix-compute", e);
    res.report["method"] = method;
  }
  return res;
}

inline Result fix_verify(const std::string& path, const std::string& theorem) {
  const Correspondence f = detail::load_correspondence(path);
  const CheckReport r = verify_fix_complete(f, detail::parse_theorem(theorem));
  Result res;
  res.report = check_report_json(r);
  res.report["kind"] = "fix-verify";
  res.report["theorem"] = theorem;
  res.report["ok"] = r.holds();
  res.text = r.detail + "\n" + (r.holds() ? "" : detail::witness_line(r.witness));
  return res;
}

inline Result fix_sup(const std::string& path, const std::string& subset, const std::string& variant) {
  const Correspondence f = detail::load_correspondence(path);
  const FiniteLattice& lat = f.lattice();
  const ElemSet u = lat.subset(detail::split(subset));
  const SupVariant v =
      variant == "complete-values" ? SupVariant::kCompleteValues : SupVariant::kChainSubcomplete;
  Result res;
  try {
    const Elem s = sup_fix_over_subset(f, u, v);
    res.report = {{"kind", "fix-sup"},
                  {"ok", true},
                  {"variant", variant},
                  {"subset", latfix::detail::sorted(lat.names_of(u))},
                  {"sup", lat.name(s)}};
    res.text = "sup of " + latfix::detail::set_text(lat, u) + " in Fix = " + lat.name(s) + "\n";
  } catch (const Error& e) {
    if (e.code() != Errc::kHypothesisViolated) throw;
    res = detail::failure("fix-sup", e);
    res.report["variant"] = variant;
  }
  return res;
}

inline Result game_check(const std::string& path) {
  const Json doc = load_json(path);
  std::optional<Game> g;
  try {
    g = game_from_json(doc);
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::kFeasibleNotSublattice:
      case Errc::kProjectionNotSurjective:
      case Errc::kPayoffMissing:
      case Errc::kInfeasibleProfile:
        return detail::failure("game-check", e);
      default:
        throw;
    }
  }
  const CheckReport sm = check_supermodular(*g), id = check_increasing_differences(*g);
  std::size_t product = 1;
  for (std::size_t i = 0; i < g->num_players(); ++i) product *= g->strategies(i).size();
  Result res;
  res.report = {{"kind", "game-check"},
                {"ok", sm.holds() && id.holds()},
                {"players", g->num_players()},
                {"profiles", g->num_profiles()},
                {"product_form", g->num_profiles() == product},
                {"supermodular", check_report_json(sm)},
                {"increasing_differences", check_report_json(id)}};
  res.text = "valid game: " + std::to_string(g->num_players()) + " players, " +
             std::to_string(g->num_profiles()) + " feasible profiles" +
             (g->num_profiles() == product ? "" : " (not product form)") + "\n" +
             detail::check_line("supermodular", sm) + detail::check_line("increasing differences", id);
  return res;
}

inline Result game_solve(const std::string& path, const std::string& method) {
  const Game g = game_from_json(load_json(path));
  Result res;
  try {
    const EquilibriumSet nash = method == "fixpoint" ? nash_via_fixpoint(g) : nash_brute(g);
    const CheckReport lattice = verify_nash_lattice(g);
    res.report = equilibrium_json(g, nash);
    res.report["kind"] = "game-solve";
    res.report["method"] = method;
    res.report["nash_lattice"] = check_report_json(lattice);
    res.report["ok"] = lattice.outcome != Outcome::kConclusionViolated;
    const FiniteLattice& s = g.joint();
    res.text = "Nash = " + latfix::detail::set_text(s, nash.members);
    if (nash.least) res.text += "; least " + s.name(*nash.least);
    if (nash.greatest) res.text += "; greatest " + s.name(*nash.greatest);
    res.text += nash.is_complete_lattice ? "; complete lattice\n" : "\n";
    if (lattice.outcome == Outcome::kConclusionViolated) res.text += lattice.detail + "\n";
  } catch (const Error& e) {
    if (e.code() != Errc::kHypothesisViolated && e.code() != Errc::kEquivalenceViolation) throw;
    res = detail::failure("game-solve", e);
    res.report["method"] = method;
  }
  return res;
}

inline Result game_suite(const GameGenConfig& cfg, std::uint64_t count) {
  const GameSuiteReport r = run_game_suite(cfg, count);
  Result res;
  res.report = game_suite_report_json(r);
  res.report["ok"] = r.passed();
  std::ostringstream t;
  t << "game suite: " << r.games << " games (" << r.games - r.product_form << " not product form), "
    << r.nash_profiles << " equilibria in total\n"
    << "validator failures " << r.validator_failures << ", fixed-point premise failures "
    << r.fixpoint_premise_failures << ", equivalence violations " << r.equivalence_violations
    << ", empty or incomplete Nash sets " << r.empty_or_incomplete << ", affine violations "
    << r.affine_violations << "\n";
  for (const auto& w : r.witnesses) t << "game " << w.index << " (seed " << w.seed << "): " << w.detail << "\n";
  res.text = t.str();
  return res;
}

inline Result fuzz_theorem(const std::string& theorem, const GeneratorConfig& cfg, std::uint64_t trials) {
  const TrialReport r = run_theorem_suite(detail::parse_theorem(theorem), cfg, trials);
  Result res;
  res.report = trial_report_json(r);
  res.report["ok"] = r.passed();
  std::ostringstream t;
  t << theorem << ": " << r.trials << " trials, " << r.hypothesis_hits << " met the hypotheses, "
    << r.conclusion_verified << " verified, " << r.conclusion_violations << " conclusion violations, "
    << r.route_mismatches << " route mismatches, " << r.skipped << " skipped\n";
  for (const auto& w : r.witnesses) {
    t << "trial " << w.trial << " (seed " << w.seed << "): " << w.detail << "\n"
      << correspondence_to_json(w.instance).dump() << "\n";
  }
  res.text = t.str();
  return res;
}

inline Result fuzz_search(const std::string& dropped, const GeneratorConfig& cfg, std::uint64_t trials) {
  const Dropped d = dropped == "lower-v"   ? Dropped::kLowerV
                    : dropped == "upper-v" ? Dropped::kUpperV
                                           : Dropped::kNonemptyValues;
  const SearchReport r = search_counterexample(d, cfg, trials);
  Result res;
  res.report = search_report_json(r);
  res.report["ok"] = !r.witness.has_value();
  std::ostringstream t;
  t << "dropped " << dropped << ": " << r.trials << " trials, " << r.candidates << " candidates, "
    << r.skipped << " skipped\n";
  if (r.witness) {
    t << "witness at trial " << r.witness->trial << " (seed " << r.witness->seed
      << "): " << r.witness->detail << "\n"
      << correspondence_to_json(r.witness->instance).dump() << "\n";
  } else {
    t << "no witness found\n";
  }
  res.text = t.str();
  return res;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattices, fixed points of correspondences and supermodular games.", "latfix"};
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable report documents");
  app.require_subcommand(1);

  std::string file, method, property, theorem, subset, variant, target, strategy, dropped;
  std::uint64_t seed = kDefaultSeed, trials = 1000, count = 500;
  std::size_t max_size = 8, max_value_size = 4, max_players = 3, max_strategies = 4;
  std::function<Result()> action;

  auto group = [&](const char* name, const char* help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, std::function<Result()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->fallthrough();
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto input = [&](CLI::App* c, const char* help) {
    c->add_option("file", file, help)->required()->check(CLI::ExistingFile);
  };

  CLI::App* lattice = group("lattice", "Lattice documents");
  input(leaf(lattice, "check", "Check that a document describes a lattice", [&] { return lattice_check(file); }),
        "Lattice JSON document");

  CLI::App* corr = group("corr", "Correspondence documents");
  CLI::App* corr_chk = leaf(corr, "check", "Check properties of a correspondence",
                            [&] { return corr_check(file, property); });
  input(corr_chk, "Correspondence JSON document");
  corr_chk->add_option("--property", property, "Property to check (default: all)")
      ->check(CLI::IsMember(correspondence_properties()));

  CLI::App* fix = group("fix", "Fixed points of a correspondence");
  method = "brute";
  CLI::App* fix_cmp = leaf(fix, "compute", "Compute fixed points", [&] { return fix_compute(file, method); });
  input(fix_cmp, "Correspondence JSON document");
  fix_cmp->add_option("--method", method, "brute (all), inf-c or min-sel (least), dual (greatest)")
      ->check(CLI::IsMember({"brute", "inf-c", "min-sel", "dual"}));
  CLI::App* fix_ver = leaf(fix, "verify", "Check a theorem's hypotheses and conclusion",
                           [&] { return fix_verify(file, theorem); });
  input(fix_ver, "Correspondence JSON document");
  fix_ver->add_option("--theorem", theorem, "fact-zhou, myzhou or cpltval")
      ->required()
      ->check(CLI::IsMember({"fact-zhou", "myzhou", "cpltval"}));
  variant = "chain-subcomplete";
  CLI::App* fix_sp = leaf(fix, "sup", "Least upper bound of fixed points within Fix",
                          [&] { return fix_sup(file, subset, variant); });
  input(fix_sp, "Correspondence JSON document");
  fix_sp->add_option("--subset", subset, "Comma separated fixed points")->required();
  fix_sp->add_option("--variant", variant, "chain-subcomplete or complete-values")
      ->check(CLI::IsMember({"chain-subcomplete", "complete-values"}));

  CLI::App* game = group("game", "Supermodular games");
  input(leaf(game, "check", "Validate a game and its supermodularity", [&] { return game_check(file); }),
        "Game JSON document");
  std::string game_method = "brute";
  CLI::App* game_slv = leaf(game, "solve", "Compute the Nash equilibria",
                            [&] { return game_solve(file, game_method); });
  input(game_slv, "Game JSON document");
  game_slv->add_option("--method", game_method, "brute or fixpoint")
      ->check(CLI::IsMember({"brute", "fixpoint"}));
  CLI::App* game_st = leaf(game, "suite", "Run the seeded game corpus", [&] {
    GameGenConfig cfg;
    cfg.seed = seed;
    cfg.max_players = max_players;
    cfg.max_strategies = max_strategies;
    return game_suite(cfg, count);
  });
  game_st->add_option("--count", count, "Number of games")->check(CLI::PositiveNumber);
  game_st->add_option("--seed", seed, "Corpus seed");
  game_st->add_option("--max-players", max_players)->check(CLI::Range(1, 3));
  game_st->add_option("--max-strategies", max_strategies)->check(CLI::Range(1, 4));

  CLI::App* fuzz = app.add_subcommand("fuzz", "Seeded theorem suites and counterexample search");
  fuzz->fallthrough();
  fuzz->callback([&] {
    action = [&]() -> Result {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.max_lattice_size = max_size;
      cfg.max_value_size = max_value_size;
      if (target == "ascending") cfg.target_class = TargetClass::kAscending;
      if (target == "unconstrained") cfg.target_class = TargetClass::kUnconstrained;
      if (strategy == "random-poset-downsets") cfg.strategy = LatticeStrategy::kRandomPosetDownsets;
      return theorem.empty() ? fuzz_search(dropped, cfg, trials) : fuzz_theorem(theorem, cfg, trials);
    };
  });
  auto* th = fuzz->add_option("--theorem", theorem, "fact-zhou, myzhou or cpltval")
                 ->check(CLI::IsMember({"fact-zhou", "myzhou", "cpltval"}));
  auto* dr = fuzz->add_option("--drop", dropped, "Search for a counterexample without this premise")
                 ->check(CLI::IsMember({"lower-v", "upper-v", "nonempty-values"}));
  th->excludes(dr);
  fuzz->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-size", max_size, "Largest lattice size")->check(CLI::Range(1, 12));
  fuzz->add_option("--max-value-size", max_value_size, "Largest sampled |F(x)|")->check(CLI::Range(1, 12));
  fuzz->add_option("--seed", seed, "Suite seed");
  fuzz->add_option("--target", target, "Correspondence class to generate")
      ->check(CLI::IsMember({"ascending", "v-ascending", "unconstrained"}));
  fuzz->add_option("--strategy", strategy, "Lattice generator")
      ->check(CLI::IsMember({"chain-product-closure", "random-poset-downsets"}));

  auto usage_error = [&](const std::string& code, const std::string& message) {
    err << "error: " << message << "\n";
    if (json) out << dump({{"kind", "error"}, {"ok", false}, {"error", code}, {"detail", message}});
    return kExitUsage;
  };

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage_error("UsageError", e.what());
  }
  if (fuzz->parsed() && theorem.empty() && dropped.empty()) {
    return usage_error("UsageError", "fuzz needs --theorem or --drop");
  }

  Result res;
  try {
    res = action();
  } catch (const Error& e) {
    return usage_error(std::string(errc_name(e.code())), e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error("UsageError", e.what());
  }
  if (json) {
    out << dump(res.report);
  } else {
    out << res.text;
  }
  return res.report.at("ok").get<bool>() ? kExitOk : kExitFailed;
}

}  // namespace latfix::cli

#endif  // LATFIX_TOOLS_CLI_APP_HPP
