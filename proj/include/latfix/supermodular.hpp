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

// Supermodular game checks and two routes to the Nash set: a deviation scan,
// and the fixed points of the aggregate best response Y(x) = argmax of
// g(y, x) = sum_i f_i(y_i, x_{-i}) over S(x) = (prod_i S_i(x_{-i})) n S.
//
// Order upper semicontinuity is automatic on finite lattices, so the
// supermodular game premises reduce to the two scans below.

#ifndef LATFIX_SUPERMODULAR_HPP
#define LATFIX_SUPERMODULAR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/fixed_points.hpp"
#include "latfix/game.hpp"
#include "latfix/induced.hpp"
#include "latfix/rational.hpp"
#include "latfix/report.hpp"
#include "latfix/subsets.hpp"

namespace latfix {

struct EquilibriumSet {
  ElemSet members;  // over the joint lattice S
  std::optional<Elem> least;
  std::optional<Elem> greatest;
  bool is_complete_lattice = false;
};

namespace detail {

inline EquilibriumSet equilibrium_set(const Game& g, ElemSet members) {
  const FiniteLattice& s = g.joint();
  EquilibriumSet out{std::move(members), std::nullopt, std::nullopt, false};
  out.least = s.poset().least_of(out.members);
  out.greatest = s.poset().greatest_of(out.members);
  out.is_complete_lattice = !out.members.empty() && is_induced_lattice(s.poset(), out.members).holds();
  return out;
}

inline Profile with(Profile p, std::size_t i, Elem v) {
  p[i] = v;
  return p;
}

inline Elem require_profile(const Game& g, const Profile& p) {
  if (p.size() != g.num_players()) throw std::invalid_argument("profile has the wrong arity");
  auto e = g.find(p);
  if (!e) {
    throw Error(Errc::kInfeasibleProfile, g.profile_name(p) + " is not in S", {g.key(p)});
  }
  return *e;
}

// Distinct x_{-i} among feasible profiles, as full profiles with x_i = 0.
inline std::vector<Profile> opponent_profiles(const Game& g, std::size_t i) {
  std::set<Profile> out;
  for (Elem e = 0; e < g.num_profiles(); ++e) out.insert(with(g.profile(e), i, 0));
  return {out.begin(), out.end()};
}

}  // namespace detail

/// S_i(x_{-i}) = {x_i : (x_i, x_{-i}) in S}; x[i] is ignored.
inline ElemSet section_strategies(const Game& g, std::size_t i, const Profile& x) {
  if (x.size() != g.num_players()) throw std::invalid_argument("profile has the wrong arity");
  const FiniteLattice& si = g.strategies(i);
  ElemSet out(si.size());
  for (Elem s = 0; s < si.size(); ++s)
    if (g.find(detail::with(x, i, s))) out.insert(s);
  if (out.empty()) {
    throw Error(Errc::kEmptySection,
                "no feasible profile extends the others' choices in " + g.profile_name(x),
                {g.players()[i]});
  }
  if (CheckReport r = is_subcomplete(si, out); !r) {
    throw Error(Errc::kInternalContradiction, "section is not a sublattice: " + r.detail);
  }
  return out;
}

/// S(x) = (prod_i S_i(x_{-i})) n S, as a subset of the joint lattice.
inline ElemSet joint_section(const Game& g, const Profile& x) {
  detail::require_profile(g, x);
  std::vector<ElemSet> sections;
  for (std::size_t i = 0; i < g.num_players(); ++i) sections.push_back(section_strategies(g, i, x));
  ElemSet out(g.num_profiles());
  for (Elem e = 0; e < g.num_profiles(); ++e) {
    const Profile& y = g.profile(e);
    bool in = true;
    for (std::size_t i = 0; i < y.size() && in; ++i) in = sections[i].contains(y[i]);
    if (in) out.insert(e);
  }
  if (CheckReport r = is_subcomplete(g.joint(), out); !r) {
    throw Error(Errc::kInternalContradiction, "S(x) is not a sublattice: " + r.detail);
  }
  return out;
}

/// For every i, x_{-i} and y, y' in S_i(x_{-i}):
/// f_i(y v y', x_{-i}) + f_i(y ^ y', x_{-i}) >= f_i(y, x_{-i}) + f_i(y', x_{-i}).
/// Witness: (player, y profile, y' profile).
inline CheckReport check_supermodular(const Game& g) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const FiniteLattice& si = g.strategies(i);
    for (const Profile& x : detail::opponent_profiles(g, i)) {
      const ElemSet sec = section_strategies(g, i, x);
      auto f = [&](Elem s) { return g.payoff(i, *g.find(detail::with(x, i, s))); };
      for (Elem y : sec) {
        for (Elem yp : sec) {
          if (f(si.join(y, yp)) + f(si.meet(y, yp)) < f(y) + f(yp)) {
            const Profile a = detail::with(x, i, y), b = detail::with(x, i, yp);
            return CheckReport::fail(
                {g.players()[i], g.profile_name(a), g.profile_name(b)},
                "f_" + g.players()[i] + " is not supermodular on the section at " +
                    g.profile_name(a) + ", " + g.profile_name(b));
          }
        }
      }
    }
  }
  return CheckReport::pass("supermodular on every section");
}

/// For every i, y_i <= y'_i and x_{-i} <= x'_{-i} with all four corners in S:
/// f_i(y', x) - f_i(y, x) <= f_i(y', x') - f_i(y, x'). Quadruples with an
/// infeasible corner are skipped. Witness: player and the four corners
/// (y,x), (y',x), (y,x'), (y',x').
inline CheckReport check_increasing_differences(const Game& g) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const FiniteLattice& si = g.strategies(i);
    for (Elem p = 0; p < g.num_profiles(); ++p) {
      for (Elem q = 0; q < g.num_profiles(); ++q) {
        const Profile& yx = g.profile(p);    // (y_i, x_{-i})
        const Profile& ypxp = g.profile(q);  // (y'_i, x'_{-i})
        if (!si.le(yx[i], ypxp[i]) || !g.le_others(i, yx, ypxp)) continue;
        auto ypx = g.find(detail::with(yx, i, ypxp[i]));
        auto yxp = g.find(detail::with(ypxp, i, yx[i]));
        if (!ypx || !yxp) continue;
        if (g.payoff(i, *ypx) - g.payoff(i, p) > g.payoff(i, q) - g.payoff(i, *yxp)) {
          return CheckReport::fail(
              {g.players()[i], g.profile_name(yx), g.profile_name(g.profile(*ypx)),
               g.profile_name(g.profile(*yxp)), g.profile_name(ypxp)},
              "f_" + g.players()[i] + " lacks increasing differences between " +
                  g.profile_name(yx) + " and " + g.profile_name(ypxp));
        }
      }
    }
  }
  return CheckReport::pass("increasing differences relative to S");
}

/// g(y, x) = sum_i f_i(y_i, x_{-i}) for y in S(x).
inline Rational aggregate_value(const Game& g, const Profile& y, const Profile& x) {
  Rational sum;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    sum += g.payoff(i, detail::require_profile(g, detail::with(x, i, y[i])));
  }
  return sum;
}

/// Y(x) = argmax over S(x) of g(., x); all maximizers, no tie-breaking.
inline ElemSet aggregate_argmax(const Game& g, const Profile& x) {
  const ElemSet sx = joint_section(g, x);
  ElemSet out(g.num_profiles());
  std::optional<Rational> best;
  for (Elem e : sx) {
    const Rational v = aggregate_value(g, g.profile(e), x);
    if (!best || v > *best) {
      best = v;
      out = ElemSet(g.num_profiles(), {e});
    } else if (v == *best) {
      out.insert(e);
    }
  }
  return out;
}

/// Player i's best responses within S_i(x_{-i}).
inline ElemSet section_best_responses(const Game& g, std::size_t i, const Profile& x) {
  const ElemSet sec = section_strategies(g, i, x);
  ElemSet out(g.strategies(i).size());
  std::optional<Rational> best;
  for (Elem s : sec) {
    const Rational& v = g.payoff(i, *g.find(detail::with(x, i, s)));
    if (!best || v > *best) {
      best = v;
      out = ElemSet(g.strategies(i).size(), {s});
    } else if (v == *best) {
      out.insert(s);
    }
  }
  return out;
}

/// Profiles s in S with f_i(s'_i, s_{-i}) <= f_i(s) for every i and every
/// s'_i in S_i(s_{-i}).
inline EquilibriumSet nash_brute(const Game& g) {
  ElemSet members(g.num_profiles());
  for (Elem e = 0; e < g.num_profiles(); ++e) {
    const Profile& s = g.profile(e);
    bool stable = true;
    for (std::size_t i = 0; i < g.num_players() && stable; ++i) {
      for (Elem alt : section_strategies(g, i, s)) {
        if (g.payoff(i, *g.find(detail::with(s, i, alt))) > g.payoff(i, e)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) members.insert(e);
  }
  return detail::equilibrium_set(g, std::move(members));
}

/// Y as a correspondence on the joint lattice S.
inline Correspondence aggregate_best_response(const Game& g) {
  std::vector<ElemSet> values;
  for (Elem e = 0; e < g.num_profiles(); ++e) values.push_back(aggregate_argmax(g, g.profile(e)));
  return Correspondence(g.joint_ptr(), std::move(values));
}

/// Fix(Y) with Y checked against the cpltval premises at runtime; the least
/// and greatest equilibria come from the constructive routes. Throws
/// HypothesisViolated when a game premise or a premise on Y fails, and
/// EquivalenceViolation when Fix(Y) differs from the deviation scan.
inline EquilibriumSet nash_via_fixpoint(const Game& g) {
  if (CheckReport r = check_supermodular(g); !r) {
    throw Error(Errc::kHypothesisViolated, r.detail, r.witness);
  }
  if (CheckReport r = check_increasing_differences(g); !r) {
    throw Error(Errc::kHypothesisViolated, r.detail, r.witness);
  }
  const Correspondence y = aggregate_best_response(g);
  if (CheckReport r = is_ascending(y); !r) {
    throw Error(Errc::kHypothesisViolated, "aggregate best response: " + r.detail, r.witness);
  }
  if (CheckReport r = check_hypotheses(y, Theorem::kCpltval); !r) {
    throw Error(Errc::kHypothesisViolated, "aggregate best response: " + r.detail, r.witness);
  }
  const FixedPointSet fix = fixed_points_brute(y);
  const EquilibriumSet brute = nash_brute(g);
  const FiniteLattice& s = g.joint();
  if (!(fix.members == brute.members)) {
    throw Error(Errc::kEquivalenceViolation,
                "Fix(Y) = " + detail::set_text(s, fix.members) + " but the Nash set is " +
                    detail::set_text(s, brute.members),
                s.names_of(fix.members));
  }
  EquilibriumSet out = detail::equilibrium_set(g, fix.members);
  const Elem lo = least_fixed_point_minsel(y);
  const Elem hi = greatest_fixed_point(y, LfpMethod::kMinSel);
  if (lo != out.least || hi != out.greatest) {
    throw Error(Errc::kEquivalenceViolation,
                "constructive extremes " + s.name(lo) + ", " + s.name(hi) +
                    " differ from the Nash set's least and greatest elements");
  }
  return out;
}

/// When both game premises hold, confirms that the Nash set is nonempty and
/// a complete lattice in its induced order.
inline CheckReport verify_nash_lattice(const Game& g) {
  for (const CheckReport& r : {check_supermodular(g), check_increasing_differences(g)}) {
    if (!r) return {Outcome::kHypothesesNotMet, r.witness, "hypotheses not met: " + r.detail};
  }
  const EquilibriumSet nash = nash_brute(g);
  const FiniteLattice& s = g.joint();
  if (nash.members.empty()) {
    return {Outcome::kConclusionViolated, {}, "conclusion violated: no Nash equilibrium"};
  }
  CheckReport c = is_induced_complete(s.poset(), nash.members);
  if (!c) {
    return {Outcome::kConclusionViolated, c.witness,
            "conclusion violated: Nash set " + detail::set_text(s, nash.members) +
                " is not a complete lattice"};
  }
  return CheckReport::pass("hypotheses hold; Nash = " + detail::set_text(s, nash.members) +
                           "; complete lattice");
}

/// Game on integer boxes: player i's strategies are the points of
/// {0..b_1} x ... x {0..b_m} (names "v1.v2..."), S is `feasible` (every
/// profile when empty) and payoff(i, profile) gives f_i on coordinates.
inline Game topkis_box_game(
    const std::vector<std::string>& players, const std::vector<std::vector<int>>& bounds,
    const std::vector<std::vector<std::vector<int>>>& feasible,
    const std::function<Rational(std::size_t, const std::vector<std::vector<int>>&)>& payoff) {
  if (players.size() != bounds.size()) throw std::invalid_argument("one box per player");
  GameSpec spec;
  spec.players = players;
  std::vector<std::vector<std::vector<int>>> points(players.size());
  auto point_name = [](const std::vector<int>& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "." : "") + std::to_string(p[k]);
    return s;
  };
  for (std::size_t i = 0; i < players.size(); ++i) {
    std::vector<std::vector<int>> pts{{}};
    for (int b : bounds[i]) {
      if (b < 0) throw std::invalid_argument("box bounds must be nonnegative");
      std::vector<std::vector<int>> next;
      for (const auto& p : pts) {
        for (int v = 0; v <= b; ++v) {
          next.push_back(p);
          next.back().push_back(v);
        }
      }
      pts = std::move(next);
    }
    points[i] = pts;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : pts) names.push_back(point_name(p));
    for (const auto& p : pts) {
      for (const auto& q : pts) {
        bool le = p != q;
        for (std::size_t k = 0; k < p.size() && le; ++k) le = p[k] <= q[k];
        if (le) pairs.emplace_back(point_name(p), point_name(q));
      }
    }
    spec.strategies.push_back(make_lattice(names, pairs));
  }
  std::vector<std::vector<std::vector<int>>> rows = feasible;
  if (rows.empty()) {
    rows.push_back({});
    for (std::size_t i = 0; i < players.size(); ++i) {
      std::vector<std::vector<std::vector<int>>> next;
      for (const auto& r : rows) {
        for (const auto& p : points[i]) {
          next.push_back(r);
          next.back().push_back(p);
        }
      }
      rows = std::move(next);
    }
  }
  for (const auto& r : rows) {
    std::vector<std::string> names;
    for (const auto& p : r) names.push_back(point_name(p));
    spec.feasible.push_back(names);
    std::string key;
    for (std::size_t i = 0; i < names.size(); ++i) key += (i ? "," : "") + names[i];
    for (std::size_t i = 0; i < players.size(); ++i) spec.payoffs[players[i]][key] = payoff(i, r);
  }
  return build_game(spec);
}

}  // namespace latfix

#endif  // LATFIX_SUPERMODULAR_HPP
