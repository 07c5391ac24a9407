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

// Seeded supermodular games and the corpus run over them.
//
// Strategy lattices are chains "0" < ... < "k-1" (k <= 4) or the diamond
// 0 < a, b < 1, embedded in {0,1,2,3} and {0,1}^2 respectively. Writing z
// for the concatenated coordinates of a profile, player i's payoff is
//
//   f_i = sum w_pq z_p z_q + sum_p u_p(z_p) + v_i(x_{-i})
//
// with w_pq >= 0 over pairs touching i's own coordinates and u_p over i's
// own coordinates. Every such f_i is supermodular in x_i and has increasing
// differences, on any feasible sublattice.

#ifndef LATFIX_GAME_LAB_HPP
#define LATFIX_GAME_LAB_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latfix/game.hpp"
#include "latfix/rng.hpp"
#include "latfix/supermodular.hpp"

namespace latfix {

struct GameGenConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_players = 3;
  std::size_t max_strategies = 4;
};

namespace detail {

inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return Rational(rng.between(lo, hi), rng.between(1, 3));
}

}  // namespace detail

inline Game gen_game(const GameGenConfig& cfg) {
  if (cfg.max_players < 1 || cfg.max_strategies < 1) {
    throw std::invalid_argument("max_players and max_strategies must be >= 1");
  }
  Rng rng(derive(cfg.seed, 2));
  const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(cfg.max_players)));
  GameSpec spec;
  std::vector<std::vector<std::vector<int>>> coords(n);  // coords[i][strategy]
  for (std::size_t i = 0; i < n; ++i) {
    spec.players.push_back("p" + std::to_string(i + 1));
    if (cfg.max_strategies >= 4 && rng.chance(1, 4)) {
      spec.strategies.push_back(
          make_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
      coords[i] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    } else {
      const int k = static_cast<int>(rng.between(1, static_cast<std::int64_t>(cfg.max_strategies)));
      std::vector<std::string> names;
      std::vector<std::pair<std::string, std::string>> pairs;
      for (int v = 0; v < k; ++v) {
        names.push_back(std::to_string(v));
        if (v) pairs.emplace_back(std::to_string(v - 1), std::to_string(v));
        coords[i].push_back({v});
      }
      spec.strategies.push_back(make_lattice(names, pairs));
    }
  }

  std::vector<Profile> all{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Profile> next;
    for (const Profile& p : all) {
      for (Elem s = 0; s < spec.strategies[i]->size(); ++s) {
        next.push_back(p);
        next.back().push_back(s);
      }
    }
    all = std::move(next);
  }
  std::set<Profile> feasible;
  if (rng.chance(1, 3)) {
    feasible.insert(all.begin(), all.end());
  } else {
    auto close = [&] {
      for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Profile> cur(feasible.begin(), feasible.end());
        for (const Profile& p : cur) {
          for (const Profile& q : cur) {
            Profile lo(n), hi(n);
            for (std::size_t i = 0; i < n; ++i) {
              lo[i] = spec.strategies[i]->meet(p[i], q[i]);
              hi[i] = spec.strategies[i]->join(p[i], q[i]);
            }
            grew |= feasible.insert(lo).second;
            grew |= feasible.insert(hi).second;
          }
        }
      }
    };
    const auto seeds = rng.between(1, 3);
    for (std::int64_t k = 0; k < seeds; ++k) feasible.insert(all[rng.below(all.size())]);
    close();
    // Cover every strategy of every player, closing after each addition.
    for (std::size_t i = 0; i < n; ++i) {
      for (Elem s = 0; s < spec.strategies[i]->size(); ++s) {
        bool hit = false;
        for (const Profile& p : feasible) hit = hit || p[i] == s;
        if (hit) continue;
        std::vector<Profile> with_s;
        for (const Profile& p : all)
          if (p[i] == s) with_s.push_back(p);
        feasible.insert(with_s[rng.below(with_s.size())]);
        close();
      }
    }
  }

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + coords[i][0].size();
  const std::size_t dim = offset[n];
  auto z_of = [&](const Profile& p) {
    std::vector<int> z;
    for (std::size_t i = 0; i < n; ++i) z.insert(z.end(), coords[i][p[i]].begin(), coords[i][p[i]].end());
    return z;
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto own = [&](std::size_t c) { return c >= offset[i] && c < offset[i + 1]; };
    std::vector<std::vector<Rational>> w(dim, std::vector<Rational>(dim));
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = p + 1; q < dim; ++q)
        if (own(p) || own(q)) w[p][q] = detail::random_rational(rng, 0, 3);
    std::map<std::pair<std::size_t, int>, Rational> u;
    for (std::size_t c = offset[i]; c < offset[i + 1]; ++c)
      for (int v = 0; v < 4; ++v) u[{c, v}] = detail::random_rational(rng, -4, 4);
    std::map<Profile, Rational> v;
    for (const Profile& p : feasible) {
      Profile others = p;
      others[i] = 0;
      if (!v.count(others)) v[others] = detail::random_rational(rng, -3, 3);
    }
    for (const Profile& p : feasible) {
      const std::vector<int> z = z_of(p);
      Rational f;
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) f += w[a][b] * Rational(z[a] * z[b]);
      for (std::size_t c = offset[i]; c < offset[i + 1]; ++c) f += u[{c, z[c]}];
      Profile others = p;
      others[i] = 0;
      f += v[others];
      std::vector<std::string> row;
      std::string key;
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(spec.strategies[j]->name(p[j]));
        key += (j ? "," : "") + row.back();
      }
      if (i == 0) spec.feasible.push_back(row);
      spec.payoffs[spec.players[i]][key] = f;
    }
  }
  return build_game(spec);
}

struct GameWitness {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  Game game;
  std::string detail;
};

struct GameSuiteReport {
  GameGenConfig config;
  std::uint64_t games = 0;
  std::uint64_t product_form = 0;
  std::uint64_t validator_failures = 0;
  // Y failing a premise of the complete-values theorem (HypothesisViolated).
  std::uint64_t fixpoint_premise_failures = 0;
  std::uint64_t equivalence_violations = 0;
  std::uint64_t empty_or_incomplete = 0;
  std::uint64_t affine_violations = 0;
  std::uint64_t nash_profiles = 0;
  std::vector<GameWitness> witnesses;

  bool passed() const noexcept {
    return validator_failures == 0 && fixpoint_premise_failures == 0 &&
           equivalence_violations == 0 && empty_or_incomplete == 0 && affine_violations == 0;
  }
};

/// For each of `count` seeded games: both validators, the Nash set by
/// deviation scan and by Fix(Y), nonemptiness and completeness, and
/// invariance under positive affine payoff maps. Each player gets its own
/// map for the Nash set and section best responses; one common scale is
/// applied to every player for the aggregate argmax sets Y(x).
inline GameSuiteReport run_game_suite(const GameGenConfig& cfg, std::uint64_t count) {
  GameSuiteReport rep;
  rep.config = cfg;
  for (std::uint64_t k = 0; k < count; ++k) {
    GameGenConfig gc = cfg;
    gc.seed = derive(cfg.seed, k);
    const Game g = gen_game(gc);
    ++rep.games;
    std::size_t product = 1;
    for (std::size_t i = 0; i < g.num_players(); ++i) product *= g.strategies(i).size();
    rep.product_form += g.num_profiles() == product;
    auto witness = [&](const std::string& d) { rep.witnesses.push_back({k, gc.seed, g, d}); };

    CheckReport sm = check_supermodular(g), id = check_increasing_differences(g);
    if (!sm || !id) {
      ++rep.validator_failures;
      witness(!sm ? sm.detail : id.detail);
      continue;
    }
    const EquilibriumSet brute = nash_brute(g);
    rep.nash_profiles += brute.members.size();
    if (brute.members.empty() || !is_induced_complete(g.joint().poset(), brute.members)) {
      ++rep.empty_or_incomplete;
      witness("Nash set " + detail::set_text(g.joint(), brute.members) +
              " is empty or not a complete lattice");
    }
    try {
      nash_via_fixpoint(g);
    } catch (const Error& e) {
      if (e.code() == Errc::kHypothesisViolated) {
        ++rep.fixpoint_premise_failures;
      } else if (e.code() == Errc::kEquivalenceViolation) {
        ++rep.equivalence_violations;
      } else {
        throw;
      }
      witness(e.what());
    }

    Rng rng(derive(gc.seed, 3));
    Game per_player = g, common = g;
    const Rational scale = Rational(rng.between(1, 5), rng.between(1, 5));
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      const Rational alpha(rng.between(1, 5), rng.between(1, 5));
      const Rational beta = detail::random_rational(rng, -5, 5);
      per_player = per_player.affine_transform(i, alpha, beta);
      common = common.affine_transform(i, scale, detail::random_rational(rng, -5, 5));
    }
    bool same = nash_brute(per_player).members == brute.members;
    for (Elem e = 0; e < g.num_profiles() && same; ++e) {
      const Profile& x = g.profile(e);
      for (std::size_t i = 0; i < g.num_players(); ++i) {
        same = same && section_best_responses(per_player, i, x) == section_best_responses(g, i, x);
      }
      same = same && aggregate_argmax(common, x) == aggregate_argmax(g, x);
    }
    if (!same) {
      ++rep.affine_violations;
      witness("a positive affine payoff map changed an argmax set");
    }
  }
  return rep;
}

}  // namespace latfix

#endif  // LATFIX_GAME_LAB_HPP
