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

// Finite games whose feasible joint profiles S form a sublattice of the
// product of the players' strategy lattices, not necessarily the whole
// product.

#ifndef LATFIX_GAME_HPP
#define LATFIX_GAME_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latfix/error.hpp"
#include "latfix/lattice.hpp"
#include "latfix/rational.hpp"

namespace latfix {

using Profile = std::vector<Elem>;

/// Names-based description of a game, as read from a document.
struct GameSpec {
  std::vector<std::string> players;
  std::vector<LatticePtr> strategies;  // one per player, same order
  std::vector<std::vector<std::string>> feasible;
  // payoffs[player][profile key] where the key joins strategy names with ','.
  std::map<std::string, std::map<std::string, Rational>> payoffs;
};

class Game {
 public:
  std::size_t num_players() const noexcept { return players_.size(); }
  const std::vector<std::string>& players() const noexcept { return players_; }
  const FiniteLattice& strategies(std::size_t i) const { return *strategies_.at(i); }
  const LatticePtr& strategies_ptr(std::size_t i) const { return strategies_.at(i); }

  /// S as a lattice under the componentwise order; element e is profile(e).
  const FiniteLattice& joint() const noexcept { return *joint_; }
  const LatticePtr& joint_ptr() const noexcept { return joint_; }
  std::size_t num_profiles() const noexcept { return profiles_.size(); }
  const Profile& profile(Elem e) const { return profiles_.at(e); }

  std::optional<Elem> find(const Profile& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Rational& payoff(std::size_t i, Elem e) const { return payoffs_.at(i).at(e); }

  /// "(x1,x2,...)"
  std::string profile_name(const Profile& p) const {
    return "(" + key(p) + ")";
  }
  /// "x1,x2,..." as used in payoff tables.
  std::string key(const Profile& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ',';
      s += strategies_[i]->name(p[i]);
    }
    return s;
  }

  /// Componentwise order on full profiles.
  bool le(const Profile& a, const Profile& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!strategies_[i]->le(a[i], b[i])) return false;
    return true;
  }
  /// Componentwise order ignoring player i.
  bool le_others(std::size_t i, const Profile& a, const Profile& b) const {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i && !strategies_[j]->le(a[j], b[j])) return false;
    return true;
  }

  /// Same game with f_i replaced by alpha * f_i + beta; alpha must be positive.
  Game affine_transform(std::size_t i, const Rational& alpha, const Rational& beta) const {
    if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
    Game g = *this;
    for (Rational& v : g.payoffs_.at(i)) v = alpha * v + beta;
    return g;
  }

  GameSpec spec() const {
    GameSpec s;
    s.players = players_;
    s.strategies = strategies_;
    for (const Profile& p : profiles_) {
      std::vector<std::string> row;
      for (std::size_t i = 0; i < p.size(); ++i) row.push_back(strategies_[i]->name(p[i]));
      s.feasible.push_back(row);
    }
    for (std::size_t i = 0; i < players_.size(); ++i)
      for (Elem e = 0; e < profiles_.size(); ++e) s.payoffs[players_[i]][key(profiles_[e])] = payoffs_[i][e];
    return s;
  }

  friend bool operator==(const Game& a, const Game& b) {
    if (a.players_ != b.players_) return false;
    for (std::size_t i = 0; i < a.num_players(); ++i)
      if (!(a.strategies(i) == b.strategies(i))) return false;
    const GameSpec sa = a.spec(), sb = b.spec();
    const std::set<std::vector<std::string>> fa(sa.feasible.begin(), sa.feasible.end());
    const std::set<std::vector<std::string>> fb(sb.feasible.begin(), sb.feasible.end());
    return fa == fb && sa.payoffs == sb.payoffs;
  }

 private:
  friend Game build_game(const GameSpec&);

  std::vector<std::string> players_;
  std::vector<LatticePtr> strategies_;
  std::vector<Profile> profiles_;
  std::map<Profile, Elem> index_;
  LatticePtr joint_;
  std::vector<std::vector<Rational>> payoffs_;
};

/// Validates a game description: S nonempty, closed under componentwise
/// meet and join, every projection onto S_i surjective, and a payoff for
/// every player at exactly the profiles of S.
inline Game build_game(const GameSpec& spec) {
  const std::size_t n = spec.players.size();
  if (n == 0) throw Error(Errc::kParseError, "a game needs at least one player");
  if (spec.strategies.size() != n) {
    throw Error(Errc::kParseError, "one strategy lattice per player is required");
  }
  Game g;
  g.players_ = spec.players;
  g.strategies_ = spec.strategies;
  std::set<std::string> seen_players;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen_players.insert(spec.players[i]).second) {
      throw Error(Errc::kDuplicateElement, "duplicate player '" + spec.players[i] + "'",
                  {spec.players[i]});
    }
    if (!spec.strategies[i]) throw std::invalid_argument("missing strategy lattice");
  }

  std::set<Profile> rows;
  for (const auto& row : spec.feasible) {
    if (row.size() != n) {
      throw Error(Errc::kParseError, "feasible profile has " + std::to_string(row.size()) +
                                         " entries, expected " + std::to_string(n));
    }
    Profile p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = spec.strategies[i]->index_of(row[i]);
    if (!rows.insert(p).second) {
      throw Error(Errc::kDuplicateElement, "duplicate feasible profile " + g.profile_name(p),
                  {g.key(p)});
    }
  }
  if (rows.empty()) throw Error(Errc::kEmptySubset, "feasible set S is empty");
  g.profiles_.assign(rows.begin(), rows.end());
  for (Elem e = 0; e < g.profiles_.size(); ++e) g.index_[g.profiles_[e]] = e;

  for (const Profile& p : g.profiles_) {
    for (const Profile& q : g.profiles_) {
      Profile lo(n), hi(n);
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = g.strategies_[i]->meet(p[i], q[i]);
        hi[i] = g.strategies_[i]->join(p[i], q[i]);
      }
      for (const Profile* r : {&lo, &hi}) {
        if (!g.index_.count(*r)) {
          throw Error(Errc::kFeasibleNotSublattice,
                      std::string(r == &lo ? "meet" : "join") + " of " + g.profile_name(p) +
                          " and " + g.profile_name(q) + " is " + g.profile_name(*r) +
                          ", which is not feasible",
                      {g.key(p), g.key(q)});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> hit(g.strategies_[i]->size(), false);
    for (const Profile& p : g.profiles_) hit[p[i]] = true;
    for (Elem s = 0; s < hit.size(); ++s) {
      if (!hit[s]) {
        throw Error(Errc::kProjectionNotSurjective,
                    "no feasible profile gives player " + g.players_[i] + " strategy " +
                        g.strategies_[i]->name(s),
                    {g.players_[i], g.strategies_[i]->name(s)});
      }
    }
  }

  for (const auto& [player, table] : spec.payoffs) {
    if (!seen_players.count(player)) {
      throw Error(Errc::kUnknownElement, "payoffs for unknown player '" + player + "'", {player});
    }
    for (const auto& [key, value] : table) {
      bool feasible = false;
      for (const Profile& p : g.profiles_) feasible = feasible || g.key(p) == key;
      if (!feasible) {
        throw Error(Errc::kInfeasibleProfile,
                    "payoff for " + player + " at (" + key + "), which is not in S", {player, key});
      }
    }
  }
  g.payoffs_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    auto table = spec.payoffs.find(spec.players[i]);
    for (const Profile& p : g.profiles_) {
      if (table == spec.payoffs.end() || !table->second.count(g.key(p))) {
        throw Error(Errc::kPayoffMissing,
                    "no payoff for " + spec.players[i] + " at " + g.profile_name(p),
                    {spec.players[i], g.key(p)});
      }
      g.payoffs_[i].push_back(table->second.at(g.key(p)));
    }
  }

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Profile& p : g.profiles_) names.push_back(g.profile_name(p));
  for (const Profile& p : g.profiles_)
    for (const Profile& q : g.profiles_)
      if (p != q && g.le(p, q)) pairs.emplace_back(g.profile_name(p), g.profile_name(q));
  g.joint_ = make_lattice(names, pairs);
  // make_lattice keeps element order, so joint element e is profiles_[e].
  return g;
}

}  // namespace latfix

#endif  // LATFIX_GAME_HPP
