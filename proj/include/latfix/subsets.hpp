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

#ifndef LATFIX_SUBSETS_HPP
#define LATFIX_SUBSETS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/induced.hpp"
#include "latfix/lattice.hpp"
#include "latfix/poset.hpp"
#include "latfix/report.hpp"

// Subset properties of a finite lattice (sublattice, subcomplete,
// chain-subcomplete, join-complete) and executable forms of two lemmas about
// them: a join-complete poset with a least element is complete, and
// Veinott's closure lemma for infima (suprema) of a set A landing in B.

namespace latfix {

enum class Direction { kUp, kDown, kBoth };

constexpr std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kBoth: return "both";
  }
  return "?";
}

namespace detail {

inline void require_nonempty(const ElemSet& t, const char* what) {
  if (t.empty()) throw Error(Errc::kEmptySubset, std::string(what) + " must be nonempty");
}

}  // namespace detail

/// Closed under pairwise meet and join of `lat`.
inline CheckReport is_sublattice(const FiniteLattice& lat, const ElemSet& t) {
  require_same_universe(lat, t);
  detail::require_nonempty(t, "T");
  const auto& m = t.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Elem x = m[i], y = m[j];
      const Elem lo = lat.meet(x, y), hi = lat.join(x, y);
      if (!t.contains(lo)) {
        return CheckReport::fail({lat.name(x), lat.name(y)},
                                 "meet(" + lat.name(x) + "," + lat.name(y) + ")=" +
                                     lat.name(lo) + " is not in the set");
      }
      if (!t.contains(hi)) {
        return CheckReport::fail({lat.name(x), lat.name(y)},
                                 "join(" + lat.name(x) + "," + lat.name(y) + ")=" +
                                     lat.name(hi) + " is not in the set");
      }
    }
  }
  return CheckReport::pass("closed under meet and join");
}

/// Every nonempty A of T has its ambient sup and inf in T. For finite T this
/// is exactly closure under binary meet and join.
inline CheckReport is_subcomplete(const FiniteLattice& lat, const ElemSet& t) {
  CheckReport r = is_sublattice(lat, t);
  if (r) r.detail = "subcomplete: closed under meet and join, hence under finite sup/inf";
  return r;
}

/// Every nonempty chain C of T has sup_L(C) in T (up) / inf_L(C) in T (down).
/// Chains are enumerated for |T| <= kExhaustiveCap; above the cap the answer
/// follows from finiteness (a finite chain contains its own max and min).
inline CheckReport is_chain_subcomplete(const FiniteLattice& lat, const ElemSet& t,
                                        Direction dir = Direction::kBoth) {
  require_same_universe(lat, t);
  detail::require_nonempty(t, "T");
  if (t.size() > kExhaustiveCap) {
    return CheckReport::pass("finite chains contain their endpoints");
  }
  CheckReport out = CheckReport::pass("every chain has its sup and inf in the set");
  for_each_nonempty_subset(t, [&](const ElemSet& c) {
    if (!lat.poset().is_chain(c)) return true;
    if (dir != Direction::kDown && !t.contains(sup_subset(lat, c))) {
      out = CheckReport::fail(lat.names_of(c), "chain supremum escapes the set");
      return false;
    }
    if (dir != Direction::kUp && !t.contains(inf_subset(lat, c))) {
      out = CheckReport::fail(lat.names_of(c), "chain infimum escapes the set");
      return false;
    }
    return true;
  });
  return out;
}

/// Every nonempty subset of the poset has a least upper bound in it.
/// Exhaustive up to kExhaustiveCap elements; beyond that, pairwise joins
/// plus a top element.
inline CheckReport is_join_complete(const Poset& p) {
  const ElemSet all = p.all();
  if (p.size() <= kExhaustiveCap) {
    CheckReport out = CheckReport::pass("every nonempty subset has a supremum");
    for_each_nonempty_subset(all, [&](const ElemSet& a) {
      if (induced_sup(p, all, a)) return true;
      out = CheckReport::fail(p.names_of(a), "subset has no least upper bound");
      return false;
    });
    return out;
  }
  if (!p.greatest_of(all)) {
    return CheckReport::fail(p.names(), "the poset has no greatest element");
  }
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = x + 1; y < p.size(); ++y) {
      if (!induced_sup(p, all, ElemSet(p.size(), {x, y}))) {
        return CheckReport::fail({p.name(x), p.name(y)}, "pair has no least upper bound");
      }
    }
  }
  return CheckReport::pass("pairwise joins and a top element exist");
}

/// A join-complete poset with a least element is a complete lattice: checks
/// the premises, then that every nonempty subset also has an infimum.
inline CheckReport verify_lemma_jointmin(const Poset& p) {
  const ElemSet all = p.all();
  CheckReport jc = is_join_complete(p);
  if (!jc) {
    return {Outcome::kHypothesesNotMet, jc.witness,
            "hypotheses not met: not join-complete (" + jc.detail + ")"};
  }
  if (!p.least_of(all)) {
    std::vector<std::string> minimal;
    for (Elem x : all) {
      bool is_min = true;
      for (Elem y : all) {
        if (p.lt(y, x)) { is_min = false; break; }
      }
      if (is_min) minimal.push_back(p.name(x));
    }
    return {Outcome::kHypothesesNotMet, minimal,
            "hypotheses not met: no least element"};
  }
  CheckReport conclusion = CheckReport::pass("conclusion verified: every nonempty subset has an infimum");
  auto check = [&](const ElemSet& a) {
    if (induced_inf(p, all, a)) return true;
    conclusion = {Outcome::kConclusionViolated, p.names_of(a),
                  "conclusion violated: subset has no infimum"};
    return false;
  };
  if (p.size() <= kExhaustiveCap) {
    for_each_nonempty_subset(all, check);
  } else {
    for (Elem x = 0; x < p.size() && conclusion.holds(); ++x) {
      for (Elem y = x + 1; y < p.size() && conclusion.holds(); ++y) {
        check(ElemSet(p.size(), {x, y}));
      }
    }
  }
  return conclusion;
}

/// Veinott's lemma on a finite lattice. Down: if B is chain-subcomplete
/// downwards, x is in A and B, and meet(a, b) lies in B for every a in A\{x}
/// and b in B, then inf(A) lies in B. Up is the order dual.
inline CheckReport veinott_check(const FiniteLattice& lat, const ElemSet& a,
                                 const ElemSet& b, Elem x, Direction dir) {
  require_same_universe(lat, a);
  require_same_universe(lat, b);
  detail::require_nonempty(a, "A");
  detail::require_nonempty(b, "B");
  if (dir == Direction::kBoth) {
    throw std::invalid_argument("veinott_check takes direction up or down");
  }
  if (!a.contains(x) || !b.contains(x)) {
    throw Error(Errc::kXNotInIntersection,
                "'" + lat.name(x) + "' is not in both A and B", {lat.name(x)});
  }
  const bool down = dir == Direction::kDown;
  CheckReport csc = is_chain_subcomplete(lat, b, dir);
  if (!csc) {
    return {Outcome::kHypothesesNotMet, csc.witness,
            "hypotheses not met: B is not chain-subcomplete " +
                std::string(direction_name(dir))};
  }
  for (Elem ai : a) {
    if (ai == x) continue;
    for (Elem bi : b) {
      const Elem r = down ? lat.meet(ai, bi) : lat.join(ai, bi);
      if (!b.contains(r)) {
        return {Outcome::kHypothesesNotMet,
                {lat.name(ai), lat.name(bi)},
                std::string("hypotheses not met: ") + (down ? "meet(" : "join(") +
                    lat.name(ai) + "," + lat.name(bi) + ")=" + lat.name(r) +
                    " is not in B"};
      }
    }
  }
  const Elem bound = down ? inf_subset(lat, a) : sup_subset(lat, a);
  if (!b.contains(bound)) {
    return {Outcome::kConclusionViolated, lat.names_of(a),
            std::string("conclusion violated: ") + (down ? "inf" : "sup") + "(A)=" +
                lat.name(bound) + " is not in B"};
  }
  return CheckReport::pass(std::string("conclusion verified: ") + (down ? "inf" : "sup") +
                           "(A)=" + lat.name(bound) + " is in B");
}

}  // namespace latfix

#endif  // LATFIX_SUBSETS_HPP
