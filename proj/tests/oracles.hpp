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

// Independent brute-force oracles. They read only the raw order relation
// (a bool matrix) and plain index vectors, never the meet/join tables or any
// checker under test.

#ifndef LATFIX_TESTS_ORACLES_HPP
#define LATFIX_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/lattice.hpp"

namespace latfix::oracle {

using Idx = std::vector<int>;

struct Order {
  int n = 0;
  std::vector<std::vector<bool>> le;

  explicit Order(const Poset& p) : n(static_cast<int>(p.size())), le(n, std::vector<bool>(n)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) le[i][j] = p.le(i, j);
  }
  explicit Order(const FiniteLattice& l) : Order(l.poset()) {}

  // Least element of `within` above every member of `a` (definitional scan).
  std::optional<int> lub_in(const Idx& within, const Idx& a) const {
    Idx ub;
    for (int m : within) {
      bool ok = true;
      for (int x : a) ok = ok && le[x][m];
      if (ok) ub.push_back(m);
    }
    for (int c : ub) {
      bool least = true;
      for (int d : ub) least = least && le[c][d];
      if (least) return c;
    }
    return std::nullopt;
  }

  std::optional<int> glb_in(const Idx& within, const Idx& a) const {
    Idx lb;
    for (int m : within) {
      bool ok = true;
      for (int x : a) ok = ok && le[m][x];
      if (ok) lb.push_back(m);
    }
    for (int c : lb) {
      bool greatest = true;
      for (int d : lb) greatest = greatest && le[d][c];
      if (greatest) return c;
    }
    return std::nullopt;
  }

  Idx all() const {
    Idx v;
    for (int i = 0; i < n; ++i) v.push_back(i);
    return v;
  }

  bool is_chain(const Idx& c) const {
    for (int x : c)
      for (int y : c)
        if (!le[x][y] && !le[y][x]) return false;
    return true;
  }
};

template <typename Fn>
void subsets(const Idx& base, Fn&& fn) {
  const std::uint64_t lim = std::uint64_t{1} << base.size();
  for (std::uint64_t bits = 1; bits < lim; ++bits) {
    Idx s;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (bits >> i & 1U) s.push_back(base[i]);
    fn(s);
  }
}

inline Idx to_idx(const ElemSet& s) { return Idx(s.begin(), s.end()); }

inline bool contains(const Idx& s, int x) {
  for (int y : s)
    if (y == x) return true;
  return false;
}

// Every nonempty A of T has ambient sup and inf in T.
inline bool subcomplete(const Order& o, const Idx& t) {
  bool ok = true;
  subsets(t, [&](const Idx& a) {
    auto s = o.lub_in(o.all(), a);
    auto i = o.glb_in(o.all(), a);
    ok = ok && s && i && contains(t, *s) && contains(t, *i);
  });
  return ok;
}

inline bool chain_subcomplete(const Order& o, const Idx& t) {
  bool ok = true;
  subsets(t, [&](const Idx& c) {
    if (!o.is_chain(c)) return;
    auto s = o.lub_in(o.all(), c);
    auto i = o.glb_in(o.all(), c);
    ok = ok && s && i && contains(t, *s) && contains(t, *i);
  });
  return ok;
}

// Complete lattice in the induced order, by exhaustive subset scan.
inline bool induced_complete(const Order& o, const Idx& s) {
  if (s.empty()) return false;
  bool ok = true;
  subsets(s, [&](const Idx& v) { ok = ok && o.lub_in(s, v) && o.glb_in(s, v); });
  return ok;
}

inline Idx fixed_points(const Correspondence& f) {
  Idx out;
  for (int s = 0; s < static_cast<int>(f.size()); ++s)
    for (Elem y : f.value(s))
      if (static_cast<int>(y) == s) out.push_back(s);
  return out;
}

// Quantifier scan of the (V-)ascending conditions over definitional bounds:
// x <= x' (x < x' when `strict`), meets into F(x) when `lower`, joins into
// F(x') when `upper`.
inline bool closed(const Correspondence& f, bool strict, bool lower, bool upper) {
  Order o(f.lattice());
  for (int x = 0; x < o.n; ++x) {
    for (int xp = 0; xp < o.n; ++xp) {
      if (!o.le[x][xp] || (strict && x == xp)) continue;
      for (Elem y : f.value(x)) {
        for (Elem yp : f.value(xp)) {
          const Idx pair{static_cast<int>(y), static_cast<int>(yp)};
          if (lower && !f.value(x).contains(*o.glb_in(o.all(), pair))) return false;
          if (upper && !f.value(xp).contains(*o.lub_in(o.all(), pair))) return false;
        }
      }
    }
  }
  return true;
}

inline std::optional<int> least(const Order& o, const Idx& s) {
  for (int c : s) {
    bool ok = true;
    for (int d : s) ok = ok && o.le[c][d];
    if (ok) return c;
  }
  return std::nullopt;
}

inline std::optional<int> greatest(const Order& o, const Idx& s) {
  for (int c : s) {
    bool ok = true;
    for (int d : s) ok = ok && o.le[d][c];
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace latfix::oracle

#endif  // LATFIX_TESTS_ORACLES_HPP
