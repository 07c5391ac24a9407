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

#ifndef LATFIX_INDUCED_HPP
#define LATFIX_INDUCED_HPP

#include <optional>

#include "latfix/elem_set.hpp"
#include "latfix/poset.hpp"
#include "latfix/report.hpp"

// Bounds taken inside a subset under the order it inherits. These differ
// from the ambient meet/join whenever the subset is not a sublattice, e.g.
// {0,a,b,2} in 0 <= a,b <= 1 < 2 where a and b join to 2 inside the set but
// to 1 in the ambient lattice.

namespace latfix {

/// Least element of `within` lying above every member of `u`.
inline std::optional<Elem> induced_sup(const Poset& p, const ElemSet& within,
                                       const ElemSet& u) {
  ElemSet upper(within.universe());
  for (Elem m : within) {
    bool above = true;
    for (Elem x : u) {
      if (!p.le(x, m)) { above = false; break; }
    }
    if (above) upper.insert(m);
  }
  return p.least_of(upper);
}

inline std::optional<Elem> induced_inf(const Poset& p, const ElemSet& within,
                                       const ElemSet& u) {
  ElemSet lower(within.universe());
  for (Elem m : within) {
    bool below = true;
    for (Elem x : u) {
      if (!p.le(m, x)) { below = false; break; }
    }
    if (below) lower.insert(m);
  }
  return p.greatest_of(lower);
}

/// Is `s` a nonempty lattice in its induced order? Pairwise bounds suffice:
/// a nonempty finite lattice is complete.
inline CheckReport is_induced_lattice(const Poset& p, const ElemSet& s) {
  if (s.empty()) return CheckReport::fail({}, "the set is empty");
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      ElemSet pair(s.universe(), {m[i], m[j]});
      if (!induced_sup(p, s, pair)) {
        return CheckReport::fail({p.name(m[i]), p.name(m[j])},
                                 p.name(m[i]) + " and " + p.name(m[j]) +
                                     " have no least upper bound inside the set");
      }
      if (!induced_inf(p, s, pair)) {
        return CheckReport::fail({p.name(m[i]), p.name(m[j])},
                                 p.name(m[i]) + " and " + p.name(m[j]) +
                                     " have no greatest lower bound inside the set");
      }
    }
  }
  return CheckReport::pass("a nonempty lattice in the induced order");
}

/// Complete-lattice check in the induced order. Enumerates every nonempty
/// subset when |s| <= kExhaustiveCap, otherwise uses the pairwise test.
inline CheckReport is_induced_complete(const Poset& p, const ElemSet& s) {
  if (s.empty()) return CheckReport::fail({}, "the set is empty");
  if (s.size() > kExhaustiveCap) return is_induced_lattice(p, s);
  CheckReport out = CheckReport::pass("every nonempty subset has induced bounds");
  for_each_nonempty_subset(s, [&](const ElemSet& v) {
    bool has_sup = induced_sup(p, s, v).has_value();
    bool has_inf = induced_inf(p, s, v).has_value();
    if (has_sup && has_inf) return true;
    out = CheckReport::fail(p.names_of(v),
                            std::string("subset has no ") +
                                (has_sup ? "greatest lower" : "least upper") +
                                " bound inside the set");
    return false;
  });
  return out;
}

}  // namespace latfix

#endif  // LATFIX_INDUCED_HPP
