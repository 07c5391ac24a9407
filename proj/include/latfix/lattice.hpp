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

#ifndef LATFIX_LATTICE_HPP
#define LATFIX_LATTICE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/poset.hpp"

namespace latfix {

/// A finite lattice with precomputed meet and join tables. Every query
/// after construction is a table lookup. Immutable; share it through
/// LatticePtr.
class FiniteLattice {
 public:
  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& name(Elem e) const { return poset_.name(e); }
  Elem index_of(const std::string& n) const { return poset_.index_of(n); }
  bool le(Elem x, Elem y) const noexcept { return poset_.le(x, y); }
  bool lt(Elem x, Elem y) const noexcept { return poset_.lt(x, y); }

  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * size() + y]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  ElemSet all() const { return poset_.all(); }
  ElemSet subset(const std::vector<std::string>& names) const {
    return poset_.subset(names);
  }
  std::vector<std::string> names_of(const ElemSet& s) const {
    return poset_.names_of(s);
  }

  /// Order-reversed lattice over the same element indices: meet and join
  /// swap, as do top and bottom.
  FiniteLattice dual() const {
    FiniteLattice d;
    d.poset_ = poset_.dual();
    d.meet_ = join_;
    d.join_ = meet_;
    d.bottom_ = top_;
    d.top_ = bottom_;
    return d;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  friend FiniteLattice as_lattice(const Poset& p);

  Poset poset_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Fills the meet/join tables; throws NotALattice naming the first pair
/// without a greatest lower or least upper bound.
inline FiniteLattice as_lattice(const Poset& p) {
  const auto n = static_cast<Elem>(p.size());
  FiniteLattice lat;
  lat.poset_ = p;
  lat.meet_.assign(std::size_t{n} * n, 0);
  lat.join_.assign(std::size_t{n} * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      ElemSet lower(n), upper(n);
      for (Elem z = 0; z < n; ++z) {
        if (p.le(z, x) && p.le(z, y)) lower.insert(z);
        if (p.le(x, z) && p.le(y, z)) upper.insert(z);
      }
      auto m = p.greatest_of(lower);
      if (!m) {
        throw Error(Errc::kNotALattice,
                    "'" + p.name(x) + "' and '" + p.name(y) +
                        "' have no greatest lower bound (meet missing)",
                    {p.name(x), p.name(y), "meet"});
      }
      auto j = p.least_of(upper);
      if (!j) {
        throw Error(Errc::kNotALattice,
                    "'" + p.name(x) + "' and '" + p.name(y) +
                        "' have no least upper bound (join missing)",
                    {p.name(x), p.name(y), "join"});
      }
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = *m;
      lat.join_[x * n + y] = lat.join_[y * n + x] = *j;
    }
  }
  ElemSet everything = p.all();
  lat.bottom_ = *p.least_of(everything);
  lat.top_ = *p.greatest_of(everything);
  return lat;
}

inline LatticePtr make_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  return std::make_shared<const FiniteLattice>(as_lattice(build_poset(elements, pairs)));
}

inline void require_same_universe(const FiniteLattice& lat, const ElemSet& s) {
  if (s.universe() != lat.size()) {
    throw Error(Errc::kForeignSubset, "subset does not belong to this lattice");
  }
}

/// Least upper bound in the lattice; the empty set maps to bottom.
inline Elem sup_subset(const FiniteLattice& lat, const ElemSet& a) {
  require_same_universe(lat, a);
  Elem acc = lat.bottom();
  for (Elem e : a) acc = lat.join(acc, e);
  return acc;
}

/// Greatest lower bound in the lattice; the empty set maps to top.
inline Elem inf_subset(const FiniteLattice& lat, const ElemSet& a) {
  require_same_universe(lat, a);
  Elem acc = lat.top();
  for (Elem e : a) acc = lat.meet(acc, e);
  return acc;
}

/// A sublattice of a parent lattice rebuilt as a lattice of its own, with
/// index maps in both directions.
struct Restriction {
  LatticePtr lattice;
  std::vector<Elem> to_parent;
  std::vector<std::optional<Elem>> from_parent;
};

/// Restricts `lat` to the members of `s` under the induced order. Throws
/// NotALattice when the induced order is not a lattice.
inline Restriction restrict_to(const FiniteLattice& lat, const ElemSet& s) {
  require_same_universe(lat, s);
  if (s.empty()) throw Error(Errc::kEmptySubset, "cannot restrict to the empty set");
  Restriction r;
  r.from_parent.assign(lat.size(), std::nullopt);
  std::vector<std::string> names;
  for (Elem e : s) {
    r.from_parent[e] = static_cast<Elem>(r.to_parent.size());
    r.to_parent.push_back(e);
    names.push_back(lat.name(e));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (Elem x : s) {
    for (Elem y : s) {
      if (lat.lt(x, y)) pairs.emplace_back(lat.name(x), lat.name(y));
    }
  }
  r.lattice = make_lattice(names, pairs);
  return r;
}

/// The closed interval [lo, top].
inline ElemSet upper_interval(const FiniteLattice& lat, Elem lo) {
  ElemSet s(lat.size());
  for (Elem e = 0; e < lat.size(); ++e) {
    if (lat.le(lo, e)) s.insert(e);
  }
  return s;
}

}  // namespace latfix

#endif  // LATFIX_LATTICE_HPP
