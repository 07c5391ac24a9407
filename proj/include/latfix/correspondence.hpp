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

#ifndef LATFIX_CORRESPONDENCE_HPP
#define LATFIX_CORRESPONDENCE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/lattice.hpp"
#include "latfix/report.hpp"

namespace latfix {

/// A set-valued self-map F of a finite lattice. Values are nonempty unless
/// the correspondence was built with make_relaxed (counterexample probing).
class Correspondence {
 public:
  Correspondence(LatticePtr lattice, std::vector<ElemSet> values)
      : Correspondence(std::move(lattice), std::move(values), false) {}

  /// Like the constructor, but empty values are accepted.
  static Correspondence make_relaxed(LatticePtr lattice, std::vector<ElemSet> values) {
    return Correspondence(std::move(lattice), std::move(values), true);
  }

  static Correspondence from_names(
      LatticePtr lattice, const std::map<std::string, std::vector<std::string>>& map) {
    std::vector<ElemSet> values(lattice->size(), ElemSet(lattice->size()));
    std::vector<bool> seen(lattice->size(), false);
    for (const auto& [key, members] : map) {
      Elem x = lattice->index_of(key);
      seen[x] = true;
      values[x] = lattice->subset(members);
    }
    for (Elem x = 0; x < lattice->size(); ++x) {
      if (!seen[x]) {
        throw Error(Errc::kEmptyValue, "no value given for '" + lattice->name(x) + "'",
                    {lattice->name(x)});
      }
    }
    return Correspondence(std::move(lattice), std::move(values));
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const ElemSet& value(Elem x) const { return values_.at(x); }
  const std::vector<ElemSet>& values() const noexcept { return values_; }
  bool relaxed() const noexcept { return relaxed_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool is_fixed(Elem x) const { return values_.at(x).contains(x); }

  /// The same value sets viewed over the dual lattice: upper properties of
  /// this map become lower properties of the result.
  Correspondence dual() const {
    return Correspondence(std::make_shared<const FiniteLattice>(lattice_->dual()),
                          values_, relaxed_);
  }

  friend bool operator==(const Correspondence& a, const Correspondence& b) {
    if (!(*a.lattice_ == *b.lattice_)) return false;
    for (Elem x = 0; x < a.size(); ++x) {
      Elem bx = b.lattice_->index_of(a.lattice_->name(x));
      auto an = a.lattice_->names_of(a.values_[x]);
      auto bn = b.lattice_->names_of(b.values_[bx]);
      std::sort(an.begin(), an.end());
      std::sort(bn.begin(), bn.end());
      if (an != bn) return false;
    }
    return true;
  }

 private:
  Correspondence(LatticePtr lattice, std::vector<ElemSet> values, bool relaxed)
      : lattice_(std::move(lattice)), values_(std::move(values)), relaxed_(relaxed) {
    if (!lattice_) throw std::invalid_argument("correspondence needs a lattice");
    if (values_.size() != lattice_->size()) {
      throw Error(Errc::kEmptyValue, "every lattice element needs a value");
    }
    for (Elem x = 0; x < values_.size(); ++x) {
      require_same_universe(*lattice_, values_[x]);
      if (!relaxed_ && values_[x].empty()) {
        throw Error(Errc::kEmptyValue, "F(" + lattice_->name(x) + ") is empty",
                    {lattice_->name(x)});
      }
    }
  }

  LatticePtr lattice_;
  std::vector<ElemSet> values_;
  bool relaxed_ = false;
};

/// Per-property outcome of the V-ascending check. `ascending` implies both
/// V properties.
struct AscendingReport {
  bool ascending = false;
  bool lower_v = false;
  bool upper_v = false;
  CheckReport ascending_report;
  CheckReport lower_report;
  CheckReport upper_report;

  bool v_ascending() const noexcept { return lower_v && upper_v; }
};

namespace detail {

// Scans x <= x' (strict when `strict`), y in F(x), y' in F(x') for a meet
// escaping F(x) (when `lower`) or a join escaping F(x') (when `upper`).
inline CheckReport scan_ascending(const Correspondence& f, bool strict, bool lower,
                                  bool upper) {
  const FiniteLattice& lat = f.lattice();
  const auto n = static_cast<Elem>(lat.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem xp = 0; xp < n; ++xp) {
      if (!lat.le(x, xp) || (strict && x == xp)) continue;
      const ElemSet& fx = f.value(x);
      const ElemSet& fxp = f.value(xp);
      for (Elem y : fx) {
        for (Elem yp : fxp) {
          if (lower && !fx.contains(lat.meet(y, yp))) {
            return CheckReport::fail(
                {lat.name(x), lat.name(xp), lat.name(y), lat.name(yp), "meet"},
                "x=" + lat.name(x) + ", x'=" + lat.name(xp) + ": meet(" + lat.name(y) +
                    "," + lat.name(yp) + ")=" + lat.name(lat.meet(y, yp)) +
                    " is not in F(" + lat.name(x) + ")");
          }
          if (upper && !fxp.contains(lat.join(y, yp))) {
            return CheckReport::fail(
                {lat.name(x), lat.name(xp), lat.name(y), lat.name(yp), "join"},
                "x=" + lat.name(x) + ", x'=" + lat.name(xp) + ": join(" + lat.name(y) +
                    "," + lat.name(yp) + ")=" + lat.name(lat.join(y, yp)) +
                    " is not in F(" + lat.name(xp) + ")");
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace detail

/// For all x <= x' (including x = x'), y in F(x), y' in F(x'): meet(y,y') is in
/// F(x) and join(y,y') is in F(x'). Witness: (x, x', y, y', meet|join).
inline CheckReport is_ascending(const Correspondence& f) {
  CheckReport r = detail::scan_ascending(f, false, true, true);
  if (r) r.detail = "ascending";
  return r;
}

inline CheckReport is_lower_v_ascending(const Correspondence& f) {
  CheckReport r = detail::scan_ascending(f, true, true, false);
  if (r) r.detail = "lower V-ascending";
  return r;
}

inline CheckReport is_upper_v_ascending(const Correspondence& f) {
  CheckReport r = detail::scan_ascending(f, true, false, true);
  if (r) r.detail = "upper V-ascending";
  return r;
}

/// The V variants only quantify over strictly comparable x < x'.
inline AscendingReport is_v_ascending(const Correspondence& f) {
  AscendingReport out;
  out.ascending_report = is_ascending(f);
  out.lower_report = is_lower_v_ascending(f);
  out.upper_report = is_upper_v_ascending(f);
  out.ascending = out.ascending_report.holds();
  out.lower_v = out.lower_report.holds();
  out.upper_v = out.upper_report.holds();
  return out;
}

}  // namespace latfix

#endif  // LATFIX_CORRESPONDENCE_HPP
