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

#ifndef LATFIX_ELEM_SET_HPP
#define LATFIX_ELEM_SET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "latfix/error.hpp"

namespace latfix {

/// Index of an element inside its poset. Names live in the poset.
using Elem = std::uint32_t;

/// A subset of the universe {0, ..., universe-1}. Keeps both a membership
/// mask for O(1) lookups and a sorted member list for iteration.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : mask_(universe, false) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> members)
      : ElemSet(universe) {
    for (Elem e : members) insert(e);
  }
  ElemSet(std::size_t universe, const std::vector<Elem>& members)
      : ElemSet(universe) {
    for (Elem e : members) insert(e);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    s.mask_.assign(universe, true);
    s.items_.resize(universe);
    for (std::size_t i = 0; i < universe; ++i) s.items_[i] = static_cast<Elem>(i);
    return s;
  }

  std::size_t universe() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  bool contains(Elem e) const noexcept {
    return e < mask_.size() && mask_[e];
  }

  void insert(Elem e) {
    if (e >= mask_.size()) {
      throw Error(Errc::kForeignSubset, "element index outside the universe");
    }
    if (mask_[e]) return;
    mask_[e] = true;
    items_.insert(std::lower_bound(items_.begin(), items_.end(), e), e);
  }

  void erase(Elem e) {
    if (!contains(e)) return;
    mask_[e] = false;
    items_.erase(std::lower_bound(items_.begin(), items_.end(), e));
  }

  const std::vector<Elem>& members() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Elem front() const { return items_.front(); }

  bool is_subset_of(const ElemSet& other) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](Elem e) { return other.contains(e); });
  }

  ElemSet intersect(const ElemSet& other) const {
    ElemSet out(universe());
    for (Elem e : items_) {
      if (other.contains(e)) out.insert(e);
    }
    return out;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.mask_.size() == b.mask_.size() && a.items_ == b.items_;
  }

 private:
  std::vector<bool> mask_;
  std::vector<Elem> items_;
};

/// Calls `fn(const ElemSet&)` for every nonempty subset of `base`. A `fn`
/// returning bool stops the walk by returning false. Exponential: callers keep |base| within kExhaustiveCap.
template <typename Fn>
void for_each_nonempty_subset(const ElemSet& base, Fn&& fn) {
  const auto& items = base.members();
  const std::size_t k = items.size();
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    ElemSet sub(base.universe());
    for (std::size_t i = 0; i < k; ++i) {
      if (bits >> i & 1U) sub.insert(items[i]);
    }
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const ElemSet&>>) {
      fn(sub);
    } else {
      if (!fn(sub)) return;
    }
  }
}

/// Largest subset size for which checkers enumerate all subsets or chains.
inline constexpr std::size_t kExhaustiveCap = 12;

}  // namespace latfix

#endif  // LATFIX_ELEM_SET_HPP
