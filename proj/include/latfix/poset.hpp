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

#ifndef LATFIX_POSET_HPP
#define LATFIX_POSET_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"

namespace latfix {

/// A finite partial order over named elements. The relation is stored as a
/// dense boolean matrix and is always reflexive, antisymmetric and
/// transitive; the only way to obtain a Poset is through build_poset.
class Poset {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }

  std::optional<Elem> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Elem index_of(const std::string& name) const {
    auto e = find(name);
    if (!e) throw Error(Errc::kUnknownElement, "unknown element '" + name + "'", {name});
    return *e;
  }

  bool le(Elem x, Elem y) const noexcept { return rel_[x * size() + y] != 0; }
  bool lt(Elem x, Elem y) const noexcept { return x != y && le(x, y); }
  bool comparable(Elem x, Elem y) const noexcept { return le(x, y) || le(y, x); }

  ElemSet all() const { return ElemSet::full(size()); }

  ElemSet subset(const std::vector<std::string>& names) const {
    ElemSet s(size());
    for (const auto& n : names) s.insert(index_of(n));
    return s;
  }

  std::vector<std::string> names_of(const ElemSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Elem e : s) out.push_back(name(e));
    return out;
  }

  /// Minimum of `s` under this order, if `s` has one.
  std::optional<Elem> least_of(const ElemSet& s) const {
    for (Elem c : s) {
      bool below_all = true;
      for (Elem d : s) {
        if (!le(c, d)) { below_all = false; break; }
      }
      if (below_all) return c;
    }
    return std::nullopt;
  }

  std::optional<Elem> greatest_of(const ElemSet& s) const {
    for (Elem c : s) {
      bool above_all = true;
      for (Elem d : s) {
        if (!le(d, c)) { above_all = false; break; }
      }
      if (above_all) return c;
    }
    return std::nullopt;
  }

  bool is_chain(const ElemSet& s) const {
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!comparable(m[i], m[j])) return false;
      }
    }
    return true;
  }

  /// Cover pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    const auto n = static_cast<Elem>(size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!lt(x, y)) continue;
        bool direct = true;
        for (Elem z = 0; z < n && direct; ++z) {
          if (lt(x, z) && lt(z, y)) direct = false;
        }
        if (direct) out.emplace_back(x, y);
      }
    }
    return out;
  }

  /// The same elements with the order reversed.
  Poset dual() const {
    Poset d = *this;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) d.rel_[x * n + y] = rel_[y * n + x];
    }
    return d;
  }

  /// Order equality by element names; element order is irrelevant.
  friend bool operator==(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
      auto bx = b.find(a.name(x));
      if (!bx) return false;
      for (Elem y = 0; y < a.size(); ++y) {
        if (a.le(x, y) != b.le(*bx, b.index_of(a.name(y)))) return false;
      }
    }
    return true;
  }

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<std::uint8_t> rel_;
};

/// Builds the reflexive-transitive closure of `pairs` over `elements` and
/// validates it as a partial order.
inline Poset build_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (elements.empty()) throw Error(Errc::kEmptyPoset, "a poset needs at least one element");
  Poset p;
  p.names_ = elements;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].empty()) {
      throw Error(Errc::kParseError, "element ids must be nonempty");
    }
    auto [it, fresh] = p.index_.emplace(elements[i], static_cast<Elem>(i));
    if (!fresh) {
      throw Error(Errc::kDuplicateElement, "duplicate element '" + elements[i] + "'",
                  {elements[i]});
    }
  }
  const std::size_t n = elements.size();
  p.rel_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.rel_[i * n + i] = 1;
  for (const auto& [lo, hi] : pairs) {
    Elem a = p.index_of(lo);
    Elem b = p.index_of(hi);
    p.rel_[a * n + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.rel_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.rel_[k * n + j]) p.rel_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.rel_[i * n + j] && p.rel_[j * n + i]) {
        throw Error(Errc::kAntisymmetryViolation,
                    "'" + elements[i] + "' and '" + elements[j] +
                        "' lie on a common cycle",
                    {elements[i], elements[j]});
      }
    }
  }
  return p;
}

}  // namespace latfix

#endif  // LATFIX_POSET_HPP
