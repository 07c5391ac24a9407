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

// Seeded random lattices and correspondences.
//
// Every draw comes from an Rng seeded with derive(cfg.seed, k): k = 0 for
// the lattice, k = 1 for the correspondence. A config therefore fixes the
// whole instance.

#ifndef LATFIX_GENERATE_HPP
#define LATFIX_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/error.hpp"
#include "latfix/lattice.hpp"
#include "latfix/rng.hpp"

namespace latfix {

enum class TargetClass { kAscending, kVAscending, kUnconstrained };
enum class LatticeStrategy { kChainProductClosure, kRandomPosetDownsets };

inline const char* target_name(TargetClass t) {
  switch (t) {
    case TargetClass::kAscending: return "ascending";
    case TargetClass::kVAscending: return "v-ascending";
    case TargetClass::kUnconstrained: return "unconstrained";
  }
  return "?";
}

inline const char* strategy_name(LatticeStrategy s) {
  return s == LatticeStrategy::kChainProductClosure ? "chain-product-closure"
                                                    : "random-poset-downsets";
}

struct GeneratorConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_lattice_size = 8;
  // Upper bound on |F(x)| as first sampled; repair may enlarge values.
  std::size_t max_value_size = 4;
  TargetClass target_class = TargetClass::kVAscending;
  LatticeStrategy strategy = LatticeStrategy::kChainProductClosure;

  void validate() const {
    if (max_lattice_size < 1) throw std::invalid_argument("max_lattice_size must be >= 1");
    if (max_value_size < 1) throw std::invalid_argument("max_value_size must be >= 1");
  }
};

inline constexpr int kGenerationCap = 1000;

namespace detail {

using Point = std::vector<int>;

inline std::string point_name(const Point& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

// Closes `pts` under componentwise min and max.
inline std::set<Point> close_points(std::set<Point> pts) {
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Point> cur(pts.begin(), pts.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Point lo(cur[i].size()), hi(cur[i].size());
        for (std::size_t k = 0; k < lo.size(); ++k) {
          lo[k] = std::min(cur[i][k], cur[j][k]);
          hi[k] = std::max(cur[i][k], cur[j][k]);
        }
        grew |= pts.insert(lo).second;
        grew |= pts.insert(hi).second;
      }
    }
  }
  return pts;
}

inline LatticePtr lattice_of_points(const std::set<Point>& pts) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Point& p : pts) names.push_back(point_name(p));
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      if (p == q) continue;
      bool le = true;
      for (std::size_t k = 0; k < p.size(); ++k) le = le && p[k] <= q[k];
      if (le) pairs.emplace_back(point_name(p), point_name(q));
    }
  }
  return make_lattice(names, pairs);
}

inline LatticePtr gen_chain_product(Rng& rng, std::size_t max_size) {
  const int dims = static_cast<int>(rng.between(1, 3));
  std::vector<int> len(dims);
  for (int& l : len) l = static_cast<int>(rng.between(2, 4));
  auto random_point = [&] {
    Point p(dims);
    for (int k = 0; k < dims; ++k) p[k] = static_cast<int>(rng.below(len[k]));
    return p;
  };
  const auto target = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size)));
  std::set<Point> pts{random_point()};
  // Grow one sampled point at a time, discarding any that would overshoot.
  for (int tries = 0; pts.size() < target && tries < 64; ++tries) {
    std::set<Point> next = pts;
    next.insert(random_point());
    next = close_points(std::move(next));
    if (next.size() <= max_size) pts = std::move(next);
  }
  return lattice_of_points(pts);
}

inline LatticePtr gen_downsets(Rng& rng, std::size_t max_size) {
  const int k = static_cast<int>(
      rng.between(0, static_cast<std::int64_t>(std::min<std::size_t>(max_size - 1, 6))));
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
  auto close = [&] {
    for (int m = 0; m < k; ++m)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (le[i][m] && le[m][j]) le[i][j] = true;
  };
  for (int i = 0; i < k; ++i) le[i][i] = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rng.chance(1, 2)) le[i][j] = true;
  close();
  auto downsets = [&] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1U << k); ++m) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if (!(m >> j & 1U)) continue;
        for (int i = 0; i < k && ok; ++i)
          if (le[i][j] && !(m >> i & 1U)) ok = false;
      }
      if (ok) out.push_back(m);
    }
    return out;
  };
  std::vector<std::uint32_t> ds = downsets();
  // Extra comparabilities shrink the lattice; a total order gives k + 1.
  while (ds.size() > max_size) {
    std::vector<std::pair<int, int>> open;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!le[i][j]) open.emplace_back(i, j);
    const auto [i, j] = open[rng.below(open.size())];
    le[i][j] = true;
    close();
    ds = downsets();
  }
  auto name = [&](std::uint32_t m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < k; ++i) {
      if (!(m >> i & 1U)) continue;
      if (!first) s += '.';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  };
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::uint32_t m : ds) names.push_back(name(m));
  for (std::uint32_t a : ds)
    for (std::uint32_t b : ds)
      if (a != b && (a & b) == a) pairs.emplace_back(name(a), name(b));
  return make_lattice(names, pairs);
}

// Adds meets into F(x) and joins into F(x') over x <= x' (x < x' when
// `strict`) until nothing changes. Either side can be switched off.
inline void close_values(const FiniteLattice& lat, std::vector<ElemSet>& v, bool strict,
                         bool lower, bool upper) {
  const auto n = static_cast<Elem>(lat.size());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < n; ++x) {
      for (Elem xp = 0; xp < n; ++xp) {
        if (!lat.le(x, xp) || (strict && x == xp)) continue;
        const std::vector<Elem> fx = v[x].members();
        const std::vector<Elem> fxp = v[xp].members();
        for (Elem y : fx) {
          for (Elem yp : fxp) {
            if (lower && !v[x].contains(lat.meet(y, yp))) {
              v[x].insert(lat.meet(y, yp));
              grew = true;
            }
            if (upper && !v[xp].contains(lat.join(y, yp))) {
              v[xp].insert(lat.join(y, yp));
              grew = true;
            }
          }
        }
      }
    }
  }
}

// A monotone selection s(x) = (x v r1) ^ r2 with random r1, r2, inflated
// with up to max_value_size - 1 random extras per point.
inline std::vector<ElemSet> sample_values(Rng& rng, const FiniteLattice& lat,
                                          std::size_t max_value_size) {
  const auto n = static_cast<Elem>(lat.size());
  const Elem r1 = rng.chance(1, 2) ? lat.bottom() : static_cast<Elem>(rng.below(n));
  const Elem r2 = rng.chance(1, 2) ? lat.top() : static_cast<Elem>(rng.below(n));
  std::vector<ElemSet> v;
  v.reserve(n);
  for (Elem x = 0; x < n; ++x) {
    ElemSet s(n, {lat.meet(lat.join(x, r1), r2)});
    const auto extras = rng.below(max_value_size);
    for (std::uint64_t e = 0; e < extras; ++e) s.insert(static_cast<Elem>(rng.below(n)));
    v.push_back(std::move(s));
  }
  return v;
}

// Values processed along a linear extension, each drawn from the common
// upper bounds of the values already placed below it. Then y <= y' whenever
// x < x', y in F(x), y' in F(x'), so lower and upper V-ascendingness hold
// whatever shape the individual values take. With `sublattice_values` each
// value is also closed under meet and join, which keeps the stacking.
inline std::vector<ElemSet> sample_stacked(Rng& rng, const FiniteLattice& lat,
                                           std::size_t max_value_size,
                                           bool sublattice_values) {
  const auto n = static_cast<Elem>(lat.size());
  std::vector<Elem> order(n);
  std::vector<std::size_t> below(n, 0);
  for (Elem x = 0; x < n; ++x) {
    order[x] = x;
    for (Elem z = 0; z < n; ++z) below[x] += lat.le(z, x);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });
  std::vector<ElemSet> v(n, ElemSet(n));
  for (Elem x : order) {
    std::vector<Elem> room;
    for (Elem y = 0; y < n; ++y) {
      bool ok = true;
      for (Elem z = 0; z < n && ok; ++z) {
        if (z == x || !lat.le(z, x)) continue;
        for (Elem w : v[z]) ok = ok && lat.le(w, y);
      }
      if (ok) room.push_back(y);
    }
    rng.shuffle(room);
    const auto k = std::min<std::size_t>(room.size(), 1 + rng.below(max_value_size));
    for (std::size_t i = 0; i < k; ++i) v[x].insert(room[i]);
    if (!sublattice_values && max_value_size >= 4 && room.size() >= 2 && rng.chance(1, 3)) {
      // A four-point value {l, a, b, u} with l below and u above the pair:
      // a lattice in its own order, often not a sublattice.
      const Elem a = room[0];
      Elem b = room[1];
      for (Elem z : room) {
        if (!lat.le(a, z) && !lat.le(z, a)) b = z;
      }
      std::vector<Elem> lo, hi;
      for (Elem z : room) {
        if (lat.le(z, a) && lat.le(z, b)) lo.push_back(z);
        if (lat.le(a, z) && lat.le(b, z)) hi.push_back(z);
      }
      if (!lo.empty() && !hi.empty()) {
        v[x] = ElemSet(n, {a, b, lo[rng.below(lo.size())], hi[rng.below(hi.size())]});
      }
    }
    if (v[x].size() < max_value_size && std::find(room.begin(), room.end(), x) != room.end() &&
        rng.chance(1, 2)) {
      v[x].insert(x);
    }
    if (sublattice_values) {
      for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Elem> m = v[x].members();
        for (Elem a : m) {
          for (Elem b : m) {
            grew |= !v[x].contains(lat.meet(a, b));
            v[x].insert(lat.meet(a, b));
            grew |= !v[x].contains(lat.join(a, b));
            v[x].insert(lat.join(a, b));
          }
        }
      }
    }
  }
  return v;
}

inline bool in_class(const Correspondence& f, TargetClass t) {
  switch (t) {
    case TargetClass::kAscending: return is_ascending(f).holds();
    case TargetClass::kVAscending:
      return is_lower_v_ascending(f).holds() && is_upper_v_ascending(f).holds();
    case TargetClass::kUnconstrained: return true;
  }
  return false;
}

}  // namespace detail

/// Random finite lattice with at most cfg.max_lattice_size elements.
inline LatticePtr gen_lattice(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(derive(cfg.seed, 0));
  if (cfg.max_lattice_size == 1) return make_lattice({"0"}, {});
  return cfg.strategy == LatticeStrategy::kChainProductClosure
             ? detail::gen_chain_product(rng, cfg.max_lattice_size)
             : detail::gen_downsets(rng, cfg.max_lattice_size);
}

/// Random correspondence on `lat` in cfg.target_class. Each attempt draws
/// either a monotone selection with extras (closed into the class half the
/// time) or stacked values, and keeps the result only if the class
/// validator accepts it. Throws GenerationExhausted after
/// kGenerationCap attempts.
inline Correspondence gen_correspondence(const GeneratorConfig& cfg, const LatticePtr& lat) {
  cfg.validate();
  Rng rng(derive(cfg.seed, 1));
  for (int attempt = 0; attempt < kGenerationCap; ++attempt) {
    std::vector<ElemSet> v;
    if (cfg.target_class == TargetClass::kUnconstrained || rng.chance(1, 2)) {
      v = detail::sample_values(rng, *lat, cfg.max_value_size);
      if (cfg.target_class != TargetClass::kUnconstrained && rng.chance(1, 2)) {
        detail::close_values(*lat, v, cfg.target_class == TargetClass::kVAscending, true, true);
      }
    } else {
      v = detail::sample_stacked(rng, *lat, cfg.max_value_size,
                                 cfg.target_class == TargetClass::kAscending);
    }
    Correspondence f(lat, std::move(v));
    if (detail::in_class(f, cfg.target_class)) return f;
  }
  throw Error(Errc::kGenerationExhausted,
              "no " + std::string(target_name(cfg.target_class)) + " correspondence after " +
                  std::to_string(kGenerationCap) + " attempts");
}

/// Per-trial config: same knobs, seed derived from (cfg.seed, trial).
inline GeneratorConfig trial_config(const GeneratorConfig& cfg, std::uint64_t trial) {
  GeneratorConfig t = cfg;
  t.seed = derive(cfg.seed, trial);
  return t;
}

}  // namespace latfix

#endif  // LATFIX_GENERATE_HPP
