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

#ifndef LATFIX_FIXED_POINTS_HPP
#define LATFIX_FIXED_POINTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/induced.hpp"
#include "latfix/lattice.hpp"
#include "latfix/report.hpp"
#include "latfix/subsets.hpp"

namespace latfix {

/// Fix(F) = {s : s in F(s)} with its extremal elements. Completeness is
/// judged in the order Fix(F) inherits, never by ambient meet/join: Fix(F)
/// is frequently a complete lattice without being a sublattice.
struct FixedPointSet {
  ElemSet members;
  std::optional<Elem> least;
  std::optional<Elem> greatest;
  bool is_complete_lattice = false;
};

/// Which fixed-point theorem's premises to check.
///  - kFactZhou:  ascending, every value a nonempty subcomplete sublattice.
///  - kMyZhou:    V-ascending, every value nonempty and chain-subcomplete.
///  - kCpltval:   V-ascending, every value a nonempty lattice in its own order.
/// All three conclude that Fix(F) is a nonempty complete lattice.
enum class Theorem { kFactZhou, kMyZhou, kCpltval };

constexpr std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kFactZhou: return "fact-zhou";
    case Theorem::kMyZhou: return "myzhou";
    case Theorem::kCpltval: return "cpltval";
  }
  return "?";
}

enum class LfpMethod { kInfC, kMinSel };

/// kChainSubcomplete follows the interval restriction argument under the
/// kMyZhou premises; kCompleteValues certifies the restricted values through
/// v(x) under the kCpltval premises.
enum class SupVariant { kChainSubcomplete, kCompleteValues };

inline FixedPointSet fixed_points_brute(const Correspondence& f) {
  const FiniteLattice& lat = f.lattice();
  FixedPointSet out{ElemSet(lat.size()), std::nullopt, std::nullopt, false};
  for (Elem s = 0; s < lat.size(); ++s) {
    if (f.is_fixed(s)) out.members.insert(s);
  }
  out.least = lat.poset().least_of(out.members);
  out.greatest = lat.poset().greatest_of(out.members);
  out.is_complete_lattice = is_induced_lattice(lat.poset(), out.members).holds();
  return out;
}

namespace detail {

inline std::string set_text(const FiniteLattice& lat, const ElemSet& s) {
  std::string out = "{";
  for (Elem e : s) {
    if (out.size() > 1) out += ",";
    out += lat.name(e);
  }
  return out + "}";
}

[[noreturn]] inline void hypothesis_violated(const std::string& what, const CheckReport& r) {
  throw Error(Errc::kHypothesisViolated, what + ": " + r.detail, r.witness);
}

inline void require_nonempty_values(const Correspondence& f) {
  for (Elem x = 0; x < f.size(); ++x) {
    if (f.value(x).empty()) {
      throw Error(Errc::kHypothesisViolated,
                  "F(" + f.lattice().name(x) + ") is empty", {f.lattice().name(x)});
    }
  }
}

inline void contradiction(const std::string& what) {
  throw Error(Errc::kInternalContradiction, what);
}

}  // namespace detail

/// Least fixed point as inf C with C = {c : some x in F(c) has x <= c}.
/// Premises: F lower V-ascending with nonempty values (chain-subcompleteness
/// downwards holds automatically on a finite lattice).
inline Elem least_fixed_point_infC(const Correspondence& f) {
  const FiniteLattice& lat = f.lattice();
  detail::require_nonempty_values(f);
  if (CheckReport r = is_lower_v_ascending(f); !r) {
    detail::hypothesis_violated("F not lower V-ascending", r);
  }
  ElemSet c(lat.size());
  for (Elem s = 0; s < lat.size(); ++s) {
    for (Elem x : f.value(s)) {
      if (lat.le(x, s)) { c.insert(s); break; }
    }
  }
  const Elem a = inf_subset(lat, c);
  if (!f.is_fixed(a)) {
    detail::contradiction("inf C = " + lat.name(a) + " is not a fixed point");
  }
  for (Elem e = 0; e < lat.size(); ++e) {
    if (f.is_fixed(e) && !lat.le(a, e)) {
      detail::contradiction("inf C = " + lat.name(a) + " is not below fixed point " +
                            lat.name(e));
    }
  }
  return a;
}

/// Least fixed point as inf A with A = {x : min F(x) <= x}. Premises: F lower
/// V-ascending and every value has a least element.
inline Elem least_fixed_point_minsel(const Correspondence& f) {
  const FiniteLattice& lat = f.lattice();
  detail::require_nonempty_values(f);
  std::vector<Elem> mins(lat.size());
  for (Elem x = 0; x < lat.size(); ++x) {
    auto m = lat.poset().least_of(f.value(x));
    if (!m) {
      throw Error(Errc::kHypothesisViolated,
                  "F(" + lat.name(x) + ") = " + detail::set_text(lat, f.value(x)) +
                      " has no least element",
                  {lat.name(x)});
    }
    mins[x] = *m;
  }
  if (CheckReport r = is_lower_v_ascending(f); !r) {
    detail::hypothesis_violated("F not lower V-ascending", r);
  }
  ElemSet a(lat.size());
  for (Elem x = 0; x < lat.size(); ++x) {
    if (lat.le(mins[x], x)) a.insert(x);
  }
  const Elem xs = inf_subset(lat, a);
  if (!f.is_fixed(xs)) {
    detail::contradiction("inf A = " + lat.name(xs) + " is not a fixed point");
  }
  for (Elem e = 0; e < lat.size(); ++e) {
    if (f.is_fixed(e) && !lat.le(xs, e)) {
      detail::contradiction("inf A = " + lat.name(xs) + " is not below fixed point " +
                            lat.name(e));
    }
  }
  return xs;
}

/// Greatest fixed point: the least fixed point of the same values over the
/// dual lattice. Premises are the duals (upper V-ascending; for kMinSel,
/// every value has a greatest element).
inline Elem greatest_fixed_point(const Correspondence& f, LfpMethod method) {
  const FiniteLattice& lat = f.lattice();
  detail::require_nonempty_values(f);
  if (CheckReport r = is_upper_v_ascending(f); !r) {
    detail::hypothesis_violated("F not upper V-ascending", r);
  }
  if (method == LfpMethod::kMinSel) {
    for (Elem x = 0; x < lat.size(); ++x) {
      if (!lat.poset().greatest_of(f.value(x))) {
        throw Error(Errc::kHypothesisViolated,
                    "F(" + lat.name(x) + ") = " + detail::set_text(lat, f.value(x)) +
                        " has no greatest element",
                    {lat.name(x)});
      }
    }
  }
  const Correspondence dual = f.dual();
  return method == LfpMethod::kInfC ? least_fixed_point_infC(dual)
                                    : least_fixed_point_minsel(dual);
}

/// Checks the premises of `theorem`. Value conditions are reported before
/// the (V-)ascending condition; the detail lists every unmet premise and the
/// witness belongs to the first.
inline CheckReport check_hypotheses(const Correspondence& f, Theorem theorem) {
  const FiniteLattice& lat = f.lattice();
  std::vector<std::string> failures;
  std::vector<std::string> witness;
  auto note = [&](const std::string& what, const CheckReport& r) {
    failures.push_back(what + " (" + r.detail + ")");
    if (witness.empty()) witness = r.witness;
  };
  for (Elem x = 0; x < lat.size(); ++x) {
    const ElemSet& v = f.value(x);
    const std::string label = "F(" + lat.name(x) + ")";
    if (v.empty()) {
      note(label + " empty", CheckReport::fail({lat.name(x)}, "empty value"));
      continue;
    }
    switch (theorem) {
      case Theorem::kFactZhou:
        if (CheckReport r = is_subcomplete(lat, v); !r) {
          r.witness.insert(r.witness.begin(), lat.name(x));
          note(label + " not a sublattice", r);
        }
        break;
      case Theorem::kMyZhou:
        if (CheckReport r = is_chain_subcomplete(lat, v, Direction::kBoth); !r) {
          r.witness.insert(r.witness.begin(), lat.name(x));
          note(label + " not chain-subcomplete", r);
        }
        break;
      case Theorem::kCpltval:
        if (CheckReport r = is_induced_lattice(lat.poset(), v); !r) {
          r.witness.insert(r.witness.begin(), lat.name(x));
          note(label + " not a lattice in its induced order", r);
        }
        break;
    }
  }
  if (theorem == Theorem::kFactZhou) {
    if (CheckReport r = is_ascending(f); !r) note("F not ascending", r);
  } else {
    if (CheckReport r = is_lower_v_ascending(f); !r) note("F not lower V-ascending", r);
    if (CheckReport r = is_upper_v_ascending(f); !r) note("F not upper V-ascending", r);
  }
  if (failures.empty()) return CheckReport::pass("hypotheses hold");
  std::string detail = "hypotheses not met: ";
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) detail += "; ";
    detail += failures[i];
  }
  return {Outcome::kHypothesesNotMet, witness, detail};
}

/// Checks the premises of `theorem`; when they hold, confirms by brute force
/// that Fix(F) is a nonempty complete lattice in its induced order.
inline CheckReport verify_fix_complete(const Correspondence& f, Theorem theorem) {
  CheckReport hyp = check_hypotheses(f, theorem);
  if (!hyp) return hyp;
  const FiniteLattice& lat = f.lattice();
  const FixedPointSet fix = fixed_points_brute(f);
  if (fix.members.empty()) {
    return {Outcome::kConclusionViolated, lat.names_of(lat.all()),
            "conclusion violated: Fix(F) is empty"};
  }
  CheckReport complete = is_induced_complete(lat.poset(), fix.members);
  if (!complete) {
    return {Outcome::kConclusionViolated, complete.witness,
            "conclusion violated: Fix(F) = " + detail::set_text(lat, fix.members) +
                " is not a complete lattice (" + complete.detail + ")"};
  }
  return CheckReport::pass("hypotheses hold; Fix = " + detail::set_text(lat, fix.members) +
                           "; complete lattice");
}

/// Least upper bound of a nonempty U inside Fix(F). With b = sup U: if b is
/// fixed it is the answer; otherwise F is restricted to the interval
/// [b, top], every restricted value is certified nonempty, and the least
/// fixed point of the restriction is returned.
inline Elem sup_fix_over_subset(const Correspondence& f, const ElemSet& u,
                                SupVariant variant) {
  const FiniteLattice& lat = f.lattice();
  require_same_universe(lat, u);
  if (u.empty()) throw Error(Errc::kEmptySubset, "U must be nonempty");
  for (Elem e : u) {
    if (!f.is_fixed(e)) {
      throw Error(Errc::kNotFixedPoints, lat.name(e) + " is not a fixed point", {lat.name(e)});
    }
  }
  const Theorem premises =
      variant == SupVariant::kChainSubcomplete ? Theorem::kMyZhou : Theorem::kCpltval;
  if (CheckReport hyp = check_hypotheses(f, premises); !hyp) {
    throw Error(Errc::kHypothesisViolated, hyp.detail, hyp.witness);
  }

  const Elem b = sup_subset(lat, u);
  if (f.is_fixed(b)) return b;

  const ElemSet above_b = upper_interval(lat, b);
  const Restriction r = restrict_to(lat, above_b);
  std::vector<ElemSet> restricted(r.to_parent.size(), ElemSet(r.to_parent.size()));
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
    for (Elem y : f.value(r.to_parent[i])) {
      if (auto yi = r.from_parent[y]) restricted[i].insert(*yi);
    }
  }

  if (variant == SupVariant::kChainSubcomplete) {
    // sup({beta} u U) stays in F(b); joining it onto any t in F(s) for s > b
    // lands in F(s) and above b.
    ElemSet a = u;
    a.insert(f.value(b).front());
    const Elem sigma = sup_subset(lat, a);
    if (!f.value(b).contains(sigma)) {
      detail::contradiction("sup({beta} u U) = " + lat.name(sigma) + " is not in F(" +
                            lat.name(b) + ")");
    }
    for (Elem s : above_b) {
      if (s == b) continue;
      const Elem w = lat.join(f.value(s).front(), sigma);
      if (!f.value(s).contains(w)) {
        detail::contradiction("join(t, sigma) = " + lat.name(w) + " is not in F(" +
                              lat.name(s) + ")");
      }
    }
  } else {
    // v(x) = sup inside F(x) of {t v min F(x) : t in U} is min F'(x).
    for (Elem x : above_b) {
      const ElemSet& fx = f.value(x);
      const Elem m = *lat.poset().least_of(fx);
      ElemSet lifted(lat.size());
      for (Elem t : u) {
        const Elem tj = lat.join(t, m);
        if (!fx.contains(tj)) {
          detail::contradiction("join(" + lat.name(t) + ", min F(" + lat.name(x) +
                                ")) escapes F(" + lat.name(x) + ")");
        }
        lifted.insert(tj);
      }
      const auto v = induced_sup(lat.poset(), fx, lifted);
      if (!v || !lat.le(b, *v)) {
        detail::contradiction("v(" + lat.name(x) + ") does not lie above b");
      }
      const auto vi = r.from_parent[*v];
      const auto least_restricted = r.lattice->poset().least_of(restricted[*r.from_parent[x]]);
      if (!least_restricted || *least_restricted != *vi) {
        detail::contradiction("v(" + lat.name(x) + ") is not the least element of F'(" +
                              lat.name(x) + ")");
      }
    }
  }

  const Correspondence fr(r.lattice, std::move(restricted));
  const Elem m = variant == SupVariant::kChainSubcomplete ? least_fixed_point_infC(fr)
                                                          : least_fixed_point_minsel(fr);
  const Elem result = r.to_parent[m];
  if (!f.is_fixed(result)) detail::contradiction("restricted least fixed point is not fixed");
  for (Elem e : u) {
    if (!lat.le(e, result)) detail::contradiction("result is not an upper bound of U");
  }
  return result;
}

}  // namespace latfix

#endif  // LATFIX_FIXED_POINTS_HPP
