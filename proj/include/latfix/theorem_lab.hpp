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

// Hypothesis-conditioned fuzzing of the fixed point theorems and a search
// for counterexamples once one hypothesis is dropped. Trials run serially;
// trial t uses trial_config(cfg, t), so any trial can be replayed alone.

#ifndef LATFIX_THEOREM_LAB_HPP
#define LATFIX_THEOREM_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/fixed_points.hpp"
#include "latfix/generate.hpp"
#include "latfix/induced.hpp"

namespace latfix {

struct Witness {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Correspondence instance;
  std::string detail;
};

struct TrialReport {
  Theorem theorem = Theorem::kMyZhou;
  GeneratorConfig config;
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t conclusion_verified = 0;
  std::uint64_t conclusion_violations = 0;
  // Least/greatest fixed point routes disagreeing with the brute force scan.
  std::uint64_t route_mismatches = 0;
  // Trials dropped because generation hit the attempt cap.
  std::uint64_t skipped = 0;
  std::vector<Witness> witnesses;

  bool passed() const noexcept { return conclusion_violations == 0 && route_mismatches == 0; }
};

enum class Dropped { kLowerV, kUpperV, kNonemptyValues };

inline const char* dropped_name(Dropped d) {
  switch (d) {
    case Dropped::kLowerV: return "lower-v";
    case Dropped::kUpperV: return "upper-v";
    case Dropped::kNonemptyValues: return "nonempty-values";
  }
  return "?";
}

struct SearchReport {
  Dropped dropped = Dropped::kLowerV;
  GeneratorConfig config;
  std::uint64_t trials = 0;
  std::uint64_t candidates = 0;
  std::uint64_t skipped = 0;
  // Empty means inconclusive, not that the weakened statement holds.
  std::optional<Witness> witness;
};

/// Generates one instance for each trial and, when `theorem`'s premises
/// hold, checks the conclusion by brute force and cross-checks the
/// constructive least and greatest fixed points.
inline TrialReport run_theorem_suite(Theorem theorem, const GeneratorConfig& cfg,
                                     std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  cfg.validate();
  TrialReport rep;
  rep.theorem = theorem;
  rep.config = cfg;
  rep.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const GeneratorConfig tc = trial_config(cfg, t);
    const LatticePtr lat = gen_lattice(tc);
    std::optional<Correspondence> f;
    try {
      f = gen_correspondence(tc, lat);
    } catch (const Error& e) {
      if (e.code() != Errc::kGenerationExhausted) throw;
      ++rep.skipped;
      continue;
    }
    if (!check_hypotheses(*f, theorem)) continue;
    ++rep.hypothesis_hits;
    CheckReport r = verify_fix_complete(*f, theorem);
    if (r.outcome != Outcome::kHolds) {
      ++rep.conclusion_violations;
      rep.witnesses.push_back({t, tc.seed, *f, r.detail});
      continue;
    }
    ++rep.conclusion_verified;

    const FixedPointSet fix = fixed_points_brute(*f);
    const LfpMethod method = theorem == Theorem::kCpltval ? LfpMethod::kMinSel : LfpMethod::kInfC;
    std::string mismatch;
    try {
      const Elem lo = method == LfpMethod::kMinSel ? least_fixed_point_minsel(*f)
                                                   : least_fixed_point_infC(*f);
      const Elem hi = greatest_fixed_point(*f, method);
      if (lo != *fix.least) mismatch = "least fixed point route gave " + lat->name(lo);
      if (hi != *fix.greatest) mismatch = "greatest fixed point route gave " + lat->name(hi);
    } catch (const Error& e) {
      mismatch = e.what();
    }
    if (!mismatch.empty()) {
      ++rep.route_mismatches;
      rep.witnesses.push_back({t, tc.seed, *f, mismatch});
    }
  }
  return rep;
}

namespace detail {

inline Correspondence two_chain_swap() {
  return Correspondence::from_names(make_lattice({"0", "1"}, {{"0", "1"}}),
                                    {{"0", {"1"}}, {"1", {"0"}}});
}

// Empty when Fix(F) is a nonempty complete lattice, else the reason.
inline std::string fix_failure(const Correspondence& f) {
  const FiniteLattice& lat = f.lattice();
  ElemSet fix(lat.size());
  for (Elem x = 0; x < lat.size(); ++x)
    if (f.is_fixed(x)) fix.insert(x);
  if (fix.empty()) return "Fix(F) is empty";
  CheckReport r = is_induced_complete(lat.poset(), fix);
  if (r) return {};
  return "Fix(F) = " + set_text(lat, fix) + " is not a complete lattice (" + r.detail + ")";
}

}  // namespace detail

/// Looks for a correspondence that keeps every premise of the chain
/// subcomplete theorem except `dropped` yet has an empty or incomplete
/// Fix(F). For lower-v, trial 0 is the two-element swap F(0)={1},
/// F(1)={0}; for nonempty-values, trial 0 is the all-empty map on the trial
/// lattice.
inline SearchReport search_counterexample(Dropped dropped, const GeneratorConfig& cfg,
                                          std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  cfg.validate();
  SearchReport rep;
  rep.dropped = dropped;
  rep.config = cfg;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++rep.trials;
    const GeneratorConfig tc = trial_config(cfg, t);
    std::optional<Correspondence> cand;
    if (t == 0 && dropped == Dropped::kLowerV) {
      cand = detail::two_chain_swap();
    } else if (t == 0 && dropped == Dropped::kNonemptyValues) {
      const LatticePtr lat = gen_lattice(tc);
      cand = Correspondence::make_relaxed(lat, std::vector<ElemSet>(lat->size(), ElemSet(lat->size())));
    } else {
      const LatticePtr lat = gen_lattice(tc);
      Rng rng(derive(tc.seed, 1));
      for (int attempt = 0; attempt < kGenerationCap && !cand; ++attempt) {
        std::vector<ElemSet> v = detail::sample_values(rng, *lat, tc.max_value_size);
        const bool keep_lower = dropped != Dropped::kLowerV;
        const bool keep_upper = dropped != Dropped::kUpperV;
        if (rng.chance(1, 2)) detail::close_values(*lat, v, true, keep_lower, keep_upper);
        if (dropped == Dropped::kNonemptyValues) {
          bool any = false;
          for (auto& s : v) {
            if (rng.chance(1, 3)) {
              s = ElemSet(lat->size());
              any = true;
            }
          }
          if (!any) v[rng.below(v.size())] = ElemSet(lat->size());
        }
        Correspondence f = Correspondence::make_relaxed(lat, std::move(v));
        const bool lower = is_lower_v_ascending(f).holds();
        const bool upper = is_upper_v_ascending(f).holds();
        bool exact = false;
        switch (dropped) {
          case Dropped::kLowerV: exact = !lower && upper; break;
          case Dropped::kUpperV: exact = lower && !upper; break;
          case Dropped::kNonemptyValues: exact = lower && upper; break;
        }
        if (exact) cand = std::move(f);
      }
      if (!cand) {
        ++rep.skipped;
        continue;
      }
    }
    ++rep.candidates;
    const std::string why = detail::fix_failure(*cand);
    if (!why.empty()) {
      rep.witness = Witness{t, tc.seed, *cand, why};
      break;
    }
  }
  return rep;
}

}  // namespace latfix

#endif  // LATFIX_THEOREM_LAB_HPP
