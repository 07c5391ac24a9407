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

#include <cstdint>
#include <functional>
#include <vector>

#include "fixtures.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "latfix/correspondence.hpp"
#include "latfix/fixed_points.hpp"
#include "oracles.hpp"

namespace latfix {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using namespace latfix::testing;

Errc error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected latfix::Error";
  return Errc::kParseError;
}

TEST(Correspondence, RejectsEmptyValues) {
  auto d = diamond();
  std::vector<ElemSet> values(4, ElemSet(4, {0}));
  values[2] = ElemSet(4);
  EXPECT_EQ(error_code_of([&] { Correspondence(d, values); }), Errc::kEmptyValue);
  EXPECT_TRUE(Correspondence::make_relaxed(d, values).relaxed());
  EXPECT_EQ(error_code_of([&] { Correspondence::from_names(d, {{"0", {"0"}}}); }),
            Errc::kEmptyValue);
}

TEST(IsAscending, DiamondExampleFailsAtEqualArguments) {
  CheckReport r = is_ascending(diamond_example());
  EXPECT_FALSE(r.holds());
  EXPECT_THAT(r.witness, ElementsAre("a", "a", "a", "b", "meet"));
}

TEST(IsAscending, IdentityAndConstantSublattice) {
  for (const auto& l : curated_lattices()) {
    EXPECT_TRUE(is_ascending(identity(l)).holds());
  }
  auto g = grid23();
  const Correspondence c = constant(g, g->subset({"00", "01", "11", "12"}));
  ASSERT_TRUE(oracle::closed(c, false, true, true));
  EXPECT_TRUE(is_ascending(c).holds());
}

TEST(IsVAscending, GoldenExamples) {
  AscendingReport r = is_v_ascending(diamond_example());
  EXPECT_TRUE(r.lower_v);
  EXPECT_TRUE(r.upper_v);
  EXPECT_FALSE(r.ascending);

  // The pentagon-like instance is upper but not lower V-ascending:
  // a < 1, 2 in F(a), 1 in F(1), meet(2,1) = 1 is not in F(a).
  const Correspondence p = pentagon_example();
  ASSERT_FALSE(oracle::closed(p, true, true, false));
  ASSERT_TRUE(oracle::closed(p, true, false, true));
  r = is_v_ascending(p);
  EXPECT_FALSE(r.lower_v);
  EXPECT_TRUE(r.upper_v);
  EXPECT_FALSE(r.ascending);
  EXPECT_THAT(r.lower_report.witness, ElementsAre("a", "1", "2", "1", "meet"));

  const Correspondence q = pentagon_repaired();
  ASSERT_TRUE(oracle::closed(q, true, true, true));
  ASSERT_FALSE(oracle::closed(q, false, true, true));
  r = is_v_ascending(q);
  EXPECT_TRUE(r.v_ascending());
  EXPECT_FALSE(r.ascending);

  const Correspondence swap = two_chain_swap();
  ASSERT_FALSE(oracle::closed(swap, true, true, false));
  r = is_v_ascending(swap);
  EXPECT_FALSE(r.lower_v);
  EXPECT_THAT(r.lower_report.witness, ElementsAre("0", "1", "1", "0", "meet"));
}

TEST(FixedPointsBrute, Examples) {
  auto d = diamond_example();
  FixedPointSet fix = fixed_points_brute(d);
  EXPECT_THAT(d.lattice().names_of(fix.members), ElementsAre("0", "a", "b", "1"));
  EXPECT_EQ(d.lattice().name(*fix.least), "0");
  EXPECT_EQ(d.lattice().name(*fix.greatest), "1");
  EXPECT_TRUE(fix.is_complete_lattice);

  auto p = pentagon_example();
  fix = fixed_points_brute(p);
  EXPECT_EQ(fix.members.size(), 5u);
  EXPECT_TRUE(fix.is_complete_lattice);

  fix = fixed_points_brute(two_chain_swap());
  EXPECT_TRUE(fix.members.empty());
  EXPECT_FALSE(fix.least.has_value());
  EXPECT_FALSE(fix.is_complete_lattice);
}

// On the pentagon-like lattice: F(0)={0}, F(a)={a}, F(b)={b}, F(1)={2},
// F(2)={2}. Fix = {0,a,b,2} is complete in its own order although
// join(a,b) = 1 is not a fixed point.
Correspondence skip_one() {
  return Correspondence::from_names(
      pentagon_like(), {{"0", {"0"}}, {"a", {"a"}}, {"b", {"b"}}, {"1", {"2"}}, {"2", {"2"}}});
}

TEST(FixedPointsBrute, InducedCompletenessIsNotSublatticeness) {
  const Correspondence f = skip_one();
  FixedPointSet fix = fixed_points_brute(f);
  EXPECT_THAT(f.lattice().names_of(fix.members), ElementsAre("0", "a", "b", "2"));
  EXPECT_TRUE(fix.is_complete_lattice);
  EXPECT_FALSE(is_sublattice(f.lattice(), fix.members).holds());
}

TEST(LeastFixedPointInfC, Examples) {
  const Correspondence d = diamond_example();
  // Frozen from the scan C = {c : some x in F(c) has x <= c} = {0,a,b,1}.
  EXPECT_EQ(d.lattice().name(least_fixed_point_infC(d)), "0");
  for (const auto& l : curated_lattices()) {
    EXPECT_EQ(least_fixed_point_infC(identity(l)), l->bottom());
  }
  EXPECT_EQ(error_code_of([] { least_fixed_point_infC(pentagon_example()); }),
            Errc::kHypothesisViolated);
  const Correspondence q = pentagon_repaired();
  EXPECT_EQ(q.lattice().name(least_fixed_point_infC(q)), "0");
  EXPECT_EQ(error_code_of([] { least_fixed_point_infC(two_chain_swap()); }),
            Errc::kHypothesisViolated);
}

TEST(LeastFixedPointMinSel, Examples) {
  EXPECT_EQ(error_code_of([] { least_fixed_point_minsel(pentagon_example()); }),
            Errc::kHypothesisViolated);
  const Correspondence q = pentagon_repaired();
  EXPECT_EQ(q.lattice().name(least_fixed_point_minsel(q)), "0");
  for (const auto& l : curated_lattices()) {
    EXPECT_EQ(least_fixed_point_minsel(identity(l)), l->bottom());
  }
  try {
    least_fixed_point_minsel(diamond_example());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kHypothesisViolated);
    EXPECT_THAT(e.elements(), ElementsAre("a"));
    EXPECT_THAT(e.what(), HasSubstr("has no least element"));
  }
}

TEST(GreatestFixedPoint, Examples) {
  const Correspondence d = diamond_example();
  EXPECT_EQ(d.lattice().name(greatest_fixed_point(d, LfpMethod::kInfC)), "1");
  for (const auto& l : curated_lattices()) {
    EXPECT_EQ(greatest_fixed_point(identity(l), LfpMethod::kInfC), l->top());
    EXPECT_EQ(greatest_fixed_point(identity(l), LfpMethod::kMinSel), l->top());
  }
  const Correspondence p = pentagon_example();
  EXPECT_EQ(p.lattice().name(greatest_fixed_point(p, LfpMethod::kMinSel)), "2");
  EXPECT_EQ(p.lattice().name(greatest_fixed_point(p, LfpMethod::kInfC)), "2");
  const Correspondence q = pentagon_repaired();
  EXPECT_EQ(q.lattice().name(greatest_fixed_point(q, LfpMethod::kMinSel)), "2");
  EXPECT_EQ(error_code_of([] { greatest_fixed_point(two_chain_swap(), LfpMethod::kInfC); }),
            Errc::kHypothesisViolated);
}

TEST(SupFixOverSubset, Examples) {
  const Correspondence d = diamond_example();
  const auto& dl = d.lattice();
  EXPECT_EQ(dl.name(sup_fix_over_subset(d, dl.subset({"a", "b"}), SupVariant::kChainSubcomplete)),
            "1");
  EXPECT_EQ(sup_fix_over_subset(d, dl.subset({"a"}), SupVariant::kChainSubcomplete),
            dl.index_of("a"));
  // cpltval premises fail on the diamond example.
  EXPECT_EQ(error_code_of([&] {
              sup_fix_over_subset(d, dl.subset({"a", "b"}), SupVariant::kCompleteValues);
            }),
            Errc::kHypothesisViolated);

  const Correspondence p = pentagon_example();
  const auto& pl = p.lattice();
  for (SupVariant v : {SupVariant::kChainSubcomplete, SupVariant::kCompleteValues}) {
    EXPECT_EQ(error_code_of([&] { sup_fix_over_subset(p, pl.subset({"a", "b"}), v); }),
              Errc::kHypothesisViolated);
  }
  // With F(1) = {2}, join(a,b) = 1 leaves Fix and the restriction to [1,2]
  // lands on 2.
  const Correspondence q = pentagon_repaired();
  const auto& ql = q.lattice();
  for (SupVariant v : {SupVariant::kChainSubcomplete, SupVariant::kCompleteValues}) {
    EXPECT_EQ(ql.name(sup_fix_over_subset(q, ql.subset({"a", "b"}), v)), "2");
  }
  EXPECT_EQ(error_code_of([&] {
              sup_fix_over_subset(two_chain_swap(), ElemSet(2, {0}),
                                  SupVariant::kChainSubcomplete);
            }),
            Errc::kNotFixedPoints);
}

TEST(SupFixOverSubset, RestrictsToIntervalWhenSupIsNotFixed) {
  const Correspondence f = skip_one();
  const auto& l = f.lattice();
  oracle::Order o(l);
  const oracle::Idx fix = oracle::fixed_points(f);
  const auto expected = o.lub_in(fix, oracle::to_idx(l.subset({"a", "b"})));
  ASSERT_EQ(l.name(*expected), "2");
  for (SupVariant v : {SupVariant::kChainSubcomplete, SupVariant::kCompleteValues}) {
    EXPECT_EQ(l.name(sup_fix_over_subset(f, l.subset({"a", "b"}), v)), "2");
  }
}

TEST(VerifyFixComplete, GoldenExamples) {
  CheckReport r = verify_fix_complete(diamond_example(), Theorem::kMyZhou);
  EXPECT_EQ(r.outcome, Outcome::kHolds);
  EXPECT_THAT(r.detail, HasSubstr("Fix = {0,a,b,1}; complete lattice"));

  r = verify_fix_complete(diamond_example(), Theorem::kFactZhou);
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);
  EXPECT_THAT(r.detail, HasSubstr("hypotheses not met: F(a) not a sublattice"));
  EXPECT_FALSE(r.witness.empty());

  r = verify_fix_complete(diamond_example(), Theorem::kCpltval);
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);

  const Correspondence p = pentagon_example();
  EXPECT_FALSE(is_sublattice(p.lattice(), p.value(p.lattice().index_of("a"))).holds());
  EXPECT_TRUE(is_induced_lattice(p.lattice().poset(), p.value(p.lattice().index_of("a"))).holds());
  r = verify_fix_complete(p, Theorem::kCpltval);
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);
  EXPECT_THAT(r.detail, HasSubstr("F not lower V-ascending"));
  EXPECT_THAT(r.detail, ::testing::Not(HasSubstr("F(a) not")));
  EXPECT_TRUE(fixed_points_brute(p).is_complete_lattice);
  EXPECT_EQ(verify_fix_complete(p, Theorem::kFactZhou).outcome, Outcome::kHypothesesNotMet);

  const Correspondence q = pentagon_repaired();
  r = verify_fix_complete(q, Theorem::kCpltval);
  EXPECT_EQ(r.outcome, Outcome::kHolds);
  EXPECT_THAT(r.detail, HasSubstr("Fix = {0,a,b,2}; complete lattice"));
  EXPECT_EQ(verify_fix_complete(q, Theorem::kFactZhou).outcome, Outcome::kHypothesesNotMet);
  EXPECT_EQ(verify_fix_complete(q, Theorem::kMyZhou).outcome, Outcome::kHolds);
}

// Every correspondence with nonempty values on small lattices, checked
// against the oracle: property nesting, least/greatest fixed points, the
// theorem conclusions and sup over every nonempty subset of Fix.
void exhaustive_sweep(const LatticePtr& l) {
  const auto n = static_cast<Elem>(l->size());
  oracle::Order o(*l);
  const std::uint64_t choices = (std::uint64_t{1} << n) - 1;  // nonempty masks
  std::uint64_t total = 1;
  for (Elem i = 0; i < n; ++i) total *= choices;
  std::uint64_t hyp_hits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<ElemSet> values;
    std::uint64_t c = code;
    for (Elem x = 0; x < n; ++x) {
      const std::uint64_t mask = c % choices + 1;
      c /= choices;
      ElemSet v(n);
      for (Elem e = 0; e < n; ++e)
        if (mask >> e & 1U) v.insert(e);
      values.push_back(v);
    }
    const Correspondence f(l, values);
    const AscendingReport asc = is_v_ascending(f);
    ASSERT_EQ(asc.ascending, oracle::closed(f, false, true, true));
    ASSERT_EQ(asc.lower_v, oracle::closed(f, true, true, false));
    ASSERT_EQ(asc.upper_v, oracle::closed(f, true, false, true));
    if (asc.ascending) {
      ASSERT_TRUE(asc.v_ascending());
    }

    const oracle::Idx fix = oracle::fixed_points(f);
    const bool fact = check_hypotheses(f, Theorem::kFactZhou).holds();
    const bool my = check_hypotheses(f, Theorem::kMyZhou).holds();
    const bool cplt = check_hypotheses(f, Theorem::kCpltval).holds();
    if (fact) {
      ASSERT_TRUE(my);
    }
    for (Theorem t : {Theorem::kFactZhou, Theorem::kMyZhou, Theorem::kCpltval}) {
      ASSERT_NE(verify_fix_complete(f, t).outcome, Outcome::kConclusionViolated);
    }
    if (my || cplt) {
      ++hyp_hits;
      ASSERT_TRUE(oracle::induced_complete(o, fix));
    }
    if (asc.lower_v) {
      ASSERT_EQ(static_cast<int>(least_fixed_point_infC(f)), *oracle::least(o, fix));
    }
    if (asc.upper_v) {
      ASSERT_EQ(static_cast<int>(greatest_fixed_point(f, LfpMethod::kInfC)),
                *oracle::greatest(o, fix));
    }
    if (my) {
      oracle::subsets(fix, [&](const oracle::Idx& u) {
        const ElemSet us(n, std::vector<Elem>(u.begin(), u.end()));
        ASSERT_EQ(static_cast<int>(sup_fix_over_subset(f, us, SupVariant::kChainSubcomplete)),
                  *o.lub_in(fix, u));
        if (cplt) {
          ASSERT_EQ(static_cast<int>(sup_fix_over_subset(f, us, SupVariant::kCompleteValues)),
                    *o.lub_in(fix, u));
        }
      });
    }
  }
  EXPECT_GT(hyp_hits, 0u);
}

TEST(ExhaustiveSweep, Chain2) { exhaustive_sweep(chain(2)); }
TEST(ExhaustiveSweep, Chain3) { exhaustive_sweep(chain(3)); }
TEST(ExhaustiveSweep, Diamond) { exhaustive_sweep(diamond()); }

}  // namespace
}  // namespace latfix
