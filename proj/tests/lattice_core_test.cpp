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

#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "latfix/lattice.hpp"
#include "latfix/subsets.hpp"
#include "oracles.hpp"

namespace latfix {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::chain;
using testing::curated_lattices;
using testing::diamond;
using testing::pentagon_like;

template <typename Fn>
Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected latfix::Error";
  return Errc::kParseError;
}

TEST(BuildPoset, DiamondClosure) {
  Poset p = build_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  const Elem z = p.index_of("0"), a = p.index_of("a"), b = p.index_of("b"),
             o = p.index_of("1");
  EXPECT_TRUE(p.le(z, o));  // by transitivity
  EXPECT_TRUE(p.le(a, a));
  EXPECT_FALSE(p.comparable(a, b));
  EXPECT_FALSE(p.le(o, z));
}

TEST(BuildPoset, Singleton) {
  Poset p = build_poset({"x"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.le(0, 0));
}

TEST(BuildPoset, RejectsCycles) {
  try {
    build_poset({"p", "q"}, {{"p", "q"}, {"q", "p"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kAntisymmetryViolation);
    EXPECT_THAT(e.elements(), ElementsAre("p", "q"));
  }
  // A longer cycle is caught after closure.
  EXPECT_EQ(error_code_of([] { build_poset({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}, {"w", "u"}}); }),
            Errc::kAntisymmetryViolation);
}

TEST(BuildPoset, RejectsBadInput) {
  EXPECT_EQ(error_code_of([] { build_poset({"a", "a"}, {}); }), Errc::kDuplicateElement);
  EXPECT_EQ(error_code_of([] { build_poset({"a"}, {{"a", "zz"}}); }), Errc::kUnknownElement);
  EXPECT_EQ(error_code_of([] { build_poset({}, {}); }), Errc::kEmptyPoset);
}

TEST(AsLattice, Diamond) {
  auto l = diamond();
  EXPECT_EQ(l->name(l->meet(l->index_of("a"), l->index_of("b"))), "0");
  EXPECT_EQ(l->name(l->join(l->index_of("a"), l->index_of("b"))), "1");
  EXPECT_EQ(l->name(l->bottom()), "0");
  EXPECT_EQ(l->name(l->top()), "1");
}

TEST(AsLattice, PentagonLike) {
  auto l = pentagon_like();
  EXPECT_EQ(l->name(l->join(l->index_of("a"), l->index_of("b"))), "1");
  EXPECT_EQ(l->name(l->top()), "2");
}

TEST(AsLattice, IncomparablePairIsNotALattice) {
  try {
    as_lattice(build_poset({"x", "y"}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotALattice);
    EXPECT_THAT(e.elements(), ElementsAre("x", "y", "meet"));
  }
}

TEST(SupInf, Examples) {
  auto d = diamond();
  EXPECT_EQ(d->name(sup_subset(*d, d->subset({"a", "b"}))), "1");
  EXPECT_EQ(d->name(inf_subset(*d, d->subset({"a", "b"}))), "0");
  EXPECT_EQ(d->name(sup_subset(*d, d->subset({"a"}))), "a");
  EXPECT_EQ(d->name(inf_subset(*d, d->subset({"a"}))), "a");
  EXPECT_EQ(sup_subset(*d, ElemSet(4)), d->bottom());
  EXPECT_EQ(inf_subset(*d, ElemSet(4)), d->top());

  // Frozen from the definitional scan oracle.
  auto p = pentagon_like();
  oracle::Order o(*p);
  const oracle::Idx a = oracle::to_idx(p->subset({"a", "b", "2"}));
  ASSERT_EQ(p->name(*o.lub_in(o.all(), a)), "2");
  ASSERT_EQ(p->name(*o.glb_in(o.all(), a)), "0");
  EXPECT_EQ(p->name(sup_subset(*p, p->subset({"a", "b", "2"}))), "2");
  EXPECT_EQ(p->name(inf_subset(*p, p->subset({"a", "b", "2"}))), "0");
}

TEST(SupInf, ForeignSubset) {
  auto d = diamond();
  EXPECT_EQ(error_code_of([&] { sup_subset(*d, ElemSet(7, {1})); }), Errc::kForeignSubset);
}

TEST(IsSublattice, Examples) {
  auto p = pentagon_like();
  CheckReport r = is_sublattice(*p, p->subset({"0", "a", "b", "2"}));
  EXPECT_FALSE(r.holds());
  EXPECT_THAT(r.witness, ElementsAre("a", "b"));
  EXPECT_THAT(r.detail, HasSubstr("join(a,b)=1"));

  EXPECT_TRUE(is_sublattice(*p, p->all()).holds());

  auto d = diamond();
  r = is_sublattice(*d, d->subset({"0", "a", "b"}));
  EXPECT_FALSE(r.holds());
  EXPECT_THAT(r.witness, ElementsAre("a", "b"));

  EXPECT_EQ(error_code_of([&] { is_sublattice(*d, ElemSet(4)); }), Errc::kEmptySubset);
}

TEST(IsSubcomplete, Examples) {
  auto p = pentagon_like();
  EXPECT_FALSE(is_subcomplete(*p, p->subset({"0", "a", "b", "2"})).holds());
  EXPECT_TRUE(is_subcomplete(*p, p->subset({"0", "a", "1", "2"})).holds());

  auto d = diamond();
  const ElemSet t = d->subset({"0", "a", "1"});
  ASSERT_TRUE(oracle::subcomplete(oracle::Order(*d), oracle::to_idx(t)));
  EXPECT_TRUE(is_subcomplete(*d, t).holds());
}

TEST(IsSubcomplete, AgreesWithExhaustiveOracleOnEverySubset) {
  for (const auto& l : curated_lattices()) {
    oracle::Order o(*l);
    for_each_nonempty_subset(l->all(), [&](const ElemSet& t) {
      const bool expected = oracle::subcomplete(o, oracle::to_idx(t));
      CheckReport r = is_subcomplete(*l, t);
      EXPECT_EQ(r.holds(), expected);
      if (!r.holds()) {
        // Witness re-check: the named pair escapes T.
        ASSERT_EQ(r.witness.size(), 2u);
        const Elem x = l->index_of(r.witness[0]), y = l->index_of(r.witness[1]);
        EXPECT_TRUE(!t.contains(l->meet(x, y)) || !t.contains(l->join(x, y)));
      }
    });
  }
}

TEST(IsChainSubcomplete, Examples) {
  auto p = pentagon_like();
  const ElemSet t = p->subset({"0", "a", "b", "2"});
  EXPECT_TRUE(is_chain_subcomplete(*p, t).holds());
  EXPECT_FALSE(is_subcomplete(*p, t).holds());
  EXPECT_TRUE(is_chain_subcomplete(*p, p->subset({"b"})).holds());
  auto d = diamond();
  EXPECT_TRUE(is_chain_subcomplete(*d, d->subset({"a", "b"}), Direction::kUp).holds());
  EXPECT_TRUE(is_chain_subcomplete(*d, d->subset({"a", "b"}), Direction::kDown).holds());
}

TEST(IsChainSubcomplete, AlwaysHoldsOnFiniteLatticesAndIsImpliedBySubcomplete) {
  for (const auto& l : curated_lattices()) {
    oracle::Order o(*l);
    for_each_nonempty_subset(l->all(), [&](const ElemSet& t) {
      EXPECT_TRUE(oracle::chain_subcomplete(o, oracle::to_idx(t)));
      EXPECT_TRUE(is_chain_subcomplete(*l, t, Direction::kBoth).holds());
      if (is_subcomplete(*l, t).holds()) {
        EXPECT_TRUE(is_chain_subcomplete(*l, t, Direction::kBoth).holds());
      }
    });
  }
}

TEST(IsJoinComplete, Examples) {
  for (const auto& l : curated_lattices()) EXPECT_TRUE(is_join_complete(l->poset()).holds());

  CheckReport r = is_join_complete(build_poset({"x", "y"}, {}));
  EXPECT_FALSE(r.holds());
  EXPECT_THAT(r.witness, ElementsAre("x", "y"));

  r = is_join_complete(build_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}));
  EXPECT_FALSE(r.holds());
  EXPECT_THAT(r.witness, ElementsAre("a", "b"));
}

TEST(LemmaJointmin, Examples) {
  CheckReport r = verify_lemma_jointmin(diamond()->poset());
  EXPECT_EQ(r.outcome, Outcome::kHolds);
  EXPECT_EQ(verify_lemma_jointmin(build_poset({"x"}, {})).outcome, Outcome::kHolds);

  // Two minimal points below a common top: join-complete, but no least element.
  r = verify_lemma_jointmin(build_poset({"p", "q", "t"}, {{"p", "t"}, {"q", "t"}}));
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);
  EXPECT_THAT(r.detail, HasSubstr("hypotheses not met"));
  EXPECT_THAT(r.witness, ElementsAre("p", "q"));

  // Two minimal points and nothing above them: join-completeness fails too.
  r = verify_lemma_jointmin(build_poset({"p", "q"}, {}));
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);
}

// Random DAG on n points with i < j edges, used as a poset corpus.
Poset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::bernoulli_distribution edge(0.35);
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(names[i], names[j]);
  return build_poset(names, pairs);
}

TEST(LemmaJointmin, NeverViolatedOnRandomPosets) {
  std::mt19937_64 rng(7);
  int met = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Poset p = random_poset(rng, 1 + trial % 7);
    CheckReport r = verify_lemma_jointmin(p);
    ASSERT_NE(r.outcome, Outcome::kConclusionViolated) << r.detail;
    if (r.holds()) ++met;
  }
  EXPECT_GT(met, 0);
}

TEST(Veinott, Examples) {
  auto d = diamond();
  CheckReport r = veinott_check(*d, d->subset({"0", "a"}), d->subset({"0", "a", "1"}),
                                d->index_of("a"), Direction::kDown);
  EXPECT_EQ(r.outcome, Outcome::kHolds);
  EXPECT_THAT(r.detail, HasSubstr("inf(A)=0"));

  r = veinott_check(*d, d->subset({"b"}), d->subset({"b", "1"}), d->index_of("b"),
                    Direction::kDown);
  EXPECT_EQ(r.outcome, Outcome::kHolds);

  auto p = pentagon_like();
  r = veinott_check(*p, p->subset({"a", "b"}), p->subset({"0", "a", "b"}), p->index_of("a"),
                    Direction::kDown);
  EXPECT_EQ(r.outcome, Outcome::kHolds);

  // meet(b, ...) checks fail when B lacks 0.
  r = veinott_check(*p, p->subset({"a", "b"}), p->subset({"a", "b"}), p->index_of("a"),
                    Direction::kDown);
  EXPECT_EQ(r.outcome, Outcome::kHypothesesNotMet);

  EXPECT_EQ(error_code_of([&] {
              veinott_check(*d, d->subset({"a"}), d->subset({"b"}), d->index_of("a"),
                            Direction::kDown);
            }),
            Errc::kXNotInIntersection);
}

TEST(Veinott, ConclusionNeverViolatedWhenHypothesesHold) {
  std::mt19937_64 rng(11);
  int hits = 0;
  for (const auto& l : curated_lattices()) {
    const auto n = static_cast<Elem>(l->size());
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
    for (int trial = 0; trial < 300; ++trial) {
      ElemSet a(n), b(n);
      const auto ma = mask(rng), mb = mask(rng);
      for (Elem e = 0; e < n; ++e) {
        if (ma >> e & 1U) a.insert(e);
        if (mb >> e & 1U) b.insert(e);
      }
      const ElemSet both = a.intersect(b);
      if (both.empty()) continue;
      for (Direction dir : {Direction::kDown, Direction::kUp}) {
        CheckReport r = veinott_check(*l, a, b, both.front(), dir);
        ASSERT_NE(r.outcome, Outcome::kConclusionViolated) << r.detail;
        if (r.holds()) ++hits;
      }
    }
  }
  EXPECT_GT(hits, 50);
}

TEST(LatticeLaws, TablesSatisfyLatticeAxioms) {
  for (const auto& l : curated_lattices()) {
    const auto n = static_cast<Elem>(l->size());
    for (Elem x = 0; x < n; ++x) {
      EXPECT_EQ(l->meet(x, x), x);
      EXPECT_EQ(l->join(x, x), x);
      EXPECT_TRUE(l->le(l->bottom(), x));
      EXPECT_TRUE(l->le(x, l->top()));
      for (Elem y = 0; y < n; ++y) {
        EXPECT_EQ(l->meet(x, y), l->meet(y, x));
        EXPECT_EQ(l->join(x, y), l->join(y, x));
        EXPECT_EQ(l->join(x, l->meet(x, y)), x);
        EXPECT_EQ(l->meet(x, l->join(x, y)), x);
        EXPECT_EQ(l->le(x, y), l->meet(x, y) == x);
        EXPECT_EQ(l->le(x, y), l->join(x, y) == y);
      }
    }
  }
}

TEST(LatticeLaws, SupInfAgreeWithDefinitionalScan) {
  for (const auto& l : curated_lattices()) {
    oracle::Order o(*l);
    for_each_nonempty_subset(l->all(), [&](const ElemSet& a) {
      EXPECT_EQ(static_cast<int>(sup_subset(*l, a)), *o.lub_in(o.all(), oracle::to_idx(a)));
      EXPECT_EQ(static_cast<int>(inf_subset(*l, a)), *o.glb_in(o.all(), oracle::to_idx(a)));
    });
  }
}

TEST(Restriction, UpperIntervalIsALatticeWithParentOrder) {
  auto p = pentagon_like();
  Restriction r = restrict_to(*p, upper_interval(*p, p->index_of("a")));
  EXPECT_EQ(r.lattice->size(), 3u);  // a, 1, 2
  EXPECT_EQ(r.lattice->name(r.lattice->bottom()), "a");
  EXPECT_EQ(r.lattice->name(r.lattice->top()), "2");
  EXPECT_FALSE(r.from_parent[p->index_of("b")].has_value());
}

TEST(Dual, SwapsMeetJoinAndExtremes) {
  auto p = pentagon_like();
  FiniteLattice d = p->dual();
  EXPECT_EQ(d.bottom(), p->top());
  EXPECT_EQ(d.join(p->index_of("a"), p->index_of("b")), p->index_of("0"));
  EXPECT_TRUE(d.le(p->index_of("2"), p->index_of("0")));
}

}  // namespace
}  // namespace latfix
