#include <gtest/gtest.h>

#include "support.hpp"
#include "uninorm/corpus.hpp"
#include "uninorm/latticegen.hpp"

using namespace uninorm;
using uninorm::test::chain;
using uninorm::test::diamond;
using uninorm::test::make;
using uninorm::test::set_of;

TEST(Build, TwoChain) {
  auto l = make({"0", "1"}, {{"0", "1"}});
  EXPECT_EQ(l->size(), 2u);
  EXPECT_EQ(l->join(l->id("0"), l->id("1")), l->id("1"));
  EXPECT_EQ(l->bottom(), l->id("0"));
  EXPECT_EQ(l->top(), l->id("1"));
}

TEST(Build, L13JoinOfTAndM) {
  auto lp = load_corpus("L13").lattice;
  const BoundedLattice& l = *lp;
  EXPECT_EQ(l.join(l.id("t"), l.id("m")), l.id("d"));
  EXPECT_EQ(l.join(l.id("m"), l.id("q")), l.id("d"));
  EXPECT_TRUE(l.parallel(l.id("t"), l.id("m")));
}

TEST(Build, DuplicateNameRejected) {
  EXPECT_THROW(make({"0", "a", "a", "1"}, {{"0", "a"}, {"a", "1"}}), InvalidLattice);
}

TEST(Build, EmptyNameRejected) { EXPECT_THROW(make({"0", "", "1"}, {{"0", "1"}}), InvalidLattice); }

TEST(Build, UnknownNameInPair) { EXPECT_THROW(make({"0", "1"}, {{"0", "z"}}), UnknownElement); }

TEST(Build, CycleIsNotAPoset) {
  EXPECT_THROW(make({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}}), NotAPoset);
}

TEST(Build, FullModeRequiresTransitivity) {
  EXPECT_THROW(BoundedLattice::build({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, RelationMode::full), NotAPoset);
  auto l = BoundedLattice::build({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}}, RelationMode::full);
  EXPECT_EQ(l.size(), 3u);
}

TEST(Build, MissingTopIsNotBounded) {
  EXPECT_THROW(make({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}), NotBounded);
}

TEST(Build, TwoUpperBoundsIsNotALattice) {
  // a, b both below c and d, with c, d incomparable.
  EXPECT_THROW(make({"0", "a", "b", "c", "d", "1"},
                    {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}),
               NotALattice);
}

TEST(Build, TooManyElements) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("x" + std::to_string(i));
  EXPECT_THROW(make(names, {}), InvalidLattice);
}

TEST(Build, SixtyFourElementChain) {
  auto l = chain(64);
  EXPECT_EQ(l->size(), 64u);
  EXPECT_TRUE(l->leq(l->bottom(), l->top()));
  EXPECT_EQ(l->all().size(), 64u);
}

TEST(Order, BottomBelowEverything) {
  auto l = load_corpus("L11").lattice;
  for (ElementId x : l->all()) {
    EXPECT_TRUE(l->leq(l->bottom(), x));
    EXPECT_TRUE(l->leq(x, l->top()));
    EXPECT_FALSE(l->parallel(x, x));
    EXPECT_EQ(l->join(x, l->top()), l->top());
  }
}

TEST(Order, ExactlyOneRelation) {
  for (const auto& id : corpus_ids()) {
    auto lp = load_corpus(id).lattice;
    const BoundedLattice& l = *lp;
    for (ElementId a : l.all()) {
      for (ElementId b : l.all()) {
        int cases = (l.lt(a, b) ? 1 : 0) + (l.lt(b, a) ? 1 : 0) + (a == b ? 1 : 0) + (l.parallel(a, b) ? 1 : 0);
        EXPECT_EQ(cases, 1) << id;
      }
    }
  }
}

TEST(Order, JoinMeetLaws) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    BoundedLattice l = gen_lattice(cfg);
    for (ElementId a : l.all()) {
      EXPECT_EQ(l.join(a, a), a);
      EXPECT_EQ(l.meet(a, a), a);
      for (ElementId b : l.all()) {
        EXPECT_EQ(l.join(a, b), l.join(b, a));
        EXPECT_EQ(l.meet(a, b), l.meet(b, a));
        EXPECT_EQ(l.meet(a, l.join(a, b)), a);
        EXPECT_EQ(l.join(a, l.meet(a, b)), a);
        EXPECT_TRUE(l.leq(a, l.join(a, b)));
        EXPECT_TRUE(l.leq(l.meet(a, b), a));
        for (ElementId c : l.all()) {
          EXPECT_EQ(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
          EXPECT_EQ(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
        }
      }
    }
  }
}

TEST(Order, JoinIsLeastUpperBound) {
  auto l = load_corpus("L12").lattice;
  for (ElementId a : l->all()) {
    for (ElementId b : l->all()) {
      ElementId j = l->join(a, b);
      for (ElementId u : l->up_set(a) & l->up_set(b)) EXPECT_TRUE(l->leq(j, u));
    }
  }
}

TEST(Interval, Basics) {
  auto l = load_corpus("L11").lattice;
  EXPECT_EQ(l->interval(l->bottom(), l->top()), l->all());
  for (ElementId x : l->all()) EXPECT_EQ(l->interval(x, x), ElementSet(std::uint64_t{1} << x.index()));
  EXPECT_EQ(l->interval(l->bottom(), l->id("rho")), set_of(*l, {"0", "q", "e", "k", "c", "rho"}));
}

TEST(Interval, HalfOpenAndEmpty) {
  auto l = load_corpus("L11").lattice;
  ElementId e = l->id("e"), rho = l->id("rho");
  EXPECT_EQ(l->interval(e, rho, Bound::open, Bound::closed), set_of(*l, {"c", "rho"}));
  EXPECT_EQ(l->interval(e, rho, Bound::closed, Bound::open), set_of(*l, {"e", "c"}));
  EXPECT_EQ(l->interval(e, rho, Bound::open, Bound::open), set_of(*l, {"c"}));
  EXPECT_TRUE(l->interval(l->id("k"), e).empty());
  EXPECT_TRUE(l->interval(rho, e).empty());
}

TEST(Regions, SelfRelative) {
  auto l = load_corpus("L11").lattice;
  for (ElementId a : l->all()) {
    RegionSets r = region_sets(*l, a, a);
    EXPECT_TRUE(r.incomparable_a_comparable_b.empty());
    EXPECT_EQ(r.incomparable_both, r.incomparable_a);
    EXPECT_EQ(r.incomparable_a | r.comparable_a, l->all());
    EXPECT_TRUE((r.incomparable_a & r.comparable_a).empty());
  }
}

TEST(Regions, ChainHasNoIncomparables) {
  auto l = chain(6);
  for (ElementId a : l->all()) EXPECT_TRUE(region_sets(*l, a, l->top()).incomparable_a.empty());
}

TEST(Regions, L11RelativeToNeutralAndThreshold) {
  auto l = load_corpus("L11").lattice;
  ElementId e = l->id("e"), rho = l->id("rho");
  EXPECT_EQ(region_sets(*l, e, rho).incomparable_both, set_of(*l, {"t", "m"}));
  EXPECT_EQ(region_sets(*l, e, rho).incomparable_a_comparable_b, set_of(*l, {"k"}));
  EXPECT_EQ(region_sets(*l, rho, e).incomparable_a_comparable_b, set_of(*l, {"s"}));
}

TEST(Dual, ChainAndInvolution) {
  auto c = chain(2);
  BoundedLattice d = c->dual();
  EXPECT_EQ(d.bottom(), c->top());
  EXPECT_EQ(d.top(), c->bottom());
  auto l = load_corpus("L11").lattice;
  EXPECT_EQ(l->dual().dual(), *l);
  BoundedLattice dl = l->dual();
  for (ElementId a : l->all()) {
    for (ElementId b : l->all()) {
      EXPECT_EQ(dl.join(a, b), l->meet(a, b));
      EXPECT_EQ(dl.meet(a, b), l->join(a, b));
      EXPECT_EQ(dl.leq(a, b), l->leq(b, a));
    }
  }
}

TEST(Covers, RebuildFromCovers) {
  auto l = load_corpus("L22").lattice;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [a, b] : l->covers()) pairs.emplace_back(l->name(a), l->name(b));
  EXPECT_EQ(*make(l->names(), pairs), *l);
}

TEST(Covers, DiamondCovers) { EXPECT_EQ(diamond()->covers().size(), 4u); }

TEST(ElementSetTest, Iteration) {
  ElementSet s;
  s.insert(ElementId(3));
  s.insert(ElementId(0));
  s.insert(ElementId(63));
  std::vector<ElementId> got(s.begin(), s.end());
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0], ElementId(0));
  EXPECT_EQ(got[2], ElementId(63));
  EXPECT_EQ(s.first(), ElementId(0));
  s.erase(ElementId(0));
  EXPECT_EQ(s.first(), ElementId(3));
  EXPECT_FALSE(ElementSet().first());
}

TEST(Describe, UsesNames) {
  auto l = diamond();
  EXPECT_NE(describe(*l, set_of(*l, {"a", "b"})).find("a"), std::string::npos);
}
