#include <gtest/gtest.h>

#include "actwfs/catalog.hpp"
#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"
#include "actwfs/universe.hpp"
#include "oracle/oracle.hpp"

using namespace actwfs;
namespace cat = actwfs::catalog;

namespace {

Act c2() { return cat::c2_regular(); }
Act c2_point() { return cat::theta(cat::cyclic2()); }

// C2 -> C2 ⊔ T and C2 -> Θ over C2
ConstructionResult c2_plus_point() { return coproduct({c2(), c2_point()}); }

}  // namespace

TEST(EnumerateMaps, Examples) {
  auto ss = enumerate_maps(cat::sz(), cat::sz());
  ASSERT_EQ(ss.size(), 2u);
  EXPECT_TRUE(ss[0] == identity_map(cat::sz()));
  EXPECT_EQ(ss[1].values(), (std::vector<Index>{1, 1}));
  auto ts = enumerate_maps(cat::theta(cat::zero_monoid()), cat::sz());
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].values(), (std::vector<Index>{1}));
  EXPECT_EQ(enumerate_maps(cat::a2(), cat::a2()).size(), 2u);
}

TEST(EnumerateMaps, AgreesWithBruteForce) {
  std::vector<FiniteMonoid> ms = oracle::monoids(3);
  for (const auto& m : cat::monoids_up_to_2()) ms.push_back(m);
  for (const auto& m : ms) {
    auto u = Universe::enumerate(m, Side::right, 3);
    for (const auto& a : u.acts()) {
      for (const auto& b : u.acts()) {
        auto fast = enumerate_maps(a, b);
        auto slow = oracle::maps(a, b);
        ASSERT_EQ(fast.size(), slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
          EXPECT_TRUE(fast[i] == slow[i]) << "lexicographic order differs";
        }
      }
    }
  }
}

TEST(EnumerateMaps, FreenessCount) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = shared_universe(m, Side::right, 4);
    const Act s = regular_act(m, Side::right);
    for (const auto& a : u->acts()) {
      EXPECT_EQ(count_maps(s, a), a.size());
    }
  }
}

TEST(Filler, Identity) {
  auto id = identity_map(cat::a2());
  auto h = find_filler({id, id, id, id});
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(*h == id);
}

TEST(Filler, NoFillerOverC2) {
  auto sum = c2_plus_point();
  ActMap to_point(c2(), c2_point(), {0, 0});
  ActMap bottom(sum.object, c2_point(), {0, 0, 0});
  Square sq{sum.leg("in0"), to_point, identity_map(c2()), bottom};
  ASSERT_TRUE(sq.commutes());
  EXPECT_FALSE(find_filler(sq).has_value());
  EXPECT_TRUE(enumerate_maps(c2_point(), c2()).empty());
}

TEST(Filler, NonCommutingRejected) {
  auto id = identity_map(cat::sz());
  ActMap z(cat::sz(), cat::sz(), {1, 1});
  EXPECT_THROW(find_filler({id, id, id, z}), PreconditionError);
}

TEST(Filler, UnitaryAgainstSplitOverZ) {
  auto u = shared_universe(cat::zero_monoid(), Side::right, 3);
  std::vector<ActMap> ls, rs;
  for (const auto& f : u->maps()) {
    if (is_unitary(f)) ls.push_back(f);
    if (find_section(f)) rs.push_back(f);
  }
  std::size_t squares = 0;
  for (const auto& l : ls) {
    for (const auto& r : rs) {
      for (const auto& sq : enumerate_squares(l, r)) {
        ++squares;
        EXPECT_TRUE(find_filler(sq).has_value());
      }
    }
  }
  EXPECT_GT(squares, 0u);
}

TEST(Filler, AgreesWithBruteForce) {
  auto u = shared_universe(cat::zero_monoid(), Side::right, 2);
  for (const auto& l : u->maps()) {
    for (const auto& r : u->maps()) {
      for (const auto& sq : enumerate_squares(l, r)) {
        auto h = find_filler(sq);
        auto all = oracle::fillers(sq.left, sq.right, sq.top, sq.bottom);
        ASSERT_EQ(h.has_value(), !all.empty());
        if (h) {
          EXPECT_TRUE(*h == all.front());
        }
      }
    }
  }
}

TEST(Section, Examples) {
  ActMap to_point(cat::sz(), cat::theta(cat::zero_monoid()), {0, 0});
  auto s = find_section(to_point);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->values(), (std::vector<Index>{1}));
  EXPECT_FALSE(find_section(ActMap(c2(), c2_point(), {0, 0})).has_value());
  EXPECT_TRUE(*find_section(identity_map(cat::a2())) == identity_map(cat::a2()));
}

TEST(Section, ExistsIffSurjectiveWithBruteSection) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = shared_universe(m, Side::right, 3);
    for (const auto& g : u->maps()) {
      bool brute = false;
      for (const auto& s : oracle::maps(g.target(), g.source())) {
        if (compose(g, s) == identity_map(g.target())) {
          brute = true;
          break;
        }
      }
      auto s = find_section(g);
      EXPECT_EQ(s.has_value(), brute);
      if (s) {
        EXPECT_TRUE(is_epi(g));
        EXPECT_TRUE(compose(g, *s) == identity_map(g.target()));
      }
    }
  }
}

TEST(Retraction, Examples) {
  auto sum = coproduct({cat::sz(), cat::theta(cat::zero_monoid())});
  auto r = find_retraction(sum.leg("in0"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->values(), (std::vector<Index>{0, 1, 1}));
  EXPECT_TRUE(*find_retraction(identity_map(cat::sz())) == identity_map(cat::sz()));
  auto zr = find_retraction(cat::zero_inclusion());
  ASSERT_TRUE(zr.has_value());
  EXPECT_EQ(zr->values(), (std::vector<Index>{0, 0}));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(find_isomorphism(cat::a2(), cat::a2()).has_value());
  EXPECT_FALSE(find_isomorphism(cat::sz(), cat::theta(cat::zero_monoid())).has_value());
  auto u = shared_universe(cat::zero_monoid(), Side::right, 3);
  for (const auto& f : u->maps()) {
    auto p = pushout(f, identity_map(f.source()));
    EXPECT_TRUE(find_isomorphism(p.object, f.target()).has_value());
  }
}

TEST(MapRetract, Examples) {
  auto f = cat::zero_inclusion();
  auto w = find_map_retract(f, f);
  ASSERT_TRUE(w.has_value());
  // the equations hold; the least witness need not be the identity pair
  EXPECT_TRUE(compose(w->beta, w->alpha) == identity_map(f.target()));
  EXPECT_TRUE(compose(w->alpha, f) == f);

  auto sum = coproduct({cat::sz(), cat::theta(cat::zero_monoid())});
  auto id = identity_map(cat::sz());
  auto w2 = find_map_retract(sum.leg("in0"), id);
  ASSERT_TRUE(w2.has_value());
  EXPECT_TRUE(w2->alpha == sum.leg("in0"));
  EXPECT_TRUE(compose(w2->beta, sum.leg("in0")) == id);

  auto c = c2_plus_point();
  EXPECT_FALSE(find_map_retract(c.leg("in0"), identity_map(c2())).has_value());
}

TEST(MapRetract, WitnessesVerify) {
  auto u = shared_universe(cat::zero_monoid(), Side::right, 2);
  for (const auto& f : u->maps()) {
    for (const auto& g : u->maps()) {
      if (!(f.source() == g.source())) continue;
      if (auto w = find_map_retract(f, g)) {
        EXPECT_TRUE(compose(w->beta, w->alpha) == identity_map(g.target()));
        EXPECT_TRUE(compose(w->alpha, g) == f);
        EXPECT_TRUE(compose(w->beta, f) == g);
      }
    }
  }
}
