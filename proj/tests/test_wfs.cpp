#include <gtest/gtest.h>

#include "actwfs/catalog.hpp"
#include "actwfs/centred.hpp"
#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"
#include "actwfs/universe.hpp"
#include "actwfs/wfs.hpp"

using namespace actwfs;
namespace cat = actwfs::catalog;
using K = ClassDescriptor::Kind;

namespace {

const FiniteMonoid& Z() {
  static const FiniteMonoid z = cat::zero_monoid();
  return z;
}

Act theta() { return cat::theta(Z()); }
Act c2() { return cat::c2_regular(); }
Act c2_point() { return cat::theta(cat::cyclic2()); }

ClassDescriptor unitary() { return ClassDescriptor::of(K::unitary); }
ClassDescriptor split_epi() { return ClassDescriptor::of(K::split_epi); }

}  // namespace

TEST(UnitarySplit, Examples) {
  auto f = factor_unitary_split(cat::zero_inclusion());
  EXPECT_EQ(f.left.target().size(), 3u);
  EXPECT_TRUE(compose(f.right, f.left) == f.original);
  EXPECT_TRUE(f.left_evidence.holds);
  EXPECT_TRUE(f.right_evidence.holds);
  auto s = find_section(f.right);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(compose(f.right, *s) == identity_map(cat::sz()));

  auto fold = factor_unitary_split(identity_map(cat::a2()));
  EXPECT_EQ(fold.left.target().size(), 4u);
  EXPECT_TRUE(find_section(fold.right).has_value());
}

TEST(UnitarySplit, PiecesInClassesOverUniverse) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = shared_universe(m, Side::right, 3);
    for (const auto& h : u->maps()) {
      auto f = factor_unitary_split(h);
      EXPECT_TRUE(compose(f.right, f.left) == h);
      EXPECT_TRUE(in_class(f.left, unitary()).holds);
      EXPECT_TRUE(in_class(f.right, split_epi()).holds);
    }
  }
}

TEST(Precover, Examples) {
  auto p = precover(cat::a2(), ActClass::explicit_list({cat::sz()}));
  ASSERT_TRUE(p.map.has_value());
  EXPECT_EQ(p.summands.size(), 2u);
  EXPECT_EQ(p.map->source().size(), 4u);
  EXPECT_TRUE(is_epi(*p.map));

  auto none = precover(c2(), ActClass::explicit_list({c2_point()}));
  EXPECT_FALSE(none.map.has_value());
  EXPECT_FALSE(none.nonexistence.empty());

  auto t = precover(theta(), ActClass::explicit_list({theta()}));
  ASSERT_TRUE(t.map.has_value());
  EXPECT_TRUE(is_iso(*t.map));
}

TEST(Precover, RejectsImplicitClass) {
  EXPECT_THROW(precover(cat::sz(), ActClass::fp_bounded(2)), PreconditionError);
}

TEST(CheckPrecover, Examples) {
  auto x = ActClass::explicit_list({cat::sz()});
  auto p = precover(cat::a2(), x);
  EXPECT_TRUE(check_precover(*p.map, x, CoverMode::precover).holds);
  auto cover = check_precover(*p.map, x, CoverMode::cover);
  EXPECT_FALSE(cover.holds);
  ASSERT_FALSE(cover.maps.empty());
  EXPECT_FALSE(is_iso(cover.maps.front()));

  EXPECT_TRUE(check_precover(identity_map(cat::sz()), x, CoverMode::cover).holds);

  // z only reaches the fixed point, so the map from SZ hitting a is missed
  ActMap b_only(theta(), cat::a2(), {1});
  auto miss = check_precover(b_only, x, CoverMode::precover);
  EXPECT_FALSE(miss.holds);
  EXPECT_FALSE(miss.maps.empty());
}

TEST(CheckPrecover, CanonicalPrecoversPass) {
  const std::vector<Act> pool{cat::sz(), theta(), cat::a2()};
  auto u = shared_universe(Z(), Side::right, 3);
  for (std::size_t mask = 1; mask < 8; ++mask) {
    std::vector<Act> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) members.push_back(pool[i]);
    }
    auto x = ActClass::explicit_list(members);
    for (const auto& a : u->acts()) {
      auto p = precover(a, x);
      ASSERT_TRUE(p.map.has_value());
      EXPECT_TRUE(check_precover(*p.map, x, CoverMode::precover).holds);
    }
  }
}

TEST(FactorViaPrecover, Examples) {
  auto x = ActClass::explicit_list({cat::sz()});
  ActMap f(theta(), cat::a2(), {1});
  auto fac = factor_via_precover(f, x);
  EXPECT_EQ(fac.left.target().size(), 5u);
  EXPECT_TRUE(compose(fac.right, fac.left) == f);
  EXPECT_TRUE(fac.left_evidence.holds);
  EXPECT_TRUE(fac.right_evidence.holds);

  EXPECT_THROW(factor_via_precover(identity_map(c2()), ActClass::explicit_list({c2_point()})),
               NoPrecover);
}

TEST(FactorViaPrecover, FiniteActsGiveFactorsInPureEpis) {
  std::vector<Act> small = enumerate_acts(Z(), Side::right, 1);
  for (const auto& a : enumerate_acts(Z(), Side::right, 2)) small.push_back(a);
  // the complement is a coproduct of members
  auto x = ActClass::explicit_list(small, true);
  ActMap f(cat::sz(), theta(), {0, 0});
  auto fac = factor_via_precover(f, x);
  EXPECT_TRUE(in_class(fac.right, ClassDescriptor::pure_epi(2)).holds);
  EXPECT_TRUE(in_class(fac.left, ClassDescriptor::unitary_in(x)).holds);
}

TEST(FactorViaPrecover, ProjectiveListLiftsAgainstUnitary) {
  auto u = shared_universe(Z(), Side::right, 2);
  auto pr = ActClass::projective_bounded(u);
  std::vector<Act> projective;
  for (const auto& a : u->acts()) {
    if (contains(pr, a).holds) projective.push_back(a);
  }
  auto x = ActClass::explicit_list(projective);
  auto left = ClassDescriptor::unitary_in(x);
  std::vector<ActMap> lefts;
  for (const auto& f : u->maps()) {
    if (in_class(f, left).holds) lefts.push_back(f);
  }
  for (const auto& f : u->maps()) {
    auto fac = factor_via_precover(f, x);
    EXPECT_TRUE(compose(fac.right, fac.left) == f);
    EXPECT_TRUE(is_epi(fac.right));
    EXPECT_TRUE(has_lifting(LiftSide::right, fac.right, lefts).holds);
  }
}

TEST(WfsVerify, UnitarySplitPasses) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = shared_universe(m, Side::right, 3);
    auto r = wfs_verify(unitary(), split_epi(), *u, factor_unitary_split);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.maps_checked, u->maps().size());
    EXPECT_GT(r.squares_checked, 0u);
  }
}

TEST(WfsVerify, C2UniverseOfTwoIsTooSmallToSeeFailures) {
  auto u = shared_universe(cat::cyclic2(), Side::right, 2);
  EXPECT_TRUE(wfs_verify(unitary(), ClassDescriptor::of(K::epis), *u, factor_unitary_split).passed);
}

TEST(WfsVerify, UnitaryEpiFailsOverC2) {
  // the failing square needs C2 ⊔ Θ, of size 3
  auto u = shared_universe(cat::cyclic2(), Side::right, 3);
  auto r = wfs_verify(unitary(), ClassDescriptor::of(K::epis), *u, factor_unitary_split);
  EXPECT_FALSE(r.passed);
  bool lifting = false;
  for (const auto& v : r.violations) lifting = lifting || v.condition == "lifting";
  EXPECT_TRUE(lifting);
}

TEST(WfsVerify, UnitaryEpiPassesOverSmallZ) {
  // every epi between acts of size at most 3 over Z splits
  auto u = shared_universe(Z(), Side::right, 3);
  for (const auto& f : u->maps()) {
    if (is_epi(f)) EXPECT_TRUE(find_section(f).has_value());
  }
  EXPECT_TRUE(wfs_verify(unitary(), ClassDescriptor::of(K::epis), *u, factor_unitary_split).passed);
}

TEST(WfsVerify, MonoEpiFailsOverC2WithWitness) {
  auto u = shared_universe(cat::cyclic2(), Side::right, 3);
  auto r = wfs_verify(ClassDescriptor::of(K::mono), ClassDescriptor::of(K::epis), *u,
                      factor_unitary_split);
  EXPECT_FALSE(r.passed);
  ActMap collapse(c2(), c2_point(), {0, 0});
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.condition != "lifting") continue;
    for (const auto& w : v.witnesses) found = found || w == collapse;
  }
  EXPECT_TRUE(found);
}

TEST(WfsVerify, CellPushoutsLiftAgainstRightBox) {
  auto u = shared_universe(Z(), Side::right, 3);
  const std::vector<ActMap> c{cat::zero_inclusion()};
  auto right = relative_box(c, *u, LiftSide::right);
  const ActMap& gen = c.front();
  std::vector<ActMap> legs;
  for (const auto& w : u->maps()) {
    if (!(w.source() == gen.source())) continue;
    auto p = pushout(gen, w);
    legs.push_back(p.leg("g"));
    EXPECT_TRUE(has_lifting(LiftSide::left, legs.back(), right).holds);
  }
  ASSERT_FALSE(legs.empty());
  for (const auto& a : legs) {
    for (const auto& b : legs) {
      if (a.target() == b.source()) {
        EXPECT_TRUE(has_lifting(LiftSide::left, compose(b, a), right).holds);
      }
    }
  }
}

TEST(FMono, PushoutsPreserveReesQuotient) {
  const std::size_t n = 2;
  auto u = shared_universe(Z(), Side::right, 3);
  std::size_t checked = 0;
  for (const auto& f : u->maps()) {
    if (!in_class(f, ClassDescriptor::flat_rees_mono(n)).holds) continue;
    for (const auto& w : u->maps()) {
      if (!(w.source() == f.source())) continue;
      ++checked;
      auto p = pushout(f, w);
      const ActMap& g = p.leg("g");
      const ActMap& v = p.leg("v");
      ASSERT_TRUE(is_mono(g));
      auto yx = rees_quotient(f);
      auto pc = rees_quotient(g);
      std::vector<Index> h(yx.object.size());
      for (Index y = 0; y < f.target().size(); ++y) {
        h[yx.leg("projection")(y)] = pc.leg("projection")(v(y));
      }
      ActMap hm(yx.object, pc.object, h);
      ASSERT_TRUE(validate(hm).empty());
      EXPECT_TRUE(is_iso(hm));
      EXPECT_TRUE(in_class(g, ClassDescriptor::flat_rees_mono(n)).holds);
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(FMono, ClosedUnderCompositionAndRetracts) {
  const std::size_t n = 2;
  auto u = shared_universe(Z(), Side::right, 3);
  auto fm = ClassDescriptor::flat_rees_mono(n);
  std::vector<ActMap> members;
  for (const auto& f : u->maps()) {
    if (in_class(f, fm).holds) members.push_back(f);
  }
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (a.target() == b.source()) EXPECT_TRUE(in_class(compose(b, a), fm).holds);
    }
  }
  for (const auto& f : members) {
    for (const auto& g : u->maps()) {
      if (!(g.source() == f.source())) continue;
      if (find_map_retract(f, g)) EXPECT_TRUE(in_class(g, fm).holds);
    }
  }
}

TEST(Centred, ZeroActIsItsOwnStar) {
  auto zero = centred_zero(Z(), Side::right);
  auto x = ActClass::centred_list({zero});
  auto r = centred_wfs_precover(zero, ClassDescriptor::centred_unitary_in(x),
                                ClassDescriptor::projective_right(x),
                                [&](const ActMap& f) { return factor_centred_precover(f, x); },
                                x.members.front());
  EXPECT_TRUE(find_isomorphism(r.a_star, zero).has_value());
  EXPECT_TRUE(is_iso(r.precover_map));
}

TEST(Centred, StarIsWedgeOfProbeCopies) {
  auto x = ActClass::centred_list({cat::sz().with_centred(true)});
  auto factorizer = [&](const ActMap& f) { return factor_centred_precover(f, x); };
  auto u = shared_universe(Z(), Side::right, 3);
  for (const auto& a0 : u->acts()) {
    if (fixed_points(a0).size() != 1) continue;
    const Act a = a0.with_centred(true);
    auto r = centred_wfs_precover(a, ClassDescriptor::centred_unitary_in(x),
                                  ClassDescriptor::projective_right(x), factorizer,
                                  x.members.front());
    std::vector<Act> copies(count_maps(x.members.front(), a), x.members.front());
    auto wedge = centred_coproduct(copies).object;
    EXPECT_TRUE(find_isomorphism(r.a_star, wedge).has_value());
    EXPECT_TRUE(r.left_membership.holds);
    EXPECT_TRUE(r.right_membership.holds);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.unlifted.empty());
    for (const auto& [p, k] : r.fillers) {
      EXPECT_TRUE(compose(r.precover_map, k) == p);
    }
  }
}

TEST(Centred, RequiresCentredInputs) {
  auto x = ActClass::centred_list({cat::sz().with_centred(true)});
  auto factorizer = [&](const ActMap& f) { return factor_centred_precover(f, x); };
  EXPECT_THROW(centred_wfs_precover(cat::sz(), ClassDescriptor::centred_unitary_in(x),
                                    ClassDescriptor::projective_right(x), factorizer,
                                    x.members.front()),
               PreconditionError);
  auto point = centred_zero(cat::cyclic2(), Side::right);
  auto y = ActClass::centred_list({point});
  EXPECT_THROW(centred_wfs_precover(point, ClassDescriptor::centred_unitary_in(y),
                                    ClassDescriptor::projective_right(y),
                                    [&](const ActMap& f) { return factor_centred_precover(f, y); },
                                    point),
               PreconditionError);
}
