#include <gtest/gtest.h>

#include <random>

#include "actwfs/catalog.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/core.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"
#include "actwfs/universe.hpp"
#include "oracle/oracle.hpp"

using namespace actwfs;
namespace cat = actwfs::catalog;

TEST(Validate, ZeroMonoidIsValid) {
  EXPECT_TRUE(validate(cat::zero_monoid()).empty());
  EXPECT_EQ(cat::zero_monoid().zero(), Index{1});
}

TEST(Validate, CyclicGroupIsValid) {
  EXPECT_TRUE(validate(cat::cyclic2()).empty());
  EXPECT_FALSE(cat::cyclic2().zero().has_value());
}

TEST(Validate, IdentityViolationHasWitness) {
  auto m = FiniteMonoid::from_rows({{0, 0}, {1, 1}}, 0);
  auto r = validate(m);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.front().law, "identity");
  EXPECT_EQ(r.front().witness, (std::vector<Index>{0, 1}));
}

TEST(Validate, EquivarianceViolationAtOneAndZ) {
  ActMap h(cat::sz(), cat::sz(), {0, 0});
  auto r = validate(h);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.front().law, "equivariance");
  EXPECT_EQ(r.front().witness, (std::vector<Index>{0, 1}));
}

TEST(Validate, DimensionMismatchIsStructural) {
  EXPECT_THROW(FiniteMonoid(2, {0, 1, 1}, 0), StructureError);
  EXPECT_THROW(Act(cat::zero_monoid(), Side::right, 2, {0, 1, 1}), StructureError);
  EXPECT_THROW(ActMap(cat::sz(), cat::sz(), {0, 2}), StructureError);
}

TEST(Validate, EmptyActPolicy) {
  Act empty(cat::zero_monoid(), Side::right, 0, {});
  EXPECT_FALSE(validate(empty).empty());
  EXPECT_TRUE(validate(empty, EmptyActs::permit).empty());
}

TEST(Validate, CentredNeedsOneFixedPoint) {
  EXPECT_TRUE(validate(cat::sz().with_centred(true)).empty());
  auto two = coproduct({cat::sz(), cat::sz()}).object.with_centred(true);
  EXPECT_FALSE(validate(two).empty());
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_points(cat::sz()), (std::vector<Index>{1}));
  EXPECT_EQ(fixed_points(cat::a2()), (std::vector<Index>{1}));
  auto t = Act::from_rows(cat::trivial_monoid(), Side::right, {{0}, {1}, {2}});
  EXPECT_EQ(fixed_points(t), (std::vector<Index>{0, 1, 2}));
}

TEST(FixedPoints, MatchDefinitionOnUniverse) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = Universe::enumerate(m, Side::right, 3);
    for (const auto& a : u.acts()) {
      auto fix = fixed_points(a);
      for (Index x = 0; x < a.size(); ++x) {
        bool is_fixed = true;
        for (Index s = 0; s < m.size(); ++s) {
          is_fixed = is_fixed && a.act(x, s) == x;
        }
        EXPECT_EQ(is_fixed, std::count(fix.begin(), fix.end(), x) == 1);
      }
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(indecomposable_components(cat::sz()).size(), 1u);
  EXPECT_EQ(indecomposable_components(cat::a2()).size(), 1u);
  auto sum = coproduct({cat::sz(), cat::theta(cat::zero_monoid())});
  EXPECT_EQ(indecomposable_components(sum.object).size(), 2u);
}

TEST(Components, BlocksAreSubactsAndRebuildTheAct) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = Universe::enumerate(m, Side::right, 4);
    for (const auto& a : u.acts()) {
      std::vector<Act> parts;
      for (const auto& block : indecomposable_components(a)) {
        ASSERT_TRUE(is_closed(a, block));
        parts.push_back(subact(a, block).act);
      }
      EXPECT_TRUE(find_isomorphism(coproduct(parts).object, a).has_value());
    }
  }
}

TEST(Closure, Examples) {
  auto d = congruence_closure(cat::sz(), {});
  EXPECT_EQ(d.block_count(), 2u);
  auto f = congruence_closure(cat::sz(), {{0, 1}});
  EXPECT_EQ(f.block_count(), 1u);
  auto a = congruence_closure(cat::a2(), {{0, 1}});
  EXPECT_EQ(a.block_count(), 1u);
}

std::vector<Index> reps(const Congruence& c) {
  std::vector<Index> out;
  for (Index x = 0; x < c.act().size(); ++x) {
    out.push_back(c.representative(x));
  }
  return out;
}

TEST(Closure, MatchesMeetOfCompatiblePartitions) {
  std::vector<FiniteMonoid> ms;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto layer = oracle::monoids(k);
    ms.insert(ms.end(), layer.begin(), layer.end());
  }
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (const auto& m : ms) {
    auto u = Universe::enumerate(m, Side::right, 4);
    for (const auto& a : u.acts()) {
      const std::size_t n = a.size();
      // every single pair, plus a few random pair sets
      for (Index x = 0; x < n; ++x) {
        for (Index y = x + 1; y < n; ++y) {
          EXPECT_EQ(reps(congruence_closure(a, {{x, y}})), oracle::closure(a, {{x, y}}));
          ++checked;
        }
      }
      std::uniform_int_distribution<Index> pick(0, n - 1);
      for (int t = 0; t < 2; ++t) {
        std::vector<std::pair<Index, Index>> q{{pick(rng), pick(rng)}, {pick(rng), pick(rng)}};
        EXPECT_EQ(reps(congruence_closure(a, q)), oracle::closure(a, q));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Validate, MutationsDetectedExactly) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto u = Universe::enumerate(m, Side::right, 3);
    for (const auto& a : u.acts()) {
      auto table = a.table();
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (Index v = 0; v < a.size(); ++v) {
          if (v == table[i]) {
            continue;
          }
          auto mutated = table;
          mutated[i] = v;
          Act b(m, Side::right, a.size(), mutated);
          EXPECT_EQ(validate(b).empty(), oracle::act_ok(b));
        }
      }
    }
  }
}

TEST(Validate, MonoidMutationsDetectedExactly) {
  for (const auto& m : cat::monoids_up_to_2()) {
    auto table = m.table();
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (Index v = 0; v < m.size(); ++v) {
        auto mutated = table;
        mutated[i] = v;
        FiniteMonoid b(m.size(), mutated, m.identity());
        EXPECT_EQ(validate(b).empty(), oracle::monoid_ok(b));
      }
    }
  }
}

TEST(CanonicalForm, IsomorphicActsShareTable) {
  auto a = Act::from_rows(cat::zero_monoid(), Side::right, {{0, 2}, {1, 1}, {2, 2}});
  auto b = Act::from_rows(cat::zero_monoid(), Side::right, {{0, 0}, {1, 0}, {2, 2}});
  EXPECT_EQ(canonical_table(a), canonical_table(b));
  auto cf = canonical_form(a);
  ActMap relabel(a, cf.act, cf.relabel);
  EXPECT_TRUE(validate(relabel).empty());
}

TEST(Universe, KnownCounts) {
  auto z = Universe::enumerate(cat::zero_monoid(), Side::right, 4);
  EXPECT_EQ(z.acts().size(), 1u + 2u + 3u + 5u);
  auto c2 = Universe::enumerate(cat::cyclic2(), Side::right, 4);
  EXPECT_EQ(c2.acts().size(), 1u + 2u + 2u + 3u);
  auto t = Universe::enumerate(cat::trivial_monoid(), Side::right, 4);
  EXPECT_EQ(t.acts().size(), 4u);
}

TEST(Universe, AgreesWithNaiveEnumeration) {
  std::vector<FiniteMonoid> ms = oracle::monoids(3);
  ms.push_back(cat::zero_monoid());
  ms.push_back(cat::cyclic2());
  for (const auto& m : ms) {
    for (Side side : {Side::right, Side::left}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        auto fast = enumerate_acts(m, side, n);
        auto slow = oracle::acts(m, side, n);
        ASSERT_EQ(fast.size(), slow.size());
        for (const auto& a : slow) {
          EXPECT_EQ(std::count_if(fast.begin(), fast.end(),
                                  [&](const Act& b) { return oracle::isomorphic(a, b); }),
                    1);
        }
      }
    }
  }
}
