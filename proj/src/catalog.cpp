#include "actwfs/catalog.hpp"

#include "actwfs/core.hpp"

namespace actwfs::catalog {

FiniteMonoid trivial_monoid() { return FiniteMonoid(1, {0}, 0); }

FiniteMonoid zero_monoid() {
  static const FiniteMonoid z = FiniteMonoid::from_rows({{0, 1}, {1, 1}}, 0);
  return z;
}

FiniteMonoid cyclic2() {
  static const FiniteMonoid c = FiniteMonoid::from_rows({{0, 1}, {1, 0}}, 0);
  return c;
}

std::vector<FiniteMonoid> monoids_up_to_2() { return {trivial_monoid(), zero_monoid(), cyclic2()}; }

Act sz(Side side) { return regular_act(zero_monoid(), side); }

Act a2(Side side) { return Act::from_rows(zero_monoid(), side, {{0, 1}, {1, 1}}); }

Act theta(const FiniteMonoid& m, Side side) { return terminal_act(m, side); }

Act c2_regular(Side side) { return regular_act(cyclic2(), side); }

ActMap zero_inclusion(Side side) {
  const Act point = terminal_act(zero_monoid(), side);
  return ActMap(point, sz(side), {1});
}

}  // namespace actwfs::catalog
