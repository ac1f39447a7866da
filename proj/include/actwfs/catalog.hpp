#pragma once

// Small named monoids and acts used throughout the tests and examples.

#include "actwfs/algebra.hpp"

namespace actwfs::catalog {

/// {1}.
FiniteMonoid trivial_monoid();
/// Z = {1, z} with z·z = z; element 0 is the identity, 1 is z.
FiniteMonoid zero_monoid();
/// C2 = {1, g} with g·g = 1.
FiniteMonoid cyclic2();
/// Every monoid of order at most 2, up to isomorphism.
std::vector<FiniteMonoid> monoids_up_to_2();

/// Z acting on itself: carrier {1, z}.
Act sz(Side side = Side::right);
/// A2 = {a, b} over Z with a·z = b·z = b.
Act a2(Side side = Side::right);
/// One-element act.
Act theta(const FiniteMonoid& m, Side side = Side::right);
/// C2 acting on itself.
Act c2_regular(Side side = Side::right);

/// {z} -> S over Z.
ActMap zero_inclusion(Side side = Side::right);

}  // namespace actwfs::catalog
