#pragma once

// Backtracking search over act maps.
//
// Values are chosen for source elements in increasing index order, each
// time trying targets in increasing order, and every choice is pushed
// through the action (h(a·s) = h(a)·s) before descending. Since all
// smaller indices are fixed whenever a new choice is made, solutions come
// out in lexicographic order of their value arrays, so the first solution
// is the least one.

#include <functional>
#include <optional>
#include <vector>

#include "actwfs/algebra.hpp"

namespace actwfs {

struct MapConstraints {
  /// Pre-assigned values (propagated before the search starts).
  std::vector<std::optional<Index>> fixed;
  /// allowed[a][b]: may a map to b. Empty means unrestricted.
  std::vector<std::vector<bool>> allowed;
  bool injective = false;
};

/// Calls `visit` on each equivariant value array satisfying the
/// constraints, in lexicographic order, until it returns false.
void for_each_map(const Act& source, const Act& target, const MapConstraints& constraints,
                  const std::function<bool(const std::vector<Index>&)>& visit);

std::optional<ActMap> first_map(const Act& source, const Act& target,
                                const MapConstraints& constraints);

std::vector<ActMap> enumerate_maps(const Act& source, const Act& target);
std::size_t count_maps(const Act& source, const Act& target);

/// Commutative square
///   A --top--> C
///   |          |
///  left      right
///   v          v
///   B -bottom-> D
struct Square {
  ActMap left;
  ActMap right;
  ActMap top;
  ActMap bottom;

  bool commutes() const;
};

/// Least h: B -> C with h∘left = top and right∘h = bottom. Throws if the
/// square does not commute.
std::optional<ActMap> find_filler(const Square& sq);

/// All commuting squares with the given left and right edges, ordered by
/// (top, bottom) lexicographically.
std::vector<Square> enumerate_squares(const ActMap& left, const ActMap& right);

/// Least s with g∘s = 1.
std::optional<ActMap> find_section(const ActMap& g);
/// Least r with r∘f = 1.
std::optional<ActMap> find_retraction(const ActMap& f);
std::optional<ActMap> find_isomorphism(const Act& a, const Act& b);

/// Witness that g: A -> C is a retract of f: A -> B under A:
/// beta∘alpha = 1_C, alpha∘g = f, beta∘f = g.
struct MapRetractWitness {
  ActMap alpha;  // C -> B
  ActMap beta;   // B -> C
};

std::optional<MapRetractWitness> find_map_retract(const ActMap& f, const ActMap& g);

/// Dual situation over a common target Y: g: C -> Y is a retract of
/// f: B -> Y when beta∘alpha = 1_C, f∘alpha = g, g∘beta = f.
std::optional<MapRetractWitness> find_slice_retract(const ActMap& f, const ActMap& g);

}  // namespace actwfs
