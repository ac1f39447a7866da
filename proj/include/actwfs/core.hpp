#pragma once

#include <string>
#include <vector>

#include "actwfs/algebra.hpp"

namespace actwfs {

/// Whether empty acts count as valid. Forbidden by default; permitting
/// them makes every pullback exist.
enum class EmptyActs { forbid, permit };

struct Violation {
  std::string law;
  std::vector<Index> witness;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const FiniteMonoid& m);
ValidationReport validate(const Act& a, EmptyActs policy = EmptyActs::forbid);
ValidationReport validate(const ActMap& f);
ValidationReport validate(const Congruence& c);

/// Convenience: throws PreconditionError carrying the first violation.
void require_valid(const Act& a, EmptyActs policy = EmptyActs::forbid);
void require_valid(const ActMap& f);

std::vector<Index> fixed_points(const Act& a);

/// Connected components of the relation a ~ a·s; blocks in order of least
/// element, each sorted.
std::vector<std::vector<Index>> indecomposable_components(const Act& a);

/// Least congruence containing `pairs`.
Congruence congruence_closure(const Act& a, const std::vector<std::pair<Index, Index>>& pairs);

/// Sub-act on a union of orbits; `elements` must be closed under the
/// action. Elements keep their relative order.
struct Subact {
  Act act;
  ActMap inclusion;
};
Subact subact(const Act& a, const std::vector<Index>& elements);
bool is_closed(const Act& a, const std::vector<Index>& elements);

/// Canonical representative under carrier relabelling: the act whose
/// element-major table is lexicographically least. Exhaustive over all
/// permutations, so limited to carriers of at most 8 elements.
constexpr std::size_t kCanonicalLimit = 8;

struct CanonicalForm {
  Act act;
  /// relabel[old] = new index.
  std::vector<Index> relabel;
};
CanonicalForm canonical_form(const Act& a);
std::vector<Index> canonical_table(const Act& a);

/// One-element act.
Act terminal_act(const FiniteMonoid& m, Side side);

/// The monoid acting on itself (right: a·s = as, left: s·a = sa).
Act regular_act(const FiniteMonoid& m, Side side);

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Index find(Index a);
  /// Keeps the smaller index as root; returns false if already joined.
  bool unite(Index a, Index b);

 private:
  std::vector<Index> parent_;
};

}  // namespace detail

}  // namespace actwfs
