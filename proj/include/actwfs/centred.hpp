#pragma once

// Precovers obtained from a factorization system on centred acts: an act
// with a single fixed point, the base point. Coproducts in this setting
// glue base points together.

#include <optional>
#include <string>

#include "actwfs/wfs.hpp"

namespace actwfs {

/// One-element centred act.
Act centred_zero(const FiniteMonoid& m, Side side);

/// Throws unless the monoid has a zero and `a` is a valid centred act.
void require_centred(const Act& a);

/// Unique map from the one-element act to the base point of `a`.
ActMap base_point_map(const Act& a);

/// 0 -> A* -> A through the centred canonical precover by `x`.
Factorization factor_centred_precover(const ActMap& f, const ActClass& x);

struct CentredPrecover {
  ActMap zero_map;  // 0 -> A
  Factorization factorization;
  Act a_star;
  ActMap precover_map;  // A* -> A
  Decision left_membership;
  Decision right_membership;
  /// For each probe map X -> A in lexicographic order, a lift X -> A*.
  std::vector<std::pair<ActMap, ActMap>> fillers;
  /// Probe maps with no lift; empty when the pair of classes lifts.
  std::vector<ActMap> unlifted;
  bool degenerate = false;
  std::string note;
};

CentredPrecover centred_wfs_precover(const Act& a, const ClassDescriptor& left,
                                     const ClassDescriptor& right, const Factorizer& factorizer,
                                     const Act& probe);

}  // namespace actwfs
