#pragma once

// Factorizations, precovers and covers, and bounded verification of weak
// factorization systems.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/error.hpp"

namespace actwfs {

struct Factorization {
  ActMap original;
  ActMap left;   // A -> M
  ActMap right;  // M -> B
  ClassDescriptor left_class;
  ClassDescriptor right_class;
  Decision left_evidence;
  Decision right_evidence;
};

using Factorizer = std::function<Factorization(const ActMap&)>;

/// f = f̄ ∘ ι with ι: X -> X ⊔ Y the coproduct injection (unitary) and
/// f̄ = [f, 1_Y] (split by the other injection).
Factorization factor_unitary_split(const ActMap& f);

struct PrecoverSummand {
  std::size_t member;  // index into the class's member list
  ActMap map;          // member -> A
};

struct PrecoverResult {
  /// P -> A; absent when no member maps to A.
  std::optional<ActMap> map;
  std::vector<PrecoverSummand> summands;
  std::string nonexistence;
};

/// P = ⊔ over members X_i and maps h: X_i -> A of X_i, with the induced
/// map to A. Needs an explicit class.
PrecoverResult precover(const Act& a, const ActClass& x);

enum class CoverMode { precover, cover };

/// precover: every map from a member into A factors through g.
/// cover: additionally every endomap e of P with g∘e = g is an iso.
Decision check_precover(const ActMap& g, const ActClass& x, CoverMode mode);

/// Thrown when a precover is required but no member maps to the act.
class NoPrecover : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// f = [f, p] ∘ ι with p: P -> B the canonical precover and ι: A -> A ⊔ P.
Factorization factor_via_precover(const ActMap& f, const ActClass& x);

struct WfsViolation {
  /// "factorization", "lifting", "retract-left" or "retract-right".
  std::string condition;
  std::string detail;
  std::vector<ActMap> witnesses;
};

struct WfsReport {
  bool passed = true;
  std::size_t maps_checked = 0;
  std::size_t left_members = 0;
  std::size_t right_members = 0;
  std::size_t squares_checked = 0;
  std::size_t retract_situations = 0;
  std::vector<WfsViolation> violations;
};

/// Checks over every map of U: each map factors through L then R, every
/// square from L∩U to R∩U has a filler, and L (R) is closed under the
/// retracts found among U's maps with a common source (target).
WfsReport wfs_verify(const ClassDescriptor& left, const ClassDescriptor& right, const Universe& u,
                     const Factorizer& factorizer, std::size_t max_violations = 32);

}  // namespace actwfs
