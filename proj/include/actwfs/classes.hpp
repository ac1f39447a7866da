#pragma once

// Membership in classes of maps and acts.
//
// Statements about flatness, stability, purity and projectivity quantify
// over every act. Here they are checked against all acts up to a declared
// size bound instead, and every such verdict carries `bounded = true`.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actwfs/algebra.hpp"
#include "actwfs/core.hpp"
#include "actwfs/hom_search.hpp"
#include "actwfs/universe.hpp"

namespace actwfs {

struct MapFlags {
  bool mono = false;
  bool epi = false;
  bool split_epi = false;
  bool split_mono = false;
  bool unitary = false;
  bool iso = false;
};

bool is_mono(const ActMap& f);
bool is_epi(const ActMap& f);
bool is_iso(const ActMap& f);
/// Mono whose image absorbs nothing from outside: y·s ∈ im f ⇒ y ∈ im f.
bool is_unitary(const ActMap& f);
MapFlags classify_map(const ActMap& f);

std::vector<Index> image(const ActMap& f);
/// The complement of im f as a sub-act; nullopt when f is onto. Throws
/// if the complement is not closed under the action.
std::optional<Subact> image_complement(const ActMap& f);

/// Outcome of a membership test. `maps` and `acts` hold the certificate
/// on success or the counterexample on failure.
struct Decision {
  bool holds = false;
  bool bounded = false;
  std::string summary;
  std::vector<ActMap> maps;
  std::vector<Act> acts;
};

struct ActClass {
  enum class Kind { explicit_list, flat_bounded, projective_bounded, fp_bounded };

  Kind kind = Kind::explicit_list;
  /// Deduplicated up to isomorphism.
  std::vector<Act> members;
  std::size_t bound = 0;
  std::shared_ptr<const Universe> universe;
  bool under_coproducts = false;
  bool under_summands = false;
  bool under_retracts = false;
  /// Members are centred and coproducts identify base points.
  bool centred = false;

  static ActClass explicit_list(std::vector<Act> members, bool coproducts = false,
                                bool summands = false, bool retracts = false);
  static ActClass flat_bounded(std::size_t n);
  /// Projective with respect to every epimorphism of the universe.
  static ActClass projective_bounded(std::shared_ptr<const Universe> universe);
  /// All acts of size at most n; with coproducts, all acts whose
  /// components have size at most n.
  static ActClass fp_bounded(std::size_t n, bool coproducts = true);
  static ActClass centred_list(std::vector<Act> members);

  std::string describe() const;
};

Decision contains(const ActClass& cls, const Act& a);

/// Components of a centred act once the base point is removed, each
/// returned with the base point added back.
std::vector<std::vector<Index>> wedge_summands(const Act& a);

struct ClassDescriptor {
  enum class Kind {
    mono,
    epi,
    split_epi,
    split_mono,
    unitary,
    unitary_complement_in,
    epis,
    pure_epi_bounded,
    flat_rees_mono_bounded,
    explicit_list,
    rlp_against,
    llp_against,
    projective_right_of,
    centred_unitary_complement_in,
  };

  Kind kind = Kind::mono;
  std::optional<ActClass> act_class;
  std::size_t bound = 0;
  std::vector<ActMap> maps;

  static ClassDescriptor of(Kind k);
  static ClassDescriptor unitary_in(ActClass x);
  static ClassDescriptor pure_epi(std::size_t n);
  static ClassDescriptor flat_rees_mono(std::size_t n);
  static ClassDescriptor listed(std::vector<ActMap> maps);
  static ClassDescriptor rlp(std::vector<ActMap> maps);
  static ClassDescriptor llp(std::vector<ActMap> maps);
  static ClassDescriptor projective_right(ActClass x);
  static ClassDescriptor centred_unitary_in(ActClass x);

  /// Throws PreconditionError when the parameters do not fit the kind.
  void check() const;
  std::string name() const;
};

Decision in_class(const ActMap& f, const ClassDescriptor& c);

/// P is projective with respect to f: A -> B when every P -> B lifts
/// through f. Certificate: one lift per map P -> B, in order.
Decision is_projective_wrt(const Act& p, const ActMap& f);

enum class LiftSide { left, right };

struct LiftingReport {
  bool holds = true;
  std::size_t squares_checked = 0;
  std::optional<Square> failing;
  /// Filled only when requested: every square with its filler.
  std::vector<std::pair<Square, ActMap>> fillers;
};

/// right: f has the right lifting property against every map of `against`
/// (f on the right edge). left: mirrored.
LiftingReport has_lifting(LiftSide side, const ActMap& f, const std::vector<ActMap>& against,
                          bool record_fillers = false);

/// left: `a` is projective with respect to each map of `against`.
/// right: a -> 1 has the right lifting property against each map.
Decision triangle(const Act& a, const std::vector<ActMap>& against, LiftSide side);

/// Maps of the universe with the lifting property against `against`,
/// in universe order.
std::vector<ActMap> relative_box(const std::vector<ActMap>& against, const Universe& u,
                                 LiftSide side);

struct FlatnessCheck {
  ActMap inclusion;  // X ⊆ Y, left acts
  bool injective = true;
  /// Pairs of distinct classes of A ⊗ X identified in A ⊗ Y.
  std::vector<std::pair<Index, Index>> collided;
};

struct FlatnessReport {
  bool flat = true;
  std::size_t bound = 0;
  /// Every inclusion checked, ending with the failing one if any.
  std::vector<FlatnessCheck> checks;
};

/// Tensoring with `a` keeps every inclusion of left acts X ⊆ Y with
/// |Y| <= bound injective.
FlatnessReport is_flat_bounded(const Act& a, std::size_t bound);

struct StabilityReport {
  bool stable = true;
  std::size_t bound = 0;
  std::size_t maps_checked = 0;
  std::optional<ActMap> failing_map;  // left map g: X -> Y
  std::optional<Index> failing_class; // class of B ⊗ Y
};

/// f: A -> B mono of right acts; checked over every left map g: X -> Y
/// with |X|, |Y| <= bound.
StabilityReport is_stable_bounded(const ActMap& f, std::size_t bound);

struct FixFibre {
  Index point;
  std::vector<Index> fibre;
};

/// For each fixed point d of target(g), the elements mapped to d. Requires
/// a monoid with a left zero.
std::vector<FixFibre> fix_fibres(const ActMap& g);

/// max(|S|, largest act size) + 1.
std::size_t default_bound(const FiniteMonoid& m, const std::vector<std::size_t>& act_sizes);

}  // namespace actwfs
