#pragma once

// Coproducts, quotients, Rees quotients, pushouts, pullbacks, colimits of
// finite chains and tensor products.
//
// Quotient carriers are indexed densely in order of each block's least
// element, so every construction is deterministic.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "actwfs/algebra.hpp"
#include "actwfs/core.hpp"

namespace actwfs {

/// Enough to rebuild a construction with replay().
struct Provenance {
  std::string construction;
  std::vector<Act> acts;
  std::vector<ActMap> maps;
  std::vector<std::pair<Index, Index>> pairs;
  bool flag = false;
};

struct Leg {
  std::string name;
  ActMap map;
};

struct ConstructionResult {
  Act object;
  std::vector<Leg> legs;
  Provenance provenance;

  /// Throws std::out_of_range for an unknown name.
  const ActMap& leg(const std::string& name) const;
};

/// Disjoint union; legs "in0", "in1", ...
ConstructionResult coproduct(const std::vector<Act>& parts);

/// Coproduct of centred acts with all base points identified. The result
/// is centred; legs "in0", "in1", ...
ConstructionResult centred_coproduct(const std::vector<Act>& parts);

/// Leg "projection".
ConstructionResult quotient(const Act& a, const Congruence& rho);

/// Y/X: collapse im f to one point. Leg "projection" from target(f).
ConstructionResult rees_quotient(const ActMap& f, bool require_mono = true);

/// Pushout of the span B <-f- A -u-> C, built as (B ⊔ C)/ρ with ρ
/// generated by f(a) ~ u(a). Legs "v": B -> P and "g": C -> P.
ConstructionResult pushout(const ActMap& f, const ActMap& u);

struct Nonexistence {
  std::string reason;
};

/// Pullback of B -f-> D <-g- C; legs "p1", "p2". Empty fibre products
/// are reported as Nonexistence unless empty acts are permitted.
std::variant<ConstructionResult, Nonexistence> pullback(const ActMap& f, const ActMap& g,
                                                        EmptyActs policy = EmptyActs::forbid);

struct ChainDiagram {
  std::vector<Act> acts;     // A_0 .. A_n
  std::vector<ActMap> maps;  // A_i -> A_{i+1}
};

struct ChainColimit {
  ConstructionResult colimit;  // legs "leg0" .. "legn"
  /// For each element of A_n the least stage i with the element in the
  /// image of leg i.
  std::vector<std::size_t> first_stage;
};

ChainColimit chain_colimit(const ChainDiagram& chain);

/// Least stage δ and map A -> A_δ through which f: A -> colim factors.
struct StageFactorization {
  std::size_t stage;
  ActMap map;
};
std::optional<StageFactorization> factor_through_stage(const ChainColimit& colimit,
                                                       const ChainDiagram& chain,
                                                       const ActMap& f);

/// A ⊗_S X for a right act A and a left act X.
struct TensorResult {
  Act right;
  Act left;
  std::size_t class_count = 0;
  /// class_of[a * left.size() + x]; classes numbered by least pair index.
  std::vector<Index> class_of;

  Index cls(Index a, Index x) const { return class_of[a * left.size() + x]; }
};

TensorResult tensor(const Act& right, const Act& left);

struct InducedTensorMap {
  TensorResult codomain;
  std::vector<Index> values;  // domain class -> codomain class

  bool injective() const;
};

/// A ⊗ X -> A ⊗ Y induced by a left map g: X -> Y.
InducedTensorMap induced_map(const TensorResult& domain, const ActMap& g);

/// Rebuilds a construction from its provenance.
ConstructionResult replay(const Provenance& p);

}  // namespace actwfs
