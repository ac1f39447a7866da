#pragma once

// Bounded small object argument and cofibration certificates.
//
// A step glues copies of generator codomains onto the current middle
// object: it is the pushout, along the attaching maps, of the coproduct
// of the generators used. θ is the composite of these pushout legs and φ
// is the map induced on the glued object.

#include <optional>
#include <string>
#include <vector>

#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/hom_search.hpp"

namespace actwfs {

struct CellAttachment {
  std::size_t generator;
  std::vector<Index> top;     // generator source -> current object
  std::vector<Index> bottom;  // generator target -> codomain; empty outside SOA
};

struct CellStep {
  std::vector<CellAttachment> cells;
};

struct CellPushout {
  Act object;
  ActMap step;                   // base -> object
  std::vector<ActMap> cell_legs; // generator target -> object, one per cell
};

/// Pushout of ⊔ generators[cell.generator] along [cell.top].
CellPushout attach_cells(const Act& base, const std::vector<ActMap>& generators,
                         const CellStep& step);

struct SoaStage {
  Act middle;
  ActMap step;  // previous middle -> middle
  ActMap phi;   // middle -> codomain
  CellStep cells;
};

enum class SoaStatus { completed, cap_reached };

struct SoaResult {
  ActMap original;
  std::vector<ActMap> generators;  // deduplicated, in first-seen order
  std::vector<SoaStage> stages;
  ActMap theta;
  ActMap phi;
  SoaStatus status = SoaStatus::cap_reached;
  /// Fillers for every square against phi when completed.
  LiftingReport rlp_certificate;
  std::string note;
};

constexpr std::size_t kDefaultMaxSteps = 8;
constexpr std::size_t kDefaultMaxSize = 512;

/// g = φ∘θ with θ a finite composite of cell attachments. After
/// `min_steps` stages, stops as soon as φ has the right lifting property
/// against the generators.
SoaResult small_object_factorize(const ActMap& g, const std::vector<ActMap>& generators,
                                 std::size_t max_steps = kDefaultMaxSteps,
                                 std::size_t max_size = kDefaultMaxSize,
                                 std::size_t min_steps = 0);

/// Rebuilds θ from the stored cells and checks it matches bit for bit,
/// along with φ∘θ = g and the stage maps.
bool replay_soa(const SoaResult& r, std::string* why = nullptr);

/// Evidence that `target` is a retract of a finite composite of cell
/// attachments starting at its source.
struct CofCertificate {
  ActMap target;
  std::vector<ActMap> generators;
  std::vector<CellStep> steps;
  ActMap composite;
  std::optional<MapRetractWitness> retract;
};

/// θ of an SOA run, certified by its own stages.
CofCertificate certificate_from_soa(const SoaResult& r);

/// Looks for a certificate: zero steps, then a single cell, then an SOA
/// run of at most `max_len` stages. Sound, not complete: nullopt only
/// means nothing was found within the caps.
std::optional<CofCertificate> cof_certificate(const ActMap& f, const std::vector<ActMap>& generators,
                                              std::size_t max_len,
                                              std::size_t max_size = kDefaultMaxSize);

bool verify_certificate(const CofCertificate& c, std::string* why = nullptr);

}  // namespace actwfs
