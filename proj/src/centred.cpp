#include "actwfs/centred.hpp"

#include "actwfs/core.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"

namespace actwfs {

Act centred_zero(const FiniteMonoid& m, Side side) {
  return terminal_act(m, side).with_centred(true);
}

void require_centred(const Act& a) {
  if (!a.monoid().zero()) {
    throw PreconditionError("centred mode needs a monoid with a zero");
  }
  if (!a.centred()) {
    throw PreconditionError("centred mode needs acts flagged as centred");
  }
  if (auto v = validate(a); !v.empty()) {
    throw PreconditionError("invalid centred act: " + v.front().law + " " + v.front().detail);
  }
}

ActMap base_point_map(const Act& a) {
  auto fix = fixed_points(a);
  if (fix.size() != 1) {
    throw PreconditionError("base_point_map: act does not have exactly one fixed point");
  }
  return ActMap(centred_zero(a.monoid(), a.side()), a, {fix.front()});
}

Factorization factor_centred_precover(const ActMap& f, const ActClass& x) {
  if (!x.centred) {
    throw PreconditionError("factor_centred_precover: needs a centred class");
  }
  return factor_via_precover(f, x);
}

CentredPrecover centred_wfs_precover(const Act& a, const ClassDescriptor& left,
                                     const ClassDescriptor& right, const Factorizer& factorizer,
                                     const Act& probe) {
  require_centred(a);
  require_centred(probe);
  if (!probe.compatible(a)) {
    throw PreconditionError("centred_wfs_precover: probe over a different monoid or side");
  }
  ActMap zero_map = base_point_map(a);
  auto fac = factorizer(zero_map);
  if (!(compose(fac.right, fac.left) == zero_map)) {
    throw StructureError("centred_wfs_precover: factorizer returned pieces that do not compose");
  }
  CentredPrecover out{zero_map,
                      fac,
                      fac.right.source(),
                      fac.right,
                      in_class(fac.left, left),
                      in_class(fac.right, right),
                      {},
                      {},
                      false,
                      {}};
  ActMap probe_zero = base_point_map(probe);
  auto maps = enumerate_maps(probe, a);
  if (maps.empty()) {
    out.degenerate = true;
    out.note = "no map from the probe to the act; only the factorization is reported";
    return out;
  }
  for (const auto& p : maps) {
    Square sq{probe_zero, fac.right, fac.left, p};
    if (auto k = find_filler(sq)) {
      out.fillers.emplace_back(p, *k);
    } else {
      out.unlifted.push_back(p);
    }
  }
  out.note = std::to_string(out.fillers.size()) + " of " + std::to_string(maps.size()) +
             " probe map(s) lift through the right piece";
  return out;
}

}  // namespace actwfs
