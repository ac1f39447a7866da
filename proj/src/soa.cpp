#include "actwfs/soa.hpp"

#include <algorithm>

#include "actwfs/error.hpp"

namespace actwfs {

CellPushout attach_cells(const Act& base, const std::vector<ActMap>& generators,
                         const CellStep& step) {
  if (step.cells.empty()) {
    return {base, identity_map(base), {}};
  }
  std::vector<Act> sources;
  std::vector<Act> targets;
  for (const auto& cell : step.cells) {
    if (cell.generator >= generators.size()) {
      throw PreconditionError("attach_cells: generator index out of range");
    }
    const ActMap& c = generators[cell.generator];
    if (cell.top.size() != c.source().size()) {
      throw PreconditionError("attach_cells: attaching map has the wrong length");
    }
    sources.push_back(c.source());
    targets.push_back(c.target());
  }
  auto a_sum = coproduct(sources);
  auto b_sum = coproduct(targets);
  std::vector<Index> across(a_sum.object.size());
  std::vector<Index> attach(a_sum.object.size());
  for (std::size_t i = 0; i < step.cells.size(); ++i) {
    const auto& cell = step.cells[i];
    const ActMap& c = generators[cell.generator];
    const ActMap& ina = a_sum.legs[i].map;
    const ActMap& inb = b_sum.legs[i].map;
    for (Index a = 0; a < c.source().size(); ++a) {
      across[ina(a)] = inb(c(a));
      attach[ina(a)] = cell.top[a];
    }
  }
  ActMap fbar(a_sum.object, b_sum.object, std::move(across));
  ActMap u(a_sum.object, base, std::move(attach));
  require_valid(u);
  auto po = pushout(fbar, u);
  CellPushout out{po.object, po.leg("g"), {}};
  const ActMap& v = po.leg("v");
  for (std::size_t i = 0; i < step.cells.size(); ++i) {
    out.cell_legs.push_back(compose(v, b_sum.legs[i].map));
  }
  return out;
}

namespace {

std::vector<ActMap> dedupe(const std::vector<ActMap>& maps) {
  std::vector<ActMap> out;
  for (const auto& m : maps) {
    if (std::find(out.begin(), out.end(), m) == out.end()) {
      out.push_back(m);
    }
  }
  return out;
}

// φ on the glued object: the old φ on the base, the bottoms on the cells.
ActMap glued_phi(const CellPushout& po, const ActMap& phi, const CellStep& step) {
  std::vector<Index> values(po.object.size(), 0);
  for (Index p = 0; p < phi.source().size(); ++p) {
    values[po.step(p)] = phi(p);
  }
  for (std::size_t i = 0; i < step.cells.size(); ++i) {
    const ActMap& leg = po.cell_legs[i];
    for (Index b = 0; b < leg.source().size(); ++b) {
      values[leg(b)] = step.cells[i].bottom[b];
    }
  }
  return ActMap(po.object, phi.target(), std::move(values));
}

}  // namespace

SoaResult small_object_factorize(const ActMap& g, const std::vector<ActMap>& generators,
                                 std::size_t max_steps, std::size_t max_size,
                                 std::size_t min_steps) {
  if (max_steps == 0 || max_size == 0) {
    throw PreconditionError("small_object_factorize: caps must be at least 1");
  }
  require_valid(g);
  auto gens = dedupe(generators);
  for (const auto& c : gens) {
    if (!c.source().compatible(g.source())) {
      throw PreconditionError("small_object_factorize: generator over a different monoid or side");
    }
    require_valid(c);
  }
  SoaResult r{g, gens, {}, identity_map(g.source()), g, SoaStatus::cap_reached, {}, {}};
  while (true) {
    if (r.stages.size() >= min_steps) {
      auto rlp = has_lifting(LiftSide::right, r.phi, gens, true);
      if (rlp.holds) {
        r.status = SoaStatus::completed;
        r.rlp_certificate = std::move(rlp);
        return r;
      }
    }
    if (r.stages.size() >= max_steps) {
      r.note = "step cap reached after " + std::to_string(r.stages.size()) + " step(s)";
      return r;
    }
    CellStep step;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const auto& sq : enumerate_squares(gens[i], r.phi)) {
        step.cells.push_back({i, sq.top.values(), sq.bottom.values()});
      }
    }
    auto po = attach_cells(r.phi.source(), gens, step);
    if (po.object.size() > max_size) {
      r.note = "size cap: next middle object would have " + std::to_string(po.object.size()) +
               " elements";
      return r;
    }
    auto phi = glued_phi(po, r.phi, step);
    r.theta = compose(po.step, r.theta);
    r.phi = phi;
    r.stages.push_back({po.object, po.step, std::move(phi), std::move(step)});
  }
}

bool replay_soa(const SoaResult& r, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) {
      *why = m;
    }
    return false;
  };
  if (!(compose(r.phi, r.theta) == r.original)) {
    return fail("phi after theta differs from the original map");
  }
  Act current = r.original.source();
  ActMap theta = identity_map(current);
  ActMap phi = r.original;
  for (std::size_t k = 0; k < r.stages.size(); ++k) {
    const auto& st = r.stages[k];
    auto po = attach_cells(current, r.generators, st.cells);
    if (!(po.object == st.middle) || !(po.step == st.step)) {
      return fail("stage " + std::to_string(k) + " does not replay");
    }
    phi = glued_phi(po, phi, st.cells);
    if (!(phi == st.phi) || !(compose(phi, po.step) == (k == 0 ? r.original : r.stages[k - 1].phi))) {
      return fail("stage " + std::to_string(k) + " has an inconsistent phi");
    }
    theta = compose(po.step, theta);
    current = po.object;
  }
  if (!(theta == r.theta) || !(phi == r.phi)) {
    return fail("replayed theta or phi differs from the stored one");
  }
  return true;
}

CofCertificate certificate_from_soa(const SoaResult& r) {
  CofCertificate c{r.theta, r.generators, {}, r.theta, std::nullopt};
  for (const auto& st : r.stages) {
    c.steps.push_back(st.cells);
  }
  return c;
}

namespace {

std::optional<CofCertificate> certify_against(const ActMap& f, const std::vector<ActMap>& gens,
                                              std::vector<CellStep> steps, const ActMap& composite) {
  if (composite == f) {
    return CofCertificate{f, gens, std::move(steps), composite, std::nullopt};
  }
  if (auto w = find_map_retract(composite, f)) {
    return CofCertificate{f, gens, std::move(steps), composite, std::move(w)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<CofCertificate> cof_certificate(const ActMap& f, const std::vector<ActMap>& generators,
                                              std::size_t max_len, std::size_t max_size) {
  if (max_len == 0) {
    throw PreconditionError("cof_certificate: max_len must be at least 1");
  }
  require_valid(f);
  auto gens = dedupe(generators);
  if (auto c = certify_against(f, gens, {}, identity_map(f.source()))) {
    return c;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].source().compatible(f.source())) {
      throw PreconditionError("cof_certificate: generator over a different monoid or side");
    }
    for (const auto& u : enumerate_maps(gens[i].source(), f.source())) {
      CellStep step{{{i, u.values(), {}}}};
      auto po = attach_cells(f.source(), gens, step);
      if (po.object.size() > max_size) {
        continue;
      }
      if (auto c = certify_against(f, gens, {step}, po.step)) {
        return c;
      }
    }
  }
  auto soa = small_object_factorize(f, gens, max_len, max_size);
  std::vector<CellStep> steps;
  for (const auto& st : soa.stages) {
    steps.push_back(st.cells);
  }
  return certify_against(f, gens, std::move(steps), soa.theta);
}

bool verify_certificate(const CofCertificate& c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) {
      *why = m;
    }
    return false;
  };
  Act current = c.target.source();
  ActMap composite = identity_map(current);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    for (const auto& cell : c.steps[k].cells) {
      if (cell.generator >= c.generators.size()) {
        return fail("step " + std::to_string(k) + " names an unknown generator");
      }
      const ActMap& gen = c.generators[cell.generator];
      if (cell.top.size() != gen.source().size() ||
          !validate(ActMap(gen.source(), current, cell.top)).empty()) {
        return fail("step " + std::to_string(k) + " has an invalid attaching map");
      }
    }
    auto po = attach_cells(current, c.generators, c.steps[k]);
    composite = compose(po.step, composite);
    current = po.object;
  }
  if (!(composite == c.composite)) {
    return fail("replayed composite differs from the stored one");
  }
  if (!c.retract) {
    return composite == c.target ? true : fail("no retract and the composite is not the map");
  }
  const auto& w = *c.retract;
  const ActMap& f = c.target;
  if (!validate(w.alpha).empty() || !validate(w.beta).empty()) {
    return fail("retract maps are not equivariant");
  }
  if (!(w.alpha.source() == f.target()) || !(w.alpha.target() == composite.target()) ||
      !(w.beta.source() == composite.target()) || !(w.beta.target() == f.target())) {
    return fail("retract maps have the wrong shape");
  }
  if (!(compose(w.beta, w.alpha) == identity_map(f.target())) ||
      !(compose(w.alpha, f) == composite) || !(compose(w.beta, composite) == f)) {
    return fail("retract equations fail");
  }
  return true;
}

}  // namespace actwfs
