#include "actwfs/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"

namespace actwfs {

const ActMap& ConstructionResult::leg(const std::string& name) const {
  for (const auto& l : legs) {
    if (l.name == name) {
      return l.map;
    }
  }
  throw std::out_of_range("no leg named " + name);
}

namespace {

void require_same_family(const std::vector<Act>& parts, const char* what) {
  if (parts.empty()) {
    throw PreconditionError(std::string(what) + ": needs at least one act");
  }
  for (const auto& p : parts) {
    if (!p.compatible(parts.front())) {
      throw PreconditionError(std::string(what) + ": acts differ in monoid or side");
    }
  }
}

bool injective(const ActMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (Index x : f.values()) {
    if (hit[x]) {
      return false;
    }
    hit[x] = true;
  }
  return true;
}

}  // namespace

ConstructionResult coproduct(const std::vector<Act>& parts) {
  require_same_family(parts, "coproduct");
  const FiniteMonoid& m = parts.front().monoid();
  const std::size_t cols = m.size();
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.size();
  }
  std::vector<Index> table;
  table.reserve(total * cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (Index x = 0; x < p.size(); ++x) {
      for (Index s = 0; s < cols; ++s) {
        table.push_back(offset + p.act(x, s));
      }
    }
    offset += p.size();
  }
  Act object(m, parts.front().side(), total, std::move(table));
  ConstructionResult out{object, {}, {"coproduct", parts, {}, {}, false}};
  offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Index> v(parts[i].size());
    for (Index x = 0; x < v.size(); ++x) {
      v[x] = offset + x;
    }
    out.legs.push_back({"in" + std::to_string(i), ActMap(parts[i], object, std::move(v))});
    offset += parts[i].size();
  }
  return out;
}

ConstructionResult centred_coproduct(const std::vector<Act>& parts) {
  require_same_family(parts, "centred_coproduct");
  std::vector<Index> bases;
  for (const auto& p : parts) {
    auto fix = fixed_points(p);
    if (fix.size() != 1) {
      throw PreconditionError("centred_coproduct: every part needs exactly one fixed point");
    }
    bases.push_back(fix.front());
  }
  auto plain = coproduct(parts);
  std::vector<std::pair<Index, Index>> glue;
  const Index first = plain.legs[0].map(bases[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    glue.emplace_back(first, plain.legs[i].map(bases[i]));
  }
  auto q = quotient(plain.object, congruence_closure(plain.object, glue));
  const ActMap& proj = q.leg("projection");
  Act object = q.object.with_centred(true);
  ConstructionResult out{object, {}, {"centred_coproduct", parts, {}, {}, false}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Index> v(parts[i].size());
    for (Index x = 0; x < v.size(); ++x) {
      v[x] = proj(plain.legs[i].map(x));
    }
    out.legs.push_back({"in" + std::to_string(i), ActMap(parts[i], object, std::move(v))});
  }
  return out;
}

ConstructionResult quotient(const Act& a, const Congruence& rho) {
  if (!(rho.act() == a)) {
    throw PreconditionError("quotient: congruence belongs to a different act");
  }
  if (!validate(rho).empty()) {
    throw PreconditionError("quotient: partition is not compatible with the action");
  }
  const std::size_t cols = a.monoid().size();
  std::vector<Index> rank(a.size(), 0);
  std::size_t n = 0;
  for (Index x = 0; x < a.size(); ++x) {
    if (rho.representative(x) == x) {
      rank[x] = n++;
    }
  }
  std::vector<Index> proj(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    proj[x] = rank[rho.representative(x)];
  }
  std::vector<Index> table(n * cols);
  for (Index x = 0; x < a.size(); ++x) {
    if (rho.representative(x) != x) {
      continue;
    }
    for (Index s = 0; s < cols; ++s) {
      table[proj[x] * cols + s] = proj[a.act(x, s)];
    }
  }
  Act object(a.monoid(), a.side(), n, std::move(table), a.centred());
  Provenance prov{"quotient", {a}, {}, {}, false};
  for (Index x = 0; x < a.size(); ++x) {
    if (rho.representative(x) != x) {
      prov.pairs.emplace_back(rho.representative(x), x);
    }
  }
  return {object, {{"projection", ActMap(a, object, std::move(proj))}}, std::move(prov)};
}

ConstructionResult rees_quotient(const ActMap& f, bool require_mono) {
  if (f.source().size() == 0) {
    throw PreconditionError("rees_quotient: empty source");
  }
  if (require_mono && !injective(f)) {
    throw PreconditionError("rees_quotient: map is not a monomorphism");
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (Index x = 1; x < f.source().size(); ++x) {
    pairs.emplace_back(f(0), f(x));
  }
  // im f is a subact, so collapsing it is already action-compatible.
  auto out = quotient(f.target(), congruence_closure(f.target(), pairs));
  out.provenance = {"rees_quotient", {}, {f}, {}, require_mono};
  return out;
}

ConstructionResult pushout(const ActMap& f, const ActMap& u) {
  if (!(f.source() == u.source())) {
    throw PreconditionError("pushout: maps do not share a source");
  }
  if (!f.target().compatible(u.target())) {
    throw PreconditionError("pushout: targets differ in monoid or side");
  }
  auto sum = coproduct({f.target(), u.target()});
  const ActMap& in_b = sum.legs[0].map;
  const ActMap& in_c = sum.legs[1].map;
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < f.source().size(); ++a) {
    pairs.emplace_back(in_b(f(a)), in_c(u(a)));
  }
  auto q = quotient(sum.object, congruence_closure(sum.object, pairs));
  // Base points are glued through the span, so a pushout of centred acts
  // is centred.
  const bool centred = f.target().centred() && u.target().centred();
  Act object = q.object.with_centred(centred);
  const ActMap& proj = q.leg("projection");
  ActMap v(f.target(), object, compose(proj, in_b).values());
  ActMap g(u.target(), object, compose(proj, in_c).values());
  return {object, {{"v", std::move(v)}, {"g", std::move(g)}}, {"pushout", {}, {f, u}, {}, false}};
}

std::variant<ConstructionResult, Nonexistence> pullback(const ActMap& f, const ActMap& g,
                                                        EmptyActs policy) {
  if (!(f.target() == g.target())) {
    throw PreconditionError("pullback: maps do not share a target");
  }
  const Act& b = f.source();
  const Act& c = g.source();
  std::vector<std::pair<Index, Index>> carrier;
  for (Index x = 0; x < b.size(); ++x) {
    for (Index y = 0; y < c.size(); ++y) {
      if (f(x) == g(y)) {
        carrier.emplace_back(x, y);
      }
    }
  }
  if (carrier.empty() && policy == EmptyActs::forbid) {
    return Nonexistence{"fibre product is empty and empty acts are forbidden"};
  }
  const std::size_t cols = b.monoid().size();
  auto position = [&](Index x, Index y) {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), std::make_pair(x, y));
    return static_cast<Index>(it - carrier.begin());
  };
  std::vector<Index> table(carrier.size() * cols);
  std::vector<Index> p1(carrier.size());
  std::vector<Index> p2(carrier.size());
  for (Index i = 0; i < carrier.size(); ++i) {
    const auto [x, y] = carrier[i];
    p1[i] = x;
    p2[i] = y;
    for (Index s = 0; s < cols; ++s) {
      table[i * cols + s] = position(b.act(x, s), c.act(y, s));
    }
  }
  Act object(b.monoid(), b.side(), carrier.size(), std::move(table));
  return ConstructionResult{object,
                            {{"p1", ActMap(object, b, std::move(p1))},
                             {"p2", ActMap(object, c, std::move(p2))}},
                            {"pullback", {}, {f, g}, {}, policy == EmptyActs::permit}};
}

ChainColimit chain_colimit(const ChainDiagram& chain) {
  if (chain.acts.empty()) {
    throw PreconditionError("chain_colimit: empty chain");
  }
  if (chain.maps.size() + 1 != chain.acts.size()) {
    throw PreconditionError("chain_colimit: need one map between consecutive acts");
  }
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    if (!(chain.maps[i].source() == chain.acts[i]) ||
        !(chain.maps[i].target() == chain.acts[i + 1])) {
      throw PreconditionError("chain_colimit: map " + std::to_string(i) +
                              " does not connect consecutive acts");
    }
  }
  const std::size_t n = chain.maps.size();
  const Act& last = chain.acts.back();
  std::vector<ActMap> legs(n + 1, identity_map(last));
  for (std::size_t i = n; i-- > 0;) {
    legs[i] = compose(legs[i + 1], chain.maps[i]);
  }
  ChainColimit out{{last, {}, {"chain_colimit", chain.acts, chain.maps, {}, false}},
                   std::vector<std::size_t>(last.size(), n)};
  for (std::size_t i = 0; i <= n; ++i) {
    for (Index x : legs[i].values()) {
      out.first_stage[x] = std::min(out.first_stage[x], i);
    }
    out.colimit.legs.push_back({"leg" + std::to_string(i), legs[i]});
  }
  return out;
}

std::optional<StageFactorization> factor_through_stage(const ChainColimit& colimit,
                                                       const ChainDiagram& chain,
                                                       const ActMap& f) {
  if (!(f.target() == colimit.colimit.object)) {
    throw PreconditionError("factor_through_stage: map does not land in the colimit");
  }
  for (std::size_t i = 0; i < chain.acts.size(); ++i) {
    const ActMap& leg = colimit.colimit.legs[i].map;
    MapConstraints k;
    k.allowed.assign(f.source().size(), std::vector<bool>(chain.acts[i].size(), false));
    for (Index a = 0; a < f.source().size(); ++a) {
      for (Index y = 0; y < chain.acts[i].size(); ++y) {
        k.allowed[a][y] = leg(y) == f(a);
      }
    }
    if (auto g = first_map(f.source(), chain.acts[i], k)) {
      return StageFactorization{i, *g};
    }
  }
  return std::nullopt;
}

TensorResult tensor(const Act& right, const Act& left) {
  if (right.side() != Side::right || left.side() != Side::left) {
    throw PreconditionError("tensor: needs a right act and a left act");
  }
  if (!(right.monoid() == left.monoid())) {
    throw PreconditionError("tensor: acts over different monoids");
  }
  const std::size_t nx = left.size();
  const std::size_t cols = right.monoid().size();
  detail::UnionFind uf(right.size() * nx);
  for (Index a = 0; a < right.size(); ++a) {
    for (Index s = 0; s < cols; ++s) {
      for (Index x = 0; x < nx; ++x) {
        uf.unite(right.act(a, s) * nx + x, a * nx + left.act(x, s));
      }
    }
  }
  TensorResult out{right, left, 0, std::vector<Index>(right.size() * nx)};
  std::vector<Index> rank(out.class_of.size(), 0);
  for (Index p = 0; p < out.class_of.size(); ++p) {
    const Index r = uf.find(p);
    if (r == p) {
      rank[p] = out.class_count++;
    }
    out.class_of[p] = rank[r];
  }
  return out;
}

bool InducedTensorMap::injective() const {
  std::vector<bool> hit(codomain.class_count, false);
  for (Index v : values) {
    if (hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

InducedTensorMap induced_map(const TensorResult& domain, const ActMap& g) {
  if (!(g.source() == domain.left)) {
    throw PreconditionError("induced_map: map does not start at the tensor's left act");
  }
  InducedTensorMap out{tensor(domain.right, g.target()),
                       std::vector<Index>(domain.class_count, 0)};
  for (Index a = 0; a < domain.right.size(); ++a) {
    for (Index x = 0; x < domain.left.size(); ++x) {
      out.values[domain.cls(a, x)] = out.codomain.cls(a, g(x));
    }
  }
  return out;
}

ConstructionResult replay(const Provenance& p) {
  if (p.construction == "coproduct") {
    return coproduct(p.acts);
  }
  if (p.construction == "centred_coproduct") {
    return centred_coproduct(p.acts);
  }
  if (p.construction == "quotient") {
    return quotient(p.acts.at(0), congruence_closure(p.acts.at(0), p.pairs));
  }
  if (p.construction == "rees_quotient") {
    return rees_quotient(p.maps.at(0), p.flag);
  }
  if (p.construction == "pushout") {
    return pushout(p.maps.at(0), p.maps.at(1));
  }
  if (p.construction == "pullback") {
    auto r = pullback(p.maps.at(0), p.maps.at(1), p.flag ? EmptyActs::permit : EmptyActs::forbid);
    if (auto* c = std::get_if<ConstructionResult>(&r)) {
      return *c;
    }
    throw PreconditionError("replay: pullback does not exist");
  }
  if (p.construction == "chain_colimit") {
    return chain_colimit({p.acts, p.maps}).colimit;
  }
  throw PreconditionError("replay: unknown construction '" + p.construction + "'");
}

}  // namespace actwfs
