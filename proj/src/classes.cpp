#include "actwfs/classes.hpp"

#include <algorithm>
#include <functional>

#include "actwfs/constructions.hpp"
#include "actwfs/error.hpp"

namespace actwfs {

bool is_mono(const ActMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (Index y : f.values()) {
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

bool is_epi(const ActMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (Index y : f.values()) {
    hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_iso(const ActMap& f) { return f.source().size() == f.target().size() && is_mono(f); }

std::vector<Index> image(const ActMap& f) {
  std::vector<Index> out = f.values();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_unitary(const ActMap& f) {
  if (!is_mono(f)) {
    return false;
  }
  const Act& y = f.target();
  std::vector<bool> in(y.size(), false);
  for (Index v : f.values()) {
    in[v] = true;
  }
  for (Index x = 0; x < y.size(); ++x) {
    if (in[x]) {
      continue;
    }
    for (Index s = 0; s < y.monoid().size(); ++s) {
      if (in[y.act(x, s)]) {
        return false;
      }
    }
  }
  return true;
}

MapFlags classify_map(const ActMap& f) {
  MapFlags out;
  out.mono = is_mono(f);
  out.epi = is_epi(f);
  out.iso = out.mono && out.epi;
  out.unitary = is_unitary(f);
  out.split_epi = out.epi && find_section(f).has_value();
  out.split_mono = out.mono && find_retraction(f).has_value();
  return out;
}

std::optional<Subact> image_complement(const ActMap& f) {
  const auto im = image(f);
  std::vector<Index> rest;
  for (Index y = 0, k = 0; y < f.target().size(); ++y) {
    if (k < im.size() && im[k] == y) {
      ++k;
    } else {
      rest.push_back(y);
    }
  }
  if (rest.empty()) {
    return std::nullopt;
  }
  return subact(f.target(), rest);
}

std::vector<std::vector<Index>> wedge_summands(const Act& a) {
  const auto fix = fixed_points(a);
  if (fix.size() != 1) {
    throw PreconditionError("wedge_summands: act is not centred");
  }
  const Index base = fix.front();
  detail::UnionFind uf(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    for (Index s = 0; s < a.monoid().size(); ++s) {
      const Index y = a.act(x, s);
      if (x != base && y != base) {
        uf.unite(x, y);
      }
    }
  }
  std::vector<std::vector<Index>> out;
  std::vector<Index> root_slot(a.size(), a.size());
  for (Index x = 0; x < a.size(); ++x) {
    if (x == base) {
      continue;
    }
    const Index r = uf.find(x);
    if (root_slot[r] == a.size()) {
      root_slot[r] = out.size();
      out.emplace_back();
    }
    out[root_slot[r]].push_back(x);
  }
  for (auto& piece : out) {
    piece.push_back(base);
    std::sort(piece.begin(), piece.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Act classes

ActClass ActClass::explicit_list(std::vector<Act> members, bool coproducts, bool summands,
                                 bool retracts) {
  ActClass c;
  c.kind = Kind::explicit_list;
  for (auto& m : members) {
    const bool dup = std::any_of(c.members.begin(), c.members.end(), [&](const Act& k) {
      return find_isomorphism(k, m).has_value();
    });
    if (!dup) {
      c.members.push_back(std::move(m));
    }
  }
  c.under_coproducts = coproducts;
  c.under_summands = summands;
  c.under_retracts = retracts;
  return c;
}

ActClass ActClass::flat_bounded(std::size_t n) {
  if (n < 1) {
    throw PreconditionError("flat_bounded: bound must be at least 1");
  }
  ActClass c;
  c.kind = Kind::flat_bounded;
  c.bound = n;
  c.under_coproducts = c.under_summands = c.under_retracts = true;
  return c;
}

ActClass ActClass::projective_bounded(std::shared_ptr<const Universe> universe) {
  if (!universe) {
    throw PreconditionError("projective_bounded: missing universe");
  }
  ActClass c;
  c.kind = Kind::projective_bounded;
  c.universe = std::move(universe);
  c.bound = c.universe->max_act_size();
  c.under_coproducts = c.under_summands = c.under_retracts = true;
  return c;
}

ActClass ActClass::fp_bounded(std::size_t n, bool coproducts) {
  if (n < 1) {
    throw PreconditionError("fp_bounded: bound must be at least 1");
  }
  ActClass c;
  c.kind = Kind::fp_bounded;
  c.bound = n;
  c.under_coproducts = coproducts;
  return c;
}

ActClass ActClass::centred_list(std::vector<Act> members) {
  ActClass c = explicit_list(std::move(members), true);
  c.centred = true;
  return c;
}

std::string ActClass::describe() const {
  switch (kind) {
    case Kind::explicit_list:
      return std::string(centred ? "centred " : "") + "explicit list of " +
             std::to_string(members.size()) + " act(s)" +
             (under_coproducts ? ", closed under coproducts" : "") +
             (under_summands ? ", closed under summands" : "") +
             (under_retracts ? ", closed under retracts" : "");
    case Kind::flat_bounded:
      return "acts flat up to " + std::to_string(bound);
    case Kind::projective_bounded:
      return "acts projective against the epimorphisms of the universe of size " +
             std::to_string(bound);
    case Kind::fp_bounded:
      return std::string(under_coproducts ? "coproducts of acts" : "acts") + " of size at most " +
             std::to_string(bound);
  }
  return {};
}

namespace {

Act piece_union(const Act& a, const std::vector<std::vector<Index>>& pieces, unsigned mask) {
  std::vector<Index> elems;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (mask & (1u << i)) {
      elems.insert(elems.end(), pieces[i].begin(), pieces[i].end());
    }
  }
  return subact(a, elems).act;
}

bool iso_to_member(const ActClass& cls, const Act& a) {
  return std::any_of(cls.members.begin(), cls.members.end(), [&](const Act& m) {
    return find_isomorphism(a, m).has_value();
  });
}

std::vector<std::vector<Index>> pieces_of(const ActClass& cls, const Act& a) {
  return cls.centred ? wedge_summands(a) : indecomposable_components(a);
}

bool summand_of_member(const ActClass& cls, const Act& a) {
  for (const auto& m : cls.members) {
    if (!m.compatible(a) || m.size() < a.size()) {
      continue;
    }
    const auto pieces = pieces_of(cls, m);
    if (pieces.size() > 16) {
      continue;
    }
    for (unsigned mask = 1; mask < (1u << pieces.size()); ++mask) {
      Act part = piece_union(m, pieces, mask);
      if (part.size() == a.size() && find_isomorphism(a, part)) {
        return true;
      }
    }
  }
  return false;
}

bool retract_of_member(const ActClass& cls, const Act& a) {
  for (const auto& m : cls.members) {
    if (!m.compatible(a) || m.size() < a.size()) {
      continue;
    }
    MapConstraints k;
    k.injective = true;
    bool found = false;
    for_each_map(a, m, k, [&](const std::vector<Index>& alpha) {
      found = find_retraction(ActMap(a, m, alpha)).has_value();
      return !found;
    });
    if (found) {
      return true;
    }
  }
  return false;
}

bool single_member(const ActClass& cls, const Act& a) {
  return iso_to_member(cls, a) || (cls.under_summands && summand_of_member(cls, a)) ||
         (cls.under_retracts && retract_of_member(cls, a));
}

Decision explicit_contains(const ActClass& cls, const Act& a) {
  Decision d;
  if (!cls.under_coproducts) {
    d.holds = single_member(cls, a);
    d.summary = d.holds ? "matches a listed act" : "not obtained from the listed acts";
    return d;
  }
  const auto pieces = pieces_of(cls, a);
  // Fast path: every piece on its own.
  bool each = true;
  for (std::size_t i = 0; i < pieces.size() && each; ++i) {
    each = single_member(cls, piece_union(a, pieces, 1u << i));
  }
  if (each) {
    d.holds = true;
    d.summary = "every component matches a listed act";
    return d;
  }
  if (pieces.size() > 16) {
    d.summary = "too many components to group";
    return d;
  }
  const unsigned full = (1u << pieces.size()) - 1;
  std::vector<int> ok(full + 1, -1);
  std::vector<int> split(full + 1, -1);
  split[0] = 1;
  std::function<bool(unsigned)> partitionable = [&](unsigned mask) -> bool {
    if (split[mask] >= 0) {
      return split[mask] == 1;
    }
    const unsigned low = mask & (~mask + 1);
    bool found = false;
    for (unsigned g = mask; g != 0 && !found; g = (g - 1) & mask) {
      if (!(g & low)) {
        continue;
      }
      if (ok[g] < 0) {
        ok[g] = single_member(cls, piece_union(a, pieces, g)) ? 1 : 0;
      }
      found = ok[g] == 1 && partitionable(mask & ~g);
    }
    split[mask] = found ? 1 : 0;
    return found;
  };
  d.holds = partitionable(full);
  d.summary = d.holds ? "components group into listed acts"
                      : "components cannot be grouped into listed acts";
  return d;
}

}  // namespace

Decision contains(const ActClass& cls, const Act& a) {
  switch (cls.kind) {
    case ActClass::Kind::explicit_list:
      return explicit_contains(cls, a);
    case ActClass::Kind::fp_bounded: {
      Decision d;
      d.bounded = true;
      if (cls.under_coproducts) {
        const auto comps = indecomposable_components(a);
        d.holds = std::all_of(comps.begin(), comps.end(),
                              [&](const auto& c) { return c.size() <= cls.bound; });
      } else {
        d.holds = a.size() <= cls.bound;
      }
      d.summary = d.holds ? "within the size bound" : "exceeds the size bound";
      return d;
    }
    case ActClass::Kind::flat_bounded: {
      auto r = is_flat_bounded(a, cls.bound);
      Decision d{r.flat, true, r.flat ? "flat up to " + std::to_string(cls.bound)
                                      : "not flat: an inclusion is not preserved",
                 {}, {}};
      if (!r.flat) {
        d.maps.push_back(r.checks.back().inclusion);
      }
      return d;
    }
    case ActClass::Kind::projective_bounded: {
      Decision d;
      d.bounded = true;
      d.holds = true;
      for (const auto& e : cls.universe->maps()) {
        if (!is_epi(e)) {
          continue;
        }
        if (!is_projective_wrt(a, e).holds) {
          d.holds = false;
          d.maps.push_back(e);
          d.summary = "not projective against an epimorphism of the universe";
          return d;
        }
      }
      d.summary = "projective against every epimorphism of the universe";
      return d;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Map classes

ClassDescriptor ClassDescriptor::of(Kind k) {
  ClassDescriptor c;
  c.kind = k;
  return c;
}

ClassDescriptor ClassDescriptor::unitary_in(ActClass x) {
  ClassDescriptor c = of(Kind::unitary_complement_in);
  c.act_class = std::move(x);
  return c;
}

ClassDescriptor ClassDescriptor::pure_epi(std::size_t n) {
  ClassDescriptor c = of(Kind::pure_epi_bounded);
  c.bound = n;
  c.check();
  return c;
}

ClassDescriptor ClassDescriptor::flat_rees_mono(std::size_t n) {
  ClassDescriptor c = of(Kind::flat_rees_mono_bounded);
  c.bound = n;
  c.check();
  return c;
}

ClassDescriptor ClassDescriptor::listed(std::vector<ActMap> maps) {
  ClassDescriptor c = of(Kind::explicit_list);
  c.maps = std::move(maps);
  return c;
}

ClassDescriptor ClassDescriptor::rlp(std::vector<ActMap> maps) {
  ClassDescriptor c = of(Kind::rlp_against);
  c.maps = std::move(maps);
  return c;
}

ClassDescriptor ClassDescriptor::llp(std::vector<ActMap> maps) {
  ClassDescriptor c = of(Kind::llp_against);
  c.maps = std::move(maps);
  return c;
}

ClassDescriptor ClassDescriptor::projective_right(ActClass x) {
  ClassDescriptor c = of(Kind::projective_right_of);
  c.act_class = std::move(x);
  return c;
}

ClassDescriptor ClassDescriptor::centred_unitary_in(ActClass x) {
  ClassDescriptor c = of(Kind::centred_unitary_complement_in);
  c.act_class = std::move(x);
  return c;
}

void ClassDescriptor::check() const {
  switch (kind) {
    case Kind::unitary_complement_in:
    case Kind::projective_right_of:
    case Kind::centred_unitary_complement_in:
      if (!act_class) {
        throw PreconditionError(name() + ": needs an act class");
      }
      break;
    case Kind::pure_epi_bounded:
    case Kind::flat_rees_mono_bounded:
      if (bound < 1) {
        throw PreconditionError(name() + ": bound must be at least 1");
      }
      break;
    default:
      break;
  }
}

std::string ClassDescriptor::name() const {
  switch (kind) {
    case Kind::mono: return "mono";
    case Kind::epi: return "epi";
    case Kind::split_epi: return "split-epi";
    case Kind::split_mono: return "split-mono";
    case Kind::unitary: return "unitary";
    case Kind::unitary_complement_in: return "unitary-complement-in";
    case Kind::epis: return "epis";
    case Kind::pure_epi_bounded: return "pure-epi";
    case Kind::flat_rees_mono_bounded: return "flat-rees-mono";
    case Kind::explicit_list: return "explicit-list";
    case Kind::rlp_against: return "rlp-against";
    case Kind::llp_against: return "llp-against";
    case Kind::projective_right_of: return "projective-right-of";
    case Kind::centred_unitary_complement_in: return "centred-unitary-complement-in";
  }
  return {};
}

namespace {

Decision flag_decision(bool holds, const std::string& what) {
  return {holds, false, holds ? "is " + what : "is not " + what, {}, {}};
}

// Acts over which projectivity is quantified for the R_X-style class.
std::pair<std::vector<Act>, bool> projectivity_probes(const ActClass& cls, const Act& like) {
  switch (cls.kind) {
    case ActClass::Kind::explicit_list:
      return {cls.members, false};
    case ActClass::Kind::projective_bounded:
    case ActClass::Kind::fp_bounded:
    case ActClass::Kind::flat_bounded: {
      auto u = cls.kind == ActClass::Kind::projective_bounded
                   ? cls.universe
                   : shared_universe(like.monoid(), like.side(), cls.bound);
      std::vector<Act> out;
      for (const auto& a : u->acts()) {
        if (contains(cls, a).holds) {
          out.push_back(a);
        }
      }
      return {out, true};
    }
  }
  return {};
}

Decision centred_unitary(const ActMap& f, const ActClass& cls) {
  Decision d;
  if (!is_mono(f)) {
    d.summary = "not a monomorphism";
    return d;
  }
  const Act& y = f.target();
  const auto fix = fixed_points(y);
  if (fix.size() != 1) {
    throw PreconditionError("centred class: target is not centred");
  }
  const Index base = fix.front();
  std::vector<bool> in(y.size(), false);
  for (Index v : f.values()) {
    in[v] = true;
  }
  if (!in[base]) {
    d.summary = "image misses the base point";
    return d;
  }
  std::vector<Index> rest{base};
  for (Index x = 0; x < y.size(); ++x) {
    if (in[x]) {
      continue;
    }
    rest.push_back(x);
    for (Index s = 0; s < y.monoid().size(); ++s) {
      const Index t = y.act(x, s);
      if (in[t] && t != base) {
        d.summary = "an element outside the image acts into it away from the base point";
        d.maps.push_back(f);
        return d;
      }
    }
  }
  auto comp = subact(y, rest);
  Act complement = comp.act.with_centred(true);
  d.acts.push_back(complement);
  if (complement.size() == 1) {
    d.holds = true;
    d.summary = "centred unitary with trivial complement";
    return d;
  }
  auto member = contains(cls, complement);
  d.holds = member.holds;
  d.bounded = member.bounded;
  d.summary = member.holds ? "centred unitary, complement in class"
                           : "complement not in class: " + member.summary;
  return d;
}

}  // namespace

Decision in_class(const ActMap& f, const ClassDescriptor& c) {
  c.check();
  using K = ClassDescriptor::Kind;
  switch (c.kind) {
    case K::mono:
      return flag_decision(is_mono(f), "a monomorphism");
    case K::epi:
    case K::epis:
      return flag_decision(is_epi(f), "an epimorphism");
    case K::unitary:
      return flag_decision(is_unitary(f), "a unitary monomorphism");
    case K::split_epi: {
      Decision d = flag_decision(false, "a split epimorphism");
      if (auto s = find_section(f)) {
        d = flag_decision(true, "a split epimorphism");
        d.maps.push_back(*s);
      }
      return d;
    }
    case K::split_mono: {
      Decision d = flag_decision(false, "a split monomorphism");
      if (auto r = find_retraction(f)) {
        d = flag_decision(true, "a split monomorphism");
        d.maps.push_back(*r);
      }
      return d;
    }
    case K::unitary_complement_in: {
      if (!is_unitary(f)) {
        return flag_decision(false, "a unitary monomorphism");
      }
      auto comp = image_complement(f);
      if (!comp) {
        return {true, false, "unitary with empty complement", {}, {}};
      }
      auto member = contains(*c.act_class, comp->act);
      Decision d{member.holds, member.bounded,
                 member.holds ? "unitary, complement in class"
                              : "complement not in class: " + member.summary,
                 {comp->inclusion}, {comp->act}};
      return d;
    }
    case K::pure_epi_bounded: {
      if (!is_epi(f)) {
        return flag_decision(false, "an epimorphism");
      }
      auto u = shared_universe(f.source().monoid(), f.source().side(), c.bound);
      for (const auto& m : u->acts()) {
        auto p = is_projective_wrt(m, f);
        if (!p.holds) {
          return {false, true, "a map from an act of size " + std::to_string(m.size()) +
                                   " does not lift",
                  p.maps, {m}};
        }
      }
      return {true, true, "every map from an act of size <= " + std::to_string(c.bound) +
                              " lifts",
              {}, {}};
    }
    case K::flat_rees_mono_bounded: {
      if (!is_mono(f)) {
        return flag_decision(false, "a monomorphism");
      }
      auto q = rees_quotient(f);
      auto r = is_flat_bounded(q.object, c.bound);
      Decision d{r.flat, true,
                 r.flat ? "Rees quotient flat up to " + std::to_string(c.bound)
                        : "Rees quotient not flat up to " + std::to_string(c.bound),
                 {}, {q.object}};
      if (!r.flat) {
        d.maps.push_back(r.checks.back().inclusion);
      }
      return d;
    }
    case K::explicit_list: {
      const bool listed = std::any_of(c.maps.begin(), c.maps.end(),
                                      [&](const ActMap& m) { return m == f; });
      return flag_decision(listed, "listed");
    }
    case K::rlp_against:
    case K::llp_against: {
      auto r = has_lifting(c.kind == K::rlp_against ? LiftSide::right : LiftSide::left, f, c.maps);
      Decision d{r.holds, false,
                 r.holds ? "every square lifts (" + std::to_string(r.squares_checked) + " checked)"
                         : "a square has no filler",
                 {}, {}};
      if (r.failing) {
        d.maps = {r.failing->left, r.failing->right, r.failing->top, r.failing->bottom};
      }
      return d;
    }
    case K::projective_right_of: {
      auto [probes, bounded] = projectivity_probes(*c.act_class, f.source());
      for (const auto& p : probes) {
        auto r = is_projective_wrt(p, f);
        if (!r.holds) {
          return {false, bounded, "a class member is not projective against the map", r.maps,
                  {p}};
        }
      }
      return {true, bounded,
              "all " + std::to_string(probes.size()) + " class member(s) are projective", {}, {}};
    }
    case K::centred_unitary_complement_in:
      return centred_unitary(f, *c.act_class);
  }
  return {};
}

Decision is_projective_wrt(const Act& p, const ActMap& f) {
  const Act& a = f.source();
  const Act& b = f.target();
  if (!p.compatible(a)) {
    throw PreconditionError("is_projective_wrt: act and map over different monoids or sides");
  }
  Decision d{true, false, {}, {}, {}};
  for_each_map(p, b, {}, [&](const std::vector<Index>& g) {
    MapConstraints k;
    k.allowed.assign(p.size(), std::vector<bool>(a.size(), false));
    for (Index x = 0; x < p.size(); ++x) {
      for (Index y = 0; y < a.size(); ++y) {
        k.allowed[x][y] = f(y) == g[x];
      }
    }
    if (auto h = first_map(p, a, k)) {
      d.maps.push_back(*h);
      return true;
    }
    d.holds = false;
    d.maps = {ActMap(p, b, g)};
    return false;
  });
  d.summary = d.holds ? "every map lifts" : "a map has no lift";
  return d;
}

LiftingReport has_lifting(LiftSide side, const ActMap& f, const std::vector<ActMap>& against,
                          bool record_fillers) {
  LiftingReport out;
  for (const auto& c : against) {
    if (!c.source().compatible(f.source())) {
      throw PreconditionError("has_lifting: maps over different monoids or sides");
    }
    const auto squares = side == LiftSide::right ? enumerate_squares(c, f) : enumerate_squares(f, c);
    for (const auto& sq : squares) {
      ++out.squares_checked;
      auto h = find_filler(sq);
      if (!h) {
        out.holds = false;
        out.failing = sq;
        return out;
      }
      if (record_fillers) {
        out.fillers.emplace_back(sq, *h);
      }
    }
  }
  return out;
}

Decision triangle(const Act& a, const std::vector<ActMap>& against, LiftSide side) {
  if (side == LiftSide::left) {
    for (const auto& c : against) {
      auto r = is_projective_wrt(a, c);
      if (!r.holds) {
        return {false, false, "not projective against a listed map", {c, r.maps.front()}, {}};
      }
    }
    return {true, false, "projective against every listed map", {}, {}};
  }
  const Act one = terminal_act(a.monoid(), a.side());
  ActMap to_one(a, one, std::vector<Index>(a.size(), 0));
  auto r = has_lifting(LiftSide::right, to_one, against);
  if (!r.holds) {
    return {false, false, "a map into the act does not extend",
            {r.failing->left, r.failing->top}, {}};
  }
  return {true, false, "injective relative to every listed map", {}, {}};
}

std::vector<ActMap> relative_box(const std::vector<ActMap>& against, const Universe& u,
                                 LiftSide side) {
  std::vector<ActMap> out;
  for (const auto& m : u.maps()) {
    if (has_lifting(side, m, against).holds) {
      out.push_back(m);
    }
  }
  return out;
}

FlatnessReport is_flat_bounded(const Act& a, std::size_t bound) {
  if (bound < 1) {
    throw PreconditionError("is_flat_bounded: bound must be at least 1");
  }
  if (a.side() != Side::right) {
    throw PreconditionError("is_flat_bounded: flatness is defined here for right acts");
  }
  FlatnessReport out;
  out.bound = bound;
  auto lefts = shared_universe(a.monoid(), Side::left, bound);
  for (const auto& y : lefts->acts()) {
    const std::size_t n = y.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Index> elems;
      for (Index i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          elems.push_back(i);
        }
      }
      if (!is_closed(y, elems)) {
        continue;
      }
      auto sub = subact(y, elems);
      auto ind = induced_map(tensor(a, sub.act), sub.inclusion);
      FlatnessCheck check{sub.inclusion, true, {}};
      std::vector<Index> first(ind.codomain.class_count, static_cast<Index>(-1));
      for (Index c = 0; c < ind.values.size(); ++c) {
        Index& slot = first[ind.values[c]];
        if (slot == static_cast<Index>(-1)) {
          slot = c;
        } else {
          check.injective = false;
          check.collided.emplace_back(slot, c);
        }
      }
      out.checks.push_back(std::move(check));
      if (!out.checks.back().injective) {
        out.flat = false;
        return out;
      }
    }
  }
  return out;
}

StabilityReport is_stable_bounded(const ActMap& f, std::size_t bound) {
  if (bound < 1) {
    throw PreconditionError("is_stable_bounded: bound must be at least 1");
  }
  if (f.source().side() != Side::right) {
    throw PreconditionError("is_stable_bounded: needs a map of right acts");
  }
  if (!is_mono(f)) {
    throw PreconditionError("is_stable_bounded: map is not a monomorphism");
  }
  StabilityReport out;
  out.bound = bound;
  const Act& a = f.source();
  const Act& b = f.target();
  auto lefts = shared_universe(a.monoid(), Side::left, bound);
  for (const auto& g : lefts->maps()) {
    ++out.maps_checked;
    const Act& x = g.source();
    const Act& y = g.target();
    auto t = tensor(b, y);
    std::vector<char> through_g(t.class_count, 0);   // b ⊗ g(x)
    std::vector<char> meets_image(t.class_count, 0); // f(a) ⊗ y
    std::vector<char> rewritten(t.class_count, 0);   // f(a') ⊗ g(x')
    for (Index bi = 0; bi < b.size(); ++bi) {
      for (Index xi = 0; xi < x.size(); ++xi) {
        through_g[t.cls(bi, g(xi))] = 1;
      }
    }
    for (Index ai = 0; ai < a.size(); ++ai) {
      for (Index yi = 0; yi < y.size(); ++yi) {
        meets_image[t.cls(f(ai), yi)] = 1;
      }
      for (Index xi = 0; xi < x.size(); ++xi) {
        rewritten[t.cls(f(ai), g(xi))] = 1;
      }
    }
    for (Index c = 0; c < t.class_count; ++c) {
      if (through_g[c] && meets_image[c] && !rewritten[c]) {
        out.stable = false;
        out.failing_map = g;
        out.failing_class = c;
        return out;
      }
    }
  }
  return out;
}

std::vector<FixFibre> fix_fibres(const ActMap& g) {
  if (g.source().monoid().left_zeros().empty()) {
    throw PreconditionError("fix_fibres: the monoid has no left zero");
  }
  std::vector<FixFibre> out;
  for (Index d : fixed_points(g.target())) {
    FixFibre fib{d, {}};
    for (Index c = 0; c < g.source().size(); ++c) {
      if (g(c) == d) {
        fib.fibre.push_back(c);
      }
    }
    if (!fib.fibre.empty() && !is_closed(g.source(), fib.fibre)) {
      throw PreconditionError("fix_fibres: fibre is not a sub-act; is the map equivariant?");
    }
    out.push_back(std::move(fib));
  }
  return out;
}

std::size_t default_bound(const FiniteMonoid& m, const std::vector<std::size_t>& act_sizes) {
  std::size_t n = m.size();
  for (std::size_t s : act_sizes) {
    n = std::max(n, s);
  }
  return n + 1;
}

}  // namespace actwfs
