#include "actwfs/wfs.hpp"

#include "actwfs/error.hpp"

namespace actwfs {

Factorization factor_unitary_split(const ActMap& f) {
  auto sum = coproduct({f.source(), f.target()});
  const ActMap& iota = sum.leg("in0");
  std::vector<Index> fold(sum.object.size());
  for (Index x = 0; x < f.source().size(); ++x) {
    fold[x] = f(x);
  }
  for (Index y = 0; y < f.target().size(); ++y) {
    fold[f.source().size() + y] = y;
  }
  ActMap right(sum.object, f.target(), std::move(fold));
  auto lc = ClassDescriptor::of(ClassDescriptor::Kind::unitary);
  auto rc = ClassDescriptor::of(ClassDescriptor::Kind::split_epi);
  auto le = in_class(iota, lc);
  auto re = in_class(right, rc);
  return {f, iota, std::move(right), std::move(lc), std::move(rc), std::move(le), std::move(re)};
}

namespace {

void require_explicit(const ActClass& x, const char* what) {
  if (x.kind != ActClass::Kind::explicit_list) {
    throw PreconditionError(std::string(what) + ": needs an explicit list of acts");
  }
}

ConstructionResult sum_of(const std::vector<Act>& parts, bool centred) {
  return centred ? centred_coproduct(parts) : coproduct(parts);
}

}  // namespace

PrecoverResult precover(const Act& a, const ActClass& x) {
  require_explicit(x, "precover");
  PrecoverResult out;
  for (std::size_t i = 0; i < x.members.size(); ++i) {
    if (!x.members[i].compatible(a)) {
      throw PreconditionError("precover: class member over a different monoid or side");
    }
    for (auto& h : enumerate_maps(x.members[i], a)) {
      out.summands.push_back({i, std::move(h)});
    }
  }
  if (out.summands.empty()) {
    out.nonexistence = "no member of the class maps to the act";
    return out;
  }
  std::vector<Act> parts;
  for (const auto& s : out.summands) {
    parts.push_back(x.members[s.member]);
  }
  auto sum = sum_of(parts, x.centred);
  std::vector<Index> values(sum.object.size(), 0);
  for (std::size_t k = 0; k < out.summands.size(); ++k) {
    const ActMap& in = sum.legs[k].map;
    for (Index p = 0; p < in.source().size(); ++p) {
      values[in(p)] = out.summands[k].map(p);
    }
  }
  out.map.emplace(sum.object, a, std::move(values));
  return out;
}

Decision check_precover(const ActMap& g, const ActClass& x, CoverMode mode) {
  require_explicit(x, "check_precover");
  for (const auto& m : x.members) {
    auto r = is_projective_wrt(m, g);
    if (!r.holds) {
      return {false, false, "a map from a class member does not factor through the precover",
              r.maps, {m}};
    }
  }
  if (mode == CoverMode::precover) {
    return {true, false, "every map from a class member factors", {}, {}};
  }
  const Act& p = g.source();
  MapConstraints k;
  k.allowed.assign(p.size(), std::vector<bool>(p.size(), false));
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = 0; j < p.size(); ++j) {
      k.allowed[i][j] = g(j) == g(i);
    }
  }
  std::optional<ActMap> bad;
  std::size_t endos = 0;
  for_each_map(p, p, k, [&](const std::vector<Index>& e) {
    ++endos;
    ActMap em(p, p, e);
    if (!is_iso(em)) {
      bad = std::move(em);
      return false;
    }
    return true;
  });
  if (bad) {
    return {false, false, "an endomorphism over the act is not an isomorphism", {*bad}, {}};
  }
  return {true, false,
          "precover, and all " + std::to_string(endos) + " endomorphism(s) over the act are isos",
          {}, {}};
}

Factorization factor_via_precover(const ActMap& f, const ActClass& x) {
  auto pre = precover(f.target(), x);
  if (!pre.map) {
    throw NoPrecover("factor_via_precover: " + pre.nonexistence);
  }
  const ActMap& p = *pre.map;
  auto sum = sum_of({f.source(), p.source()}, x.centred);
  const ActMap& iota = sum.leg("in0");
  const ActMap& in_p = sum.leg("in1");
  std::vector<Index> values(sum.object.size(), 0);
  for (Index a = 0; a < f.source().size(); ++a) {
    values[iota(a)] = f(a);
  }
  for (Index q = 0; q < p.source().size(); ++q) {
    values[in_p(q)] = p(q);
  }
  ActMap right(sum.object, f.target(), std::move(values));
  ActClass closed = x;
  closed.under_coproducts = true;
  auto lc = x.centred ? ClassDescriptor::centred_unitary_in(closed)
                      : ClassDescriptor::unitary_in(closed);
  auto rc = ClassDescriptor::projective_right(x);
  auto le = in_class(iota, lc);
  auto re = in_class(right, rc);
  return {f, iota, std::move(right), std::move(lc), std::move(rc), std::move(le), std::move(re)};
}

WfsReport wfs_verify(const ClassDescriptor& left, const ClassDescriptor& right, const Universe& u,
                     const Factorizer& factorizer, std::size_t max_violations) {
  WfsReport out;
  auto record = [&](WfsViolation v) {
    out.passed = false;
    if (out.violations.size() < max_violations) {
      out.violations.push_back(std::move(v));
    }
  };
  const auto& maps = u.maps();
  out.maps_checked = maps.size();

  for (const auto& h : maps) {
    auto fac = factorizer(h);
    if (!(compose(fac.right, fac.left) == h)) {
      record({"factorization", "pieces do not compose to the map", {h, fac.left, fac.right}});
      continue;
    }
    if (!in_class(fac.left, left).holds) {
      record({"factorization", "left piece is not in the left class", {h, fac.left}});
    }
    if (!in_class(fac.right, right).holds) {
      record({"factorization", "right piece is not in the right class", {h, fac.right}});
    }
  }

  std::vector<char> in_left(maps.size());
  std::vector<char> in_right(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    in_left[i] = in_class(maps[i], left).holds;
    in_right[i] = in_class(maps[i], right).holds;
    out.left_members += in_left[i];
    out.right_members += in_right[i];
  }

  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!in_left[i]) {
      continue;
    }
    for (std::size_t j = 0; j < maps.size(); ++j) {
      if (!in_right[j]) {
        continue;
      }
      for (const auto& sq : enumerate_squares(maps[i], maps[j])) {
        ++out.squares_checked;
        if (!find_filler(sq)) {
          record({"lifting", "square without a filler", {sq.left, sq.right, sq.top, sq.bottom}});
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      if (i == j) {
        continue;
      }
      const ActMap& f = maps[i];
      const ActMap& g = maps[j];
      if (in_left[i] && !in_left[j] && f.source() == g.source()) {
        ++out.retract_situations;
        if (auto w = find_map_retract(f, g)) {
          record({"retract-left", "retract of a left-class map is not in the left class",
                  {f, g, w->alpha, w->beta}});
        }
      }
      if (in_right[i] && !in_right[j] && f.target() == g.target()) {
        ++out.retract_situations;
        if (auto w = find_slice_retract(f, g)) {
          record({"retract-right", "retract of a right-class map is not in the right class",
                  {f, g, w->alpha, w->beta}});
        }
      }
    }
  }
  return out;
}

}  // namespace actwfs
