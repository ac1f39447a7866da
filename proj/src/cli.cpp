#include "actwfs/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "actwfs/catalog.hpp"
#include "actwfs/centred.hpp"
#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/core.hpp"
#include "actwfs/io.hpp"
#include "actwfs/soa.hpp"
#include "actwfs/universe.hpp"
#include "actwfs/wfs.hpp"

namespace actwfs::cli {

namespace {

using io::Json;

class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::vector<std::string> files;
  std::string format = "json";
  std::string source, target, square, map, act, f, u, g, right, left, along, cls, probe, monoid;
  std::string system = "u-sp";
  std::string side = "right";
  std::string mode = "cover";
  std::string job;
  std::size_t bound = 0;
  std::size_t universe = 2;
  std::vector<std::string> gens;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t max_size = kDefaultMaxSize;
  std::size_t min_steps = 0;
  std::size_t max_len = 4;
  bool permit_empty = false;
  bool allow_non_mono = false;
};

struct Outcome {
  Json report;
  int code;
};

class Context {
 public:
  explicit Context(const Options& o) {
    for (const auto& f : o.files) {
      load(f);
    }
  }

  io::Library& lib() { return lib_; }

  // `requested` is a document name or a file; empty picks the pos-th
  // document of the kind in load order.
  std::string pick(const std::string& kind, const std::string& requested, std::size_t pos = 0) {
    if (!requested.empty()) {
      if (std::filesystem::is_regular_file(requested)) {
        load(requested);
        auto in_file = lib_.names(kind, requested);
        if (in_file.empty()) {
          throw InputError(requested + ": no " + kind + " document");
        }
        return in_file.front();
      }
      return requested;
    }
    auto all = lib_.names(kind);
    if (pos >= all.size()) {
      throw InputError("need at least " + std::to_string(pos + 1) + " " + kind + " document(s)");
    }
    return all[pos];
  }

  std::vector<ActMap> maps_from(const std::vector<std::string>& refs) {
    std::vector<ActMap> out;
    for (const auto& r : refs) {
      if (std::filesystem::is_regular_file(r)) {
        load(r);
        for (const auto& n : lib_.names("map", r)) {
          out.push_back(valid(lib_.map(n)));
        }
      } else {
        out.push_back(valid(lib_.map(r)));
      }
    }
    return out;
  }

  Act act(const std::string& requested, std::size_t pos = 0) {
    return valid(lib_.act(pick("act", requested, pos)));
  }
  ActMap map(const std::string& requested, std::size_t pos = 0) {
    return valid(lib_.map(pick("map", requested, pos)));
  }
  ActClass act_class(const std::string& requested) {
    auto c = lib_.act_class(pick("class", requested));
    for (const auto& m : c.members) {
      valid(m);
    }
    return c;
  }

  FiniteMonoid monoid(const std::string& requested) {
    if (requested.empty() && lib_.names("monoid").empty()) {
      throw InputError("need a monoid document or --monoid Z|C2|trivial");
    }
    if (!requested.empty() && !std::filesystem::is_regular_file(requested)) {
      auto known = lib_.names("monoid");
      if (std::find(known.begin(), known.end(), requested) == known.end()) {
        if (requested == "Z") return catalog::zero_monoid();
        if (requested == "C2") return catalog::cyclic2();
        if (requested == "trivial") return catalog::trivial_monoid();
      }
    }
    auto m = lib_.monoid(pick("monoid", requested));
    if (auto v = validate(m); !v.empty()) {
      throw InputError("invalid monoid: " + v.front().law + " " + v.front().detail);
    }
    return m;
  }

  static Act valid(Act a) {
    if (auto v = validate(a); !v.empty()) {
      throw InputError("invalid act: " + v.front().law + " " + v.front().detail);
    }
    return a;
  }
  static ActMap valid(ActMap f) {
    valid(f.source());
    valid(f.target());
    if (auto v = validate(f); !v.empty()) {
      throw InputError("invalid map: " + v.front().law + " " + v.front().detail);
    }
    return f;
  }

 private:
  void load(const std::string& file) {
    if (loaded_.insert(file).second) {
      lib_.add_file(file);
    }
  }

  io::Library lib_;
  std::set<std::string> loaded_;
};

Json verdict(bool holds) { return holds ? "true" : "false"; }

Json violations_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r) {
    out.push_back({{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return out;
}

Json maps_json(const std::vector<ActMap>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) {
    out.push_back(io::to_json(m));
  }
  return out;
}

Json decision_json(const Decision& d) {
  Json j{{"holds", d.holds}, {"scope", d.bounded ? "bounded" : "exact"}, {"summary", d.summary}};
  if (!d.maps.empty()) {
    j["maps"] = maps_json(d.maps);
  }
  if (!d.acts.empty()) {
    Json acts = Json::array();
    for (const auto& a : d.acts) {
      acts.push_back(io::to_json(a));
    }
    j["acts"] = std::move(acts);
  }
  return j;
}

Json construction_json(const ConstructionResult& r) {
  Json legs = Json::object();
  for (const auto& l : r.legs) {
    legs[l.name] = io::to_json(l.map);
  }
  return {{"object", io::to_json(r.object)}, {"legs", std::move(legs)},
          {"construction", r.provenance.construction}};
}

Json factorization_json(const Factorization& f) {
  return {{"left", io::to_json(f.left)},
          {"right", io::to_json(f.right)},
          {"middle_size", f.left.target().size()},
          {"left_class", f.left_class.name()},
          {"right_class", f.right_class.name()},
          {"left_evidence", decision_json(f.left_evidence)},
          {"right_evidence", decision_json(f.right_evidence)},
          {"composes", compose(f.right, f.left) == f.original}};
}

std::size_t bound_or_default(const Options& o, const FiniteMonoid& m,
                             std::vector<std::size_t> sizes) {
  return o.bound ? o.bound : default_bound(m, sizes);
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_validate(Context& c, const Options&) {
  Json docs = Json::array();
  bool all = true;
  for (const auto& [name, kind] : c.lib().entries()) {
    ValidationReport v;
    if (kind == "monoid") {
      v = validate(c.lib().monoid(name));
    } else if (kind == "act") {
      v = validate(c.lib().act(name));
    } else if (kind == "map") {
      auto f = c.lib().map(name);
      for (const auto& part : {validate(f.source()), validate(f.target()), validate(f)}) {
        v.insert(v.end(), part.begin(), part.end());
      }
    } else if (kind == "square") {
      auto sq = c.lib().square(name);
      for (const auto* m : {&sq.left, &sq.right, &sq.top, &sq.bottom}) {
        auto part = validate(*m);
        v.insert(v.end(), part.begin(), part.end());
      }
      if (v.empty() && !sq.commutes()) {
        v.push_back({"commutativity", {}, "right∘top differs from bottom∘left"});
      }
    } else if (kind == "class") {
      for (const auto& m : c.lib().act_class(name).members) {
        auto part = validate(m);
        v.insert(v.end(), part.begin(), part.end());
      }
    } else if (kind == "universe-spec") {
      v = validate(c.lib().universe(name).monoid);
    } else {
      c.lib().job(name);
    }
    all = all && v.empty();
    docs.push_back(
        {{"name", name}, {"kind", kind}, {"valid", v.empty()}, {"violations", violations_json(v)}});
  }
  return {{{"verdict", verdict(all)}, {"documents", std::move(docs)}}, all ? kTrue : kFalse};
}

Outcome cmd_hom(Context& c, const Options& o) {
  auto a = c.act(o.source, 0);
  auto b = o.target.empty() && c.lib().names("act").size() < 2 ? a : c.act(o.target, 1);
  if (!a.compatible(b)) {
    throw InputError("hom: acts over different monoids or sides");
  }
  auto maps = enumerate_maps(a, b);
  Json values = Json::array();
  for (const auto& m : maps) {
    values.push_back(m.values());
  }
  return {{{"verdict", verdict(!maps.empty())},
           {"count", maps.size()},
           {"source", io::to_json(a)},
           {"target", io::to_json(b)},
           {"maps", std::move(values)}},
          maps.empty() ? kFalse : kTrue};
}

Outcome cmd_lift(Context& c, const Options& o) {
  auto sq = c.lib().square(c.pick("square", o.square));
  for (const auto* m : {&sq.left, &sq.right, &sq.top, &sq.bottom}) {
    Context::valid(*m);
  }
  if (!sq.commutes()) {
    throw InputError("lift: the square does not commute");
  }
  auto h = find_filler(sq);
  Json r{{"verdict", verdict(h.has_value())}, {"square", io::to_json(sq)}};
  if (h) {
    r["filler"] = io::to_json(*h);
  }
  return {std::move(r), h ? kTrue : kFalse};
}

Outcome cmd_classify(Context& c, const Options& o) {
  auto f = c.map(o.map);
  auto flags = classify_map(f);
  Json r{{"verdict", "true"},
         {"map", io::to_json(f)},
         {"mono", flags.mono},
         {"epi", flags.epi},
         {"split_epi", flags.split_epi},
         {"split_mono", flags.split_mono},
         {"unitary", flags.unitary},
         {"iso", flags.iso}};
  if (auto s = find_section(f)) {
    r["section"] = s->values();
  }
  if (auto t = find_retraction(f)) {
    r["retraction"] = t->values();
  }
  return {std::move(r), kTrue};
}

Outcome cmd_factor(Context& c, const Options& o) {
  auto f = c.map(o.map);
  if (o.system == "u-sp") {
    return {{{"verdict", "true"}, {"system", o.system}, {"factorization",
                                                          factorization_json(factor_unitary_split(f))}},
            kTrue};
  }
  if (o.system != "precover") {
    throw InputError("factor: --system must be u-sp or precover");
  }
  auto x = c.act_class(o.cls);
  try {
    auto fac = factor_via_precover(f, x);
    return {{{"verdict", "true"}, {"system", o.system}, {"factorization", factorization_json(fac)}},
            kTrue};
  } catch (const NoPrecover& e) {
    return {{{"verdict", "false"}, {"system", o.system}, {"nonexistence", e.what()}}, kFalse};
  }
}

Outcome cmd_pushout(Context& c, const Options& o) {
  auto f = c.map(o.f, 0);
  auto u = c.map(o.u, 1);
  if (!(f.source() == u.source())) {
    throw InputError("pushout: maps do not share a source");
  }
  return {{{"verdict", "true"}, {"pushout", construction_json(pushout(f, u))}}, kTrue};
}

Outcome cmd_pullback(Context& c, const Options& o) {
  auto f = c.map(o.f, 0);
  auto g = c.map(o.g, 1);
  if (!(f.target() == g.target())) {
    throw InputError("pullback: maps do not share a target");
  }
  auto r = pullback(f, g, o.permit_empty ? EmptyActs::permit : EmptyActs::forbid);
  if (auto* n = std::get_if<Nonexistence>(&r)) {
    return {{{"verdict", "false"}, {"nonexistence", n->reason}}, kFalse};
  }
  return {{{"verdict", "true"}, {"pullback", construction_json(std::get<ConstructionResult>(r))}},
          kTrue};
}

Outcome cmd_tensor(Context& c, const Options& o) {
  auto pick_side = [&](const std::string& requested, Side side) {
    if (!requested.empty()) {
      return c.act(requested);
    }
    for (const auto& n : c.lib().names("act")) {
      auto a = c.lib().act(n);
      if (a.side() == side) {
        return Context::valid(a);
      }
    }
    throw InputError(std::string("tensor: need a ") + to_string(side) + " act");
  };
  auto a = pick_side(o.right, Side::right);
  auto x = pick_side(o.left, Side::left);
  if (a.side() != Side::right || x.side() != Side::left || !(a.monoid() == x.monoid())) {
    throw InputError("tensor: needs a right and a left act over one monoid");
  }
  auto t = tensor(a, x);
  Json classes = Json::array();
  for (Index i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < x.size(); ++j) {
      row.push_back(t.cls(i, j));
    }
    classes.push_back(std::move(row));
  }
  Json r{{"verdict", "true"}, {"class_count", t.class_count}, {"class_of", std::move(classes)}};
  if (!o.along.empty()) {
    auto g = c.map(o.along);
    if (!(g.source() == x)) {
      throw InputError("tensor: --along must start at the left act");
    }
    auto im = induced_map(t, g);
    r["induced"] = {{"values", im.values},
                    {"codomain_classes", im.codomain.class_count},
                    {"injective", im.injective()}};
  }
  return {std::move(r), kTrue};
}

Outcome cmd_rees(Context& c, const Options& o) {
  auto f = c.map(o.map);
  if (!o.allow_non_mono && !is_mono(f)) {
    throw InputError("rees: map is not a monomorphism (use --allow-non-mono)");
  }
  return {{{"verdict", "true"}, {"rees", construction_json(rees_quotient(f, !o.allow_non_mono))}},
          kTrue};
}

Outcome cmd_flat(Context& c, const Options& o) {
  auto a = c.act(o.act);
  if (a.side() != Side::right) {
    throw InputError("flat: needs a right act");
  }
  const std::size_t n = bound_or_default(o, a.monoid(), {a.size()});
  auto rep = is_flat_bounded(a, n);
  Json checks = Json::array();
  for (const auto& ch : rep.checks) {
    checks.push_back({{"inclusion", io::to_json(ch.inclusion)},
                      {"injective", ch.injective},
                      {"collided", ch.collided}});
  }
  return {{{"verdict", verdict(rep.flat)},
           {"scope", "bounded"},
           {"bound", n},
           {"checks", std::move(checks)}},
          rep.flat ? kTrue : kFalse};
}

Outcome cmd_pure(Context& c, const Options& o) {
  auto f = c.map(o.map);
  const std::size_t n = bound_or_default(o, f.source().monoid(), {f.source().size(), f.target().size()});
  auto d = in_class(f, ClassDescriptor::pure_epi(n));
  return {{{"verdict", verdict(d.holds)}, {"scope", "bounded"}, {"bound", n},
           {"decision", decision_json(d)}},
          d.holds ? kTrue : kFalse};
}

Outcome cmd_stable(Context& c, const Options& o) {
  auto f = c.map(o.map);
  if (!is_mono(f) || f.source().side() != Side::right) {
    throw InputError("stable: needs a monomorphism of right acts");
  }
  const std::size_t n = bound_or_default(o, f.source().monoid(), {f.source().size(), f.target().size()});
  auto rep = is_stable_bounded(f, n);
  Json r{{"verdict", verdict(rep.stable)},
         {"scope", "bounded"},
         {"bound", n},
         {"maps_checked", rep.maps_checked}};
  if (rep.failing_map) {
    r["failing_map"] = io::to_json(*rep.failing_map);
    r["failing_class"] = *rep.failing_class;
  }
  return {std::move(r), rep.stable ? kTrue : kFalse};
}

Outcome cmd_precover(Context& c, const Options& o) {
  auto a = c.act(o.act);
  auto x = c.act_class(o.cls);
  auto p = precover(a, x);
  if (!p.map) {
    return {{{"verdict", "false"}, {"nonexistence", p.nonexistence}}, kFalse};
  }
  Json summands = Json::array();
  for (const auto& s : p.summands) {
    summands.push_back({{"member", s.member}, {"values", s.map.values()}});
  }
  return {{{"verdict", "true"}, {"precover", io::to_json(*p.map)}, {"summands", std::move(summands)}},
          kTrue};
}

Outcome cmd_cover_check(Context& c, const Options& o) {
  auto g = c.map(o.map);
  auto x = c.act_class(o.cls);
  if (o.mode != "cover" && o.mode != "precover") {
    throw InputError("cover-check: --mode must be precover or cover");
  }
  auto d = check_precover(g, x, o.mode == "cover" ? CoverMode::cover : CoverMode::precover);
  return {{{"verdict", verdict(d.holds)}, {"mode", o.mode}, {"decision", decision_json(d)}},
          d.holds ? kTrue : kFalse};
}

Outcome cmd_wfs_verify(Context& c, const Options& o) {
  auto m = c.monoid(o.monoid);
  if (o.side != "right" && o.side != "left") {
    throw InputError("wfs-verify: --side must be right or left");
  }
  if (o.universe < 1 || o.universe > 4) {
    throw InputError("wfs-verify: --universe must be between 1 and 4");
  }
  using K = ClassDescriptor::Kind;
  std::pair<K, K> sys;
  if (o.system == "u-sp") {
    sys = {K::unitary, K::split_epi};
  } else if (o.system == "u-e") {
    sys = {K::unitary, K::epi};
  } else if (o.system == "mono-epi") {
    sys = {K::mono, K::epi};
  } else {
    throw InputError("wfs-verify: --system must be u-sp, u-e or mono-epi");
  }
  auto u = shared_universe(m, o.side == "right" ? Side::right : Side::left, o.universe);
  auto rep = wfs_verify(ClassDescriptor::of(sys.first), ClassDescriptor::of(sys.second), *u,
                        factor_unitary_split);
  Json vs = Json::array();
  for (const auto& v : rep.violations) {
    vs.push_back({{"condition", v.condition}, {"detail", v.detail}, {"witnesses", maps_json(v.witnesses)}});
  }
  return {{{"verdict", verdict(rep.passed)},
           {"scope", "bounded"},
           {"system", o.system},
           {"universe", {{"acts", u->acts().size()}, {"maps", u->maps().size()}, {"max_size", o.universe}}},
           {"left_members", rep.left_members},
           {"right_members", rep.right_members},
           {"squares_checked", rep.squares_checked},
           {"retract_situations", rep.retract_situations},
           {"violations", std::move(vs)}},
          rep.passed ? kTrue : kFalse};
}

Json cells_json(const CellStep& step) {
  Json cells = Json::array();
  for (const auto& cell : step.cells) {
    Json j{{"generator", cell.generator}, {"top", cell.top}};
    if (!cell.bottom.empty()) {
      j["bottom"] = cell.bottom;
    }
    cells.push_back(std::move(j));
  }
  return cells;
}

Outcome cmd_soa(Context& c, const Options& o) {
  auto g = c.map(o.map);
  auto gens = c.maps_from(o.gens);
  if (gens.empty()) {
    throw InputError("soa: --gens names no maps");
  }
  auto r = small_object_factorize(g, gens, o.max_steps, o.max_size, o.min_steps);
  std::string why;
  const bool replays = replay_soa(r, &why);
  Json stages = Json::array();
  for (const auto& st : r.stages) {
    stages.push_back({{"size", st.middle.size()}, {"cells", cells_json(st.cells)}});
  }
  const bool done = r.status == SoaStatus::completed;
  Json rep{{"verdict", done ? "true" : "inconclusive"},
           {"status", done ? "completed" : "cap-reached"},
           {"stages", r.stages.size()},
           {"stage_detail", std::move(stages)},
           {"theta", io::to_json(r.theta)},
           {"phi", io::to_json(r.phi)},
           {"generators", maps_json(r.generators)},
           {"replays", replays}};
  if (done) {
    Json fillers = Json::array();
    for (const auto& [sq, h] : r.rlp_certificate.fillers) {
      fillers.push_back({{"top", sq.top.values()}, {"bottom", sq.bottom.values()}, {"filler", h.values()}});
    }
    rep["rlp_fillers"] = std::move(fillers);
  } else {
    rep["note"] = r.note;
  }
  if (!replays) {
    rep["replay_error"] = why;
  }
  return {std::move(rep), done ? kTrue : kInconclusive};
}

Outcome cmd_cof_cert(Context& c, const Options& o) {
  auto f = c.map(o.map);
  auto gens = c.maps_from(o.gens);
  if (gens.empty()) {
    throw InputError("cof-cert: --gens names no maps");
  }
  auto cert = cof_certificate(f, gens, o.max_len, o.max_size);
  if (!cert) {
    return {{{"verdict", "inconclusive"}, {"note", "no certificate within the caps"},
             {"max_len", o.max_len}},
            kInconclusive};
  }
  std::string why;
  const bool ok = verify_certificate(*cert, &why);
  Json steps = Json::array();
  for (const auto& s : cert->steps) {
    steps.push_back(cells_json(s));
  }
  Json r{{"verdict", ok ? "true" : "false"},
         {"steps", std::move(steps)},
         {"composite", io::to_json(cert->composite)},
         {"generators", maps_json(cert->generators)},
         {"verified", ok}};
  if (cert->retract) {
    r["retract"] = {{"alpha", cert->retract->alpha.values()}, {"beta", cert->retract->beta.values()}};
  }
  if (!ok) {
    r["verify_error"] = why;
  }
  return {std::move(r), ok ? kTrue : kFalse};
}

Outcome cmd_centred_precover(Context& c, const Options& o) {
  auto a = c.act(o.act).with_centred(true);
  auto x = c.act_class(o.cls);
  if (!x.centred) {
    std::vector<Act> members;
    for (const auto& m : x.members) {
      members.push_back(m.with_centred(true));
    }
    x = ActClass::centred_list(std::move(members));
  }
  auto probe = o.probe.empty() ? x.members.front() : c.act(o.probe).with_centred(true);
  auto res = centred_wfs_precover(
      a, ClassDescriptor::centred_unitary_in(x), ClassDescriptor::projective_right(x),
      [&](const ActMap& f) { return factor_centred_precover(f, x); }, probe);
  Json fillers = Json::array();
  for (const auto& [p, k] : res.fillers) {
    fillers.push_back({{"probe", p.values()}, {"filler", k.values()}});
  }
  const bool ok = res.unlifted.empty();
  return {{{"verdict", verdict(ok)},
           {"a_star", io::to_json(res.a_star)},
           {"factorization", factorization_json(res.factorization)},
           {"left_membership", decision_json(res.left_membership)},
           {"right_membership", decision_json(res.right_membership)},
           {"fillers", std::move(fillers)},
           {"unlifted", maps_json(res.unlifted)},
           {"degenerate", res.degenerate},
           {"note", res.note}},
          ok ? kTrue : kFalse};
}

// ---------------------------------------------------------------------------
// Text rendering

bool is_map(const Json& j) { return j.is_object() && j.value("kind", "") == "map"; }

std::string short_map(const Json& j) {
  return j["values"].dump() + " : " + std::to_string(j["source"]["size"].get<std::size_t>()) +
         " -> " + std::to_string(j["target"]["size"].get<std::size_t>());
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (is_map(value)) {
      out << indent << key << ": " << short_map(value) << "\n";
    } else if (value.is_object()) {
      if (value.value("kind", "") == "act") {
        out << indent << key << ": act of size " << value["size"] << " action " << value["action"].dump()
            << "\n";
        continue;
      }
      out << indent << key << ":\n";
      render(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        if (is_map(item)) {
          out << indent << "  - " << short_map(item) << "\n";
        } else {
          out << indent << "  -\n";
          render(item, out, indent + "    ");
        }
      }
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

void render_text(const Json& report, std::ostream& out) {
  out << "verdict: " << report.value("verdict", "?") << "\n";
  Json rest = report;
  rest.erase("verdict");
  render(rest, out, "");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite monoid acts: constructions, map classes, lifting and factorizations",
               "actwfs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  using Handler = std::function<Outcome(Context&, const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h, bool files_required = true) {
    auto* s = app.add_subcommand(name, help);
    auto* opt = s->add_option("files", o.files, "input documents");
    if (files_required) {
      opt->required();
    }
    commands.emplace_back(s, std::move(h));
    return s;
  };

  sub("validate", "check every document against the laws", cmd_validate);
  auto* hom = sub("hom", "enumerate maps between two acts", cmd_hom);
  hom->add_option("--source", o.source);
  hom->add_option("--target", o.target);
  sub("lift", "diagonal filler for a square", cmd_lift)->add_option("--square", o.square);
  sub("classify", "mono/epi/split/unitary flags", cmd_classify)->add_option("--map", o.map);
  auto* factor = sub("factor", "factor a map", cmd_factor);
  factor->add_option("--map", o.map);
  factor->add_option("--system", o.system)->check(CLI::IsMember({"u-sp", "precover"}));
  factor->add_option("--class", o.cls);
  auto* po = sub("pushout", "pushout of a span", cmd_pushout);
  po->add_option("--f", o.f);
  po->add_option("--u", o.u);
  auto* pb = sub("pullback", "pullback of a cospan", cmd_pullback);
  pb->add_option("--f", o.f);
  pb->add_option("--g", o.g);
  pb->add_flag("--permit-empty", o.permit_empty);
  auto* ten = sub("tensor", "tensor product of a right and a left act", cmd_tensor);
  ten->add_option("--right", o.right);
  ten->add_option("--left", o.left);
  ten->add_option("--along", o.along, "left map X -> Y for the induced map");
  auto* rees = sub("rees", "Rees quotient by the image of a mono", cmd_rees);
  rees->add_option("--map", o.map);
  rees->add_flag("--allow-non-mono", o.allow_non_mono);
  auto* flat = sub("flat", "flatness up to a bound", cmd_flat);
  flat->add_option("--act", o.act);
  flat->add_option("--bound", o.bound);
  auto* pure = sub("pure", "pure epimorphism up to a bound", cmd_pure);
  pure->add_option("--map", o.map);
  pure->add_option("--bound", o.bound);
  auto* stable = sub("stable", "stability up to a bound", cmd_stable);
  stable->add_option("--map", o.map);
  stable->add_option("--bound", o.bound);
  auto* pre = sub("precover", "canonical precover by an explicit class", cmd_precover);
  pre->add_option("--act", o.act);
  pre->add_option("--class", o.cls);
  auto* cover = sub("cover-check", "precover or cover test", cmd_cover_check);
  cover->add_option("--map", o.map);
  cover->add_option("--class", o.cls);
  cover->add_option("--mode", o.mode);
  auto* wfs = sub("wfs-verify", "weak factorization axioms on a universe", cmd_wfs_verify, false);
  wfs->add_option("--monoid", o.monoid, "document name, file, or Z|C2|trivial");
  wfs->add_option("--universe", o.universe, "largest act size");
  wfs->add_option("--side", o.side);
  wfs->add_option("--system", o.system, "u-sp, u-e or mono-epi");
  auto* soa = sub("soa", "bounded small object argument", cmd_soa);
  soa->add_option("--map", o.map);
  soa->add_option("--gens", o.gens, "files or map names")->required();
  soa->add_option("--max-steps", o.max_steps);
  soa->add_option("--max-size", o.max_size);
  soa->add_option("--min-steps", o.min_steps);
  auto* cof = sub("cof-cert", "certificate of membership in the saturation", cmd_cof_cert);
  cof->add_option("--map", o.map);
  cof->add_option("--gens", o.gens, "files or map names")->required();
  cof->add_option("--max-len", o.max_len);
  cof->add_option("--max-size", o.max_size);
  auto* cp = sub("centred-precover", "precover of a centred act from a factorization",
                 cmd_centred_precover);
  cp->add_option("--act", o.act);
  cp->add_option("--class", o.cls);
  cp->add_option("--probe", o.probe);
  auto* job = app.add_subcommand("job", "run a job document");
  job->add_option("file", o.files, "job document")->required();
  job->add_option("--job", o.job);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  auto fail = [&](const std::string& msg) {
    Json r{{"verdict", "input-error"}, {"error", msg}};
    if (o.format == "text") {
      render_text(r, out);
    } else {
      out << r.dump(2) << "\n";
    }
    err << "error: " << msg << "\n";
    return kInputError;
  };

  try {
    if (job->parsed()) {
      io::Library lib;
      lib.add_file(o.files.front());
      auto j = lib.job(o.job.empty() ? lib.names("job").at(0) : o.job);
      std::vector<std::string> next{j.command};
      next.insert(next.end(), j.arguments.begin(), j.arguments.end());
      if (j.command == "job") {
        return fail("job: a job may not run another job");
      }
      return run(next, out, err);
    }
    for (auto& [s, handler] : commands) {
      if (!s->parsed()) {
        continue;
      }
      Context ctx(o);
      auto outcome = handler(ctx, o);
      outcome.report["command"] = s->get_name();
      if (o.format == "text") {
        render_text(outcome.report, out);
      } else {
        out << outcome.report.dump(2) << "\n";
      }
      return outcome.code;
    }
  } catch (const std::out_of_range& e) {
    return fail(std::string("missing document: ") + e.what());
  } catch (const Error& e) {
    return fail(e.what());
  }
  return fail("no command");
}

}  // namespace actwfs::cli
