// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "actwfs/catalog.hpp"
#include "actwfs/classes.hpp"
#include "actwfs/constructions.hpp"
#include "actwfs/hom_search.hpp"
#include "actwfs/soa.hpp"
#include "actwfs/universe.hpp"
#include "actwfs/wfs.hpp"
#include "oracle/oracle.hpp"

using namespace actwfs;
namespace cat = actwfs::catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (failures++ < 3) detail << " [fail: " << what << "]";
      pass = false;
    }
  }
};

using Suite = std::function<void(Outcome&)>;

const std::vector<FiniteMonoid>& small_monoids() {
  static const std::vector<FiniteMonoid> ms = cat::monoids_up_to_2();
  return ms;
}

std::vector<ActMap> monos(const Universe& u) {
  std::vector<ActMap> out;
  for (const auto& f : u.maps()) {
    if (is_mono(f)) out.push_back(f);
  }
  return out;
}

bool contains_map(const std::vector<ActMap>& maps, const ActMap& f) {
  for (const auto& g : maps) {
    if (g == f) return true;
  }
  return false;
}

bool same_maps(const std::vector<ActMap>& a, const std::vector<ActMap>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

// Induced map B/A -> C/A for A -> B -> C monos.
ActMap induced_on_quotients(const ActMap& f, const ActMap& g) {
  auto ba = rees_quotient(f);
  auto ca = rees_quotient(compose(g, f));
  std::vector<Index> values(ba.object.size());
  for (Index b = 0; b < f.target().size(); ++b) {
    values[ba.leg("projection")(b)] = ca.leg("projection")(g(b));
  }
  return ActMap(ba.object, ca.object, values);
}

void wfs_suite(Outcome& o) {
  std::size_t maps = 0, squares = 0;
  for (const auto& m : small_monoids()) {
    auto u = Universe::enumerate(m, Side::right, 3);
    auto r = wfs_verify(ClassDescriptor::of(ClassDescriptor::Kind::unitary),
                        ClassDescriptor::of(ClassDescriptor::Kind::split_epi), u,
                        factor_unitary_split);
    maps += r.maps_checked;
    squares += r.squares_checked;
    o.check(r.passed, "monoid of order " + std::to_string(m.size()));
  }
  o.detail << maps << " maps, " << squares << " squares";
}

void box_suite(Outcome& o) {
  std::size_t samples = 0;
  std::mt19937 rng(2);
  for (const auto& m : small_monoids()) {
    auto u = Universe::enumerate(m, Side::right, 3);
    const auto& all = u.maps();
    std::vector<std::vector<ActMap>> cs{{}};
    for (const auto& f : all) cs.push_back({f});
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 10; ++t) cs.push_back({all[pick(rng)], all[pick(rng)], all[pick(rng)]});
    for (const auto& c : cs) {
      ++samples;
      auto l = relative_box(c, u, LiftSide::left);
      auto r = relative_box(c, u, LiftSide::right);
      auto lr = relative_box(l, u, LiftSide::right);
      auto rl = relative_box(r, u, LiftSide::left);
      for (const auto& f : c) {
        o.check(contains_map(lr, f), "C not inside (^box C)^box");
        o.check(contains_map(rl, f), "C not inside ^box(C^box)");
      }
      o.check(same_maps(relative_box(lr, u, LiftSide::left), l), "^box idempotence");
      o.check(same_maps(relative_box(rl, u, LiftSide::right), r), "box^ idempotence");
    }
  }
  o.detail << samples << " samples of C over 3 universes";
}

void rees_suite(Outcome& o) {
  std::size_t chains = 0, quotients = 0;
  for (const auto& m : {cat::zero_monoid(), cat::cyclic2()}) {
    auto u = Universe::enumerate(m, Side::right, 4);
    auto ms = monos(u);
    for (const auto& f : ms) {
      ++quotients;
      o.check(rees_quotient(f).object.size() == f.target().size() - f.source().size() + 1,
              "size law");
      for (const auto& g : ms) {
        if (!(g.source() == f.target())) continue;
        ++chains;
        auto gbar = induced_on_quotients(f, g);
        o.check(validate(gbar).empty() && is_mono(gbar), "induced map not a mono");
        o.check(find_isomorphism(rees_quotient(gbar).object, rees_quotient(g).object).has_value(),
                "no isomorphism of iterated quotient");
      }
    }
  }
  o.detail << chains << " chains, " << quotients << " quotients";
}

void pushout_suite(Outcome& o) {
  const auto m = cat::zero_monoid();
  auto u = Universe::enumerate(m, Side::right, 3);
  auto q = Universe::enumerate(m, Side::right, 4);
  std::size_t spans = 0, cocones = 0;
  for (const auto& f : u.maps()) {
    for (const auto& g : u.maps()) {
      if (!(f.source() == g.source())) continue;
      ++spans;
      auto p = pushout(f, g);
      const ActMap& v = p.leg("v");
      const ActMap& w = p.leg("g");
      o.check(compose(v, f) == compose(w, g), "square does not commute");
      for (const auto& target : q.acts()) {
        auto from_p = oracle::maps(p.object, target);
        for (const auto& pb : oracle::maps(f.target(), target)) {
          for (const auto& pc : oracle::maps(g.target(), target)) {
            if (!(compose(pb, f) == compose(pc, g))) continue;
            ++cocones;
            std::size_t mediating = 0;
            for (const auto& h : from_p) {
              mediating += compose(h, v) == pb && compose(h, w) == pc;
            }
            o.check(mediating == 1, "mediating map count " + std::to_string(mediating));
          }
        }
      }
    }
  }
  o.detail << spans << " spans, " << cocones << " cocones";
}

void tensor_suite(Outcome& o) {
  const std::size_t n = 3;
  std::size_t acts = 0, monos_checked = 0, retracts = 0;
  for (const auto& m : {cat::zero_monoid(), cat::cyclic2()}) {
    auto u = Universe::enumerate(m, Side::right, 4);
    const Act s = regular_act(m, Side::left);
    for (const auto& a : u.acts()) {
      ++acts;
      auto t = tensor(a, s);
      std::vector<Index> unit(a.size());
      for (Index x = 0; x < a.size(); ++x) unit[x] = t.cls(x, m.identity());
      std::vector<Index> table(a.size() * m.size());
      bool ok = t.class_count == a.size();
      if (ok) {
        for (Index x = 0; x < a.size(); ++x) {
          for (Index g = 0; g < m.size(); ++g) table[unit[x] * m.size() + g] = unit[a.act(x, g)];
        }
        ActMap iso(a, Act(m, Side::right, a.size(), table), unit);
        ok = validate(iso).empty() && is_iso(iso);
      }
      o.check(ok, "unit isomorphism");
    }
  }
  for (const auto& m : small_monoids()) {
    auto u = Universe::enumerate(m, Side::right, 3);
    for (const auto& f : monos(u)) {
      ++monos_checked;
      const bool quotient_flat = is_flat_bounded(rees_quotient(f).object, n).flat;
      const bool stable = is_stable_bounded(f, n).stable;
      const bool target_flat = is_flat_bounded(f.target(), n).flat;
      o.check(!quotient_flat || stable, "flat quotient but not stable");
      o.check(!(target_flat && stable) || quotient_flat, "flat and stable but quotient not flat");
    }
    for (const auto& f : u.maps()) {
      if (!find_retraction(f)) continue;
      ++retracts;
      o.check(!is_flat_bounded(f.target(), n).flat || is_flat_bounded(f.source(), n).flat,
              "retract of flat not flat");
    }
  }
  o.detail << acts << " unit checks, " << monos_checked << " monos, " << retracts
           << " retracts at bound " << n;
}

void fmono_suite(Outcome& o) {
  const std::size_t n = 3;
  auto u = Universe::enumerate(cat::zero_monoid(), Side::right, 3);
  auto fm = ClassDescriptor::flat_rees_mono(n);
  std::vector<ActMap> members;
  for (const auto& f : u.maps()) {
    if (in_class(f, fm).holds) members.push_back(f);
  }
  std::size_t pushouts = 0, composites = 0, retracts = 0;
  for (const auto& f : members) {
    for (const auto& w : u.maps()) {
      if (!(w.source() == f.source())) continue;
      ++pushouts;
      auto p = pushout(f, w);
      const ActMap& g = p.leg("g");
      const ActMap& v = p.leg("v");
      o.check(is_mono(g), "pushout leg not mono");
      if (!is_mono(g)) continue;
      auto yx = rees_quotient(f);
      auto pc = rees_quotient(g);
      std::vector<Index> h(yx.object.size());
      for (Index y = 0; y < f.target().size(); ++y) {
        h[yx.leg("projection")(y)] = pc.leg("projection")(v(y));
      }
      ActMap hm(yx.object, pc.object, h);
      o.check(validate(hm).empty() && is_iso(hm), "proof map is not an iso");
      o.check(find_isomorphism(yx.object, pc.object).has_value(), "no iso of quotients");
      o.check(in_class(g, fm).holds, "pushout leaves the class");
    }
    for (const auto& b : members) {
      if (!(f.target() == b.source())) continue;
      ++composites;
      o.check(in_class(compose(b, f), fm).holds, "composite leaves the class");
    }
    for (const auto& g : u.maps()) {
      if (!(g.source() == f.source())) continue;
      auto w = find_map_retract(f, g);
      if (!w) continue;
      ++retracts;
      o.check(is_mono(g) && in_class(g, fm).holds, "retract leaves the class");
      // the retract equations descend to the Rees quotients
      if (is_mono(g)) {
        auto cq = rees_quotient(g);
        auto yq = rees_quotient(f);
        std::vector<Index> ab(cq.object.size()), bb(yq.object.size());
        for (Index c = 0; c < g.target().size(); ++c) {
          ab[cq.leg("projection")(c)] = yq.leg("projection")(w->alpha(c));
        }
        for (Index y = 0; y < f.target().size(); ++y) {
          bb[yq.leg("projection")(y)] = cq.leg("projection")(w->beta(y));
        }
        ActMap alpha_bar(cq.object, yq.object, ab);
        ActMap beta_bar(yq.object, cq.object, bb);
        o.check(compose(beta_bar, alpha_bar) == identity_map(cq.object), "quotient retract");
      }
    }
  }
  o.detail << members.size() << " members, " << pushouts << " pushouts, " << composites
           << " composites, " << retracts << " retracts";
}

void soa_suite(Outcome& o) {
  const Act theta = cat::theta(cat::zero_monoid());
  const ActMap g(cat::a2(), theta, {0, 0});
  const std::vector<ActMap> gens{cat::zero_inclusion()};
  auto early = small_object_factorize(g, gens);
  o.check(early.status == SoaStatus::completed && early.stages.empty(), "default run");
  auto one = small_object_factorize(g, gens, kDefaultMaxSteps, kDefaultMaxSize, 1);
  o.check(one.status == SoaStatus::completed && one.stages.size() == 1 &&
              one.stages.front().middle.size() == 3,
          "one-step trace");
  o.check(has_lifting(LiftSide::right, one.phi, gens).holds && one.rlp_certificate.holds,
          "RLP certificate");
  o.check(replay_soa(one) && verify_certificate(certificate_from_soa(one)), "replay");

  std::size_t runs = 0, immediate = 0, capped = 0;
  for (const auto& m : small_monoids()) {
    auto u = Universe::enumerate(m, Side::right, 2);
    for (const auto& c : u.maps()) {
      for (const auto& f : u.maps()) {
        ++runs;
        const bool lifts = has_lifting(LiftSide::right, f, {c}).holds;
        auto r = small_object_factorize(f, {c}, 3, 16);
        if (lifts) {
          ++immediate;
          o.check(r.stages.empty() && r.status == SoaStatus::completed, "early exit");
        }
        o.check(compose(r.phi, r.theta) == f, "phi after theta");
        o.check(replay_soa(r), "replay");
        o.check(verify_certificate(certificate_from_soa(r)), "certificate");
        if (r.status == SoaStatus::cap_reached) ++capped;
      }
    }
  }
  // a run forced past its caps
  const Act c2 = cat::c2_regular();
  const Act pt = cat::theta(cat::cyclic2());
  auto sum = coproduct({c2, pt});
  auto forced = small_object_factorize(ActMap(c2, pt, {0, 0}), {ActMap(pt, sum.object, {2})}, 4,
                                       64, 4);
  auto tight = small_object_factorize(g, gens, 8, 2, 1);
  for (const auto& r : {forced, tight}) {
    if (r.status == SoaStatus::cap_reached) ++capped;
    o.check(compose(r.phi, r.theta) == r.original && replay_soa(r) &&
                verify_certificate(certificate_from_soa(r)),
            "capped run invariants");
  }
  o.check(capped > 0, "no capped run exercised");
  o.detail << "example: 0 steps by default, 1 step with one forced stage; " << runs << " runs, "
           << immediate << " immediate exits, " << capped << " capped";
}

void precover_suite(Outcome& o) {
  const auto z = cat::zero_monoid();
  const std::vector<Act> pool{cat::sz(), cat::theta(z), cat::a2()};
  auto u = Universe::enumerate(z, Side::right, 3);
  std::size_t checked = 0;
  for (std::size_t mask = 1; mask < 8; ++mask) {
    std::vector<Act> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) members.push_back(pool[i]);
    }
    auto x = ActClass::explicit_list(members);
    for (const auto& a : u.acts()) {
      ++checked;
      auto p = precover(a, x);
      o.check(p.map.has_value() && check_precover(*p.map, x, CoverMode::precover).holds,
              "precover fails");
    }
  }
  auto none = precover(cat::c2_regular(), ActClass::explicit_list({cat::theta(cat::cyclic2())}));
  o.check(!none.map.has_value() && !none.nonexistence.empty(), "nonexistence over C2");
  o.detail << checked << " (class, act) pairs, nonexistence reported";
}

void left_zero_suite(Outcome& o) {
  auto u = Universe::enumerate(cat::zero_monoid(), Side::right, 3);
  const ActMap iota = cat::zero_inclusion();
  std::vector<std::vector<ActMap>> cs{{iota}};
  for (const auto& c : u.maps()) cs.push_back({iota, c});
  std::size_t maps = 0, agree = 0;
  for (const auto& c : cs) {
    for (const auto& g : relative_box(c, u, LiftSide::right)) {
      ++maps;
      bool fix_in_image = true;
      for (const auto& k : fix_fibres(g)) {
        if (k.fibre.empty()) {
          fix_in_image = false;
          continue;
        }
        auto fibre = subact(g.source(), k.fibre).act;
        o.check(triangle(fibre, c, LiftSide::right).holds, "fibre not injective to C");
      }
      agree += is_epi(g) == fix_in_image;
    }
  }
  o.check(agree == maps, "epi and fixed-point criterion disagree");
  o.detail << cs.size() << " sets C, " << agree << "/" << maps << " agree";
}

void oracle_suite(Outcome& o) {
  std::mt19937 rng(10);
  std::vector<std::shared_ptr<const Universe>> us;
  for (const auto& m : small_monoids()) us.push_back(shared_universe(m, Side::right, 3));
  std::uniform_int_distribution<std::size_t> which(0, us.size() - 1);
  std::size_t counts[4] = {0, 0, 0, 0};
  for (int t = 0; t < 200; ++t) {
    const Universe& u = *us[which(rng)];
    std::uniform_int_distribution<std::size_t> act(0, u.acts().size() - 1);
    std::uniform_int_distribution<std::size_t> map(0, u.maps().size() - 1);
    const int kind = t % 4;
    ++counts[kind];
    switch (kind) {
      case 0: {
        const Act& a = u.acts()[act(rng)];
        o.check(is_flat_bounded(a, 3).flat == oracle::flat(a, 3), "flat");
        break;
      }
      case 1: {
        const ActMap& f = u.maps()[map(rng)];
        o.check(in_class(f, ClassDescriptor::pure_epi(2)).holds == oracle::pure(f, 2), "pure");
        break;
      }
      case 2: {
        ActMap f = u.maps()[map(rng)];
        while (!is_mono(f)) f = u.maps()[map(rng)];
        o.check(is_stable_bounded(f, 2).stable == oracle::stable(f, 2), "stable");
        break;
      }
      default: {
        const Act& p = u.acts()[act(rng)];
        const ActMap& f = u.maps()[map(rng)];
        o.check(is_projective_wrt(p, f).holds == oracle::projective(p, f), "projective");
        break;
      }
    }
  }
  o.detail << "200 instances (" << counts[0] << " flat, " << counts[1] << " pure, " << counts[2]
           << " stable, " << counts[3] << " projective)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Suite>> suites{
      {"weak factorization (U,Sp) over monoids of order <= 2, acts <= 3", wfs_suite},
      {"box operator algebra relative to each universe", box_suite},
      {"Rees quotients of mono chains, size law", rees_suite},
      {"pushout universal property over Z", pushout_suite},
      {"tensor unit, flat quotient and retract implications", tensor_suite},
      {"flat-Rees monos closed under pushout, composition, retract", fmono_suite},
      {"small object argument", soa_suite},
      {"canonical precovers", precover_suite},
      {"fibres over fixed points with a left zero", left_zero_suite},
      {"differential check against brute force", oracle_suite},
  };
  bool all = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      suites[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s: %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                suites[i].first.c_str(), o.detail.str().c_str(), secs);
  }
  return all ? 0 : 1;
}
