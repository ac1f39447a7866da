#include "actwfs/io.hpp"

#include <cstdint>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "actwfs/universe.hpp"

namespace actwfs::io {

namespace {

Json table_json(const std::vector<Index>& flat, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) {
      row.push_back(flat[r * cols + c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

void put_name(Json& j, const std::string& name) {
  if (!name.empty()) {
    j["name"] = name;
  }
}

}  // namespace

Json to_json(const FiniteMonoid& m, const std::string& name) {
  Json j{{"kind", "monoid"},
         {"size", m.size()},
         {"identity", m.identity()},
         {"mul", table_json(m.table(), m.size(), m.size())}};
  if (m.declared_zero()) {
    j["zero"] = *m.declared_zero();
  }
  put_name(j, name);
  return j;
}

Json to_json(const Act& a, const std::string& name) {
  const std::size_t cols = a.monoid().size();
  Json action = Json::array();
  if (a.side() == Side::right) {
    action = table_json(a.table(), a.size(), cols);
  } else {
    for (Index s = 0; s < cols; ++s) {
      Json row = Json::array();
      for (Index x = 0; x < a.size(); ++x) {
        row.push_back(a.act(x, s));
      }
      action.push_back(std::move(row));
    }
  }
  Json j{{"kind", "act"},
         {"monoid", to_json(a.monoid())},
         {"side", to_string(a.side())},
         {"size", a.size()},
         {"action", std::move(action)}};
  if (a.centred()) {
    j["centred"] = true;
  }
  put_name(j, name);
  return j;
}

Json to_json(const ActMap& f, const std::string& name) {
  Json j{{"kind", "map"},
         {"source", to_json(f.source())},
         {"target", to_json(f.target())},
         {"values", f.values()}};
  put_name(j, name);
  return j;
}

Json to_json(const Square& sq, const std::string& name) {
  Json j{{"kind", "square"},
         {"left", to_json(sq.left)},
         {"right", to_json(sq.right)},
         {"top", to_json(sq.top)},
         {"bottom", to_json(sq.bottom)}};
  put_name(j, name);
  return j;
}

Json to_json(const ActClass& c, const std::string& name) {
  Json j{{"kind", "class"}};
  switch (c.kind) {
    case ActClass::Kind::explicit_list: {
      j["type"] = "explicit";
      Json members = Json::array();
      for (const auto& m : c.members) {
        members.push_back(to_json(m));
      }
      j["members"] = std::move(members);
      j["coproducts"] = c.under_coproducts;
      j["summands"] = c.under_summands;
      j["retracts"] = c.under_retracts;
      if (c.centred) {
        j["centred"] = true;
      }
      break;
    }
    case ActClass::Kind::flat_bounded:
      j["type"] = "flat";
      j["bound"] = c.bound;
      break;
    case ActClass::Kind::projective_bounded:
      j["type"] = "projective";
      j["bound"] = c.bound;
      j["monoid"] = to_json(c.universe->monoid());
      j["side"] = to_string(c.universe->side());
      break;
    case ActClass::Kind::fp_bounded:
      j["type"] = "fp";
      j["bound"] = c.bound;
      j["coproducts"] = c.under_coproducts;
      break;
  }
  put_name(j, name);
  return j;
}

Json to_json(const UniverseSpec& u, const std::string& name) {
  Json j{{"kind", "universe-spec"},
         {"monoid", to_json(u.monoid)},
         {"side", to_string(u.side)},
         {"max_size", u.max_size}};
  put_name(j, name);
  return j;
}

Json to_json(const Job& job, const std::string& name) {
  Json j{{"kind", "job"}, {"command", job.command}, {"arguments", job.arguments}};
  put_name(j, name);
  return j;
}

std::string canonical(const Json& j) { return j.dump(); }

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  explicit Parser(const Library* lib) : lib_(lib) {}

  FiniteMonoid monoid(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "monoid", path);
    const std::size_t size = positive(field(d, "size", p), p + "/size");
    const Index identity = index(field(d, "identity", p), size, p + "/identity");
    auto rows = table(field(d, "mul", p), size, size, size, p + "/mul");
    std::optional<Index> zero;
    if (d.contains("zero") && !d["zero"].is_null()) {
      zero = index(d["zero"], size, p + "/zero");
    }
    return FiniteMonoid::from_rows(rows, identity, zero);
  }

  Act act(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "act", path);
    auto m = monoid(field(d, "monoid", p), p + "/monoid");
    const Side side = parse_side(field(d, "side", p), p + "/side");
    const std::size_t size = positive(field(d, "size", p), p + "/size");
    bool centred = false;
    if (d.contains("centred")) {
      if (!d["centred"].is_boolean()) {
        throw ParseError(p + "/centred", "expected a boolean");
      }
      centred = d["centred"].get<bool>();
    }
    std::vector<std::vector<Index>> rows;
    if (side == Side::right) {
      rows = table(field(d, "action", p), size, m.size(), size, p + "/action");
    } else {
      auto cols = table(field(d, "action", p), m.size(), size, size, p + "/action");
      rows.assign(size, std::vector<Index>(m.size()));
      for (Index s = 0; s < m.size(); ++s) {
        for (Index x = 0; x < size; ++x) {
          rows[x][s] = cols[s][x];
        }
      }
    }
    return Act::from_rows(m, side, rows, centred);
  }

  ActMap map(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "map", path);
    auto src = act(field(d, "source", p), p + "/source");
    auto tgt = act(field(d, "target", p), p + "/target");
    if (!src.compatible(tgt)) {
      throw ParseError(p, "source and target differ in monoid or side");
    }
    const Json& v = field(d, "values", p);
    if (!v.is_array() || v.size() != src.size()) {
      throw ParseError(p + "/values", "expected " + std::to_string(src.size()) + " values");
    }
    std::vector<Index> values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      values.push_back(index(v[i], tgt.size(), p + "/values/" + std::to_string(i)));
    }
    return ActMap(src, tgt, std::move(values));
  }

  Square square(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "square", path);
    return Square{map(field(d, "left", p), p + "/left"), map(field(d, "right", p), p + "/right"),
                  map(field(d, "top", p), p + "/top"), map(field(d, "bottom", p), p + "/bottom")};
  }

  ActClass act_class(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "class", path);
    const Json& t = field(d, "type", p);
    const std::string type = t.is_string() ? t.get<std::string>() : "";
    auto flag = [&](const char* key, bool fallback) {
      if (!d.contains(key)) {
        return fallback;
      }
      if (!d[key].is_boolean()) {
        throw ParseError(p + "/" + key, "expected a boolean");
      }
      return d[key].get<bool>();
    };
    if (type == "explicit") {
      const Json& ms = field(d, "members", p);
      if (!ms.is_array() || ms.empty()) {
        throw ParseError(p + "/members", "expected a non-empty array");
      }
      std::vector<Act> members;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        members.push_back(act(ms[i], p + "/members/" + std::to_string(i)));
        if (!members.back().compatible(members.front())) {
          throw ParseError(p + "/members/" + std::to_string(i),
                           "member over a different monoid or side");
        }
      }
      if (flag("centred", false)) {
        for (auto& m : members) {
          m = m.with_centred(true);
        }
        return ActClass::centred_list(std::move(members));
      }
      return ActClass::explicit_list(std::move(members), flag("coproducts", false),
                                     flag("summands", false), flag("retracts", false));
    }
    if (type == "flat") {
      return ActClass::flat_bounded(positive(field(d, "bound", p), p + "/bound"));
    }
    if (type == "fp") {
      return ActClass::fp_bounded(positive(field(d, "bound", p), p + "/bound"),
                                  flag("coproducts", true));
    }
    if (type == "projective") {
      auto m = monoid(field(d, "monoid", p), p + "/monoid");
      const Side side = parse_side(field(d, "side", p), p + "/side");
      const std::size_t bound = positive(field(d, "bound", p), p + "/bound");
      return ActClass::projective_bounded(shared_universe(m, side, bound));
    }
    throw ParseError(p + "/type", "expected explicit, flat, fp or projective");
  }

  UniverseSpec universe(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "universe-spec", path);
    return UniverseSpec{monoid(field(d, "monoid", p), p + "/monoid"),
                        parse_side(field(d, "side", p), p + "/side"),
                        positive(field(d, "max_size", p), p + "/max_size")};
  }

  Job job(const Json& j, const std::string& path) const {
    const auto& [d, p] = deref(j, "job", path);
    const Json& c = field(d, "command", p);
    if (!c.is_string()) {
      throw ParseError(p + "/command", "expected a string");
    }
    Job out{c.get<std::string>(), {}};
    if (d.contains("arguments")) {
      const Json& a = d["arguments"];
      if (!a.is_array()) {
        throw ParseError(p + "/arguments", "expected an array of strings");
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_string()) {
          throw ParseError(p + "/arguments/" + std::to_string(i), "expected a string");
        }
        out.arguments.push_back(a[i].get<std::string>());
      }
    }
    return out;
  }

 private:
  struct Located {
    const Json& doc;
    std::string path;
  };

  // A string is a reference into the library; an object is inline and
  // must carry the expected kind when it names one.
  Located deref(const Json& j, const std::string& kind, const std::string& path) const {
    if (j.is_string()) {
      if (!lib_) {
        throw ParseError(path, "reference '" + j.get<std::string>() +
                                   "' cannot be resolved outside a document set");
      }
      const auto& e = lib_->find(j.get<std::string>(), kind);
      return {e.doc, e.path};
    }
    if (!j.is_object()) {
      throw ParseError(path, "expected a " + kind + " object or a name");
    }
    if (j.contains("kind") && j["kind"] != kind) {
      throw ParseError(path + "/kind", "expected kind '" + kind + "'");
    }
    return {j, path};
  }

  static const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) {
      throw ParseError(path + "/" + key, "missing field");
    }
    return j[key];
  }

  // values built in memory may carry signed integers
  static bool natural(const Json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
  }

  static std::size_t positive(const Json& j, const std::string& path) {
    if (!natural(j) || j.get<std::size_t>() == 0) {
      throw ParseError(path, "expected a positive integer");
    }
    return j.get<std::size_t>();
  }

  static Index index(const Json& j, std::size_t bound, const std::string& path) {
    if (!natural(j) || j.get<std::size_t>() >= bound) {
      throw ParseError(path, "expected an index below " + std::to_string(bound));
    }
    return j.get<Index>();
  }

  static std::vector<std::vector<Index>> table(const Json& j, std::size_t rows, std::size_t cols,
                                               std::size_t bound, const std::string& path) {
    if (!j.is_array() || j.size() != rows) {
      throw ParseError(path, "expected " + std::to_string(rows) + " rows");
    }
    std::vector<std::vector<Index>> out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rp = path + "/" + std::to_string(r);
      if (!j[r].is_array() || j[r].size() != cols) {
        throw ParseError(rp, "expected " + std::to_string(cols) + " entries");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        out[r].push_back(index(j[r][c], bound, rp + "/" + std::to_string(c)));
      }
    }
    return out;
  }

  static Side parse_side(const Json& j, const std::string& path) {
    if (j == "right") {
      return Side::right;
    }
    if (j == "left") {
      return Side::left;
    }
    throw ParseError(path, "expected 'right' or 'left'");
  }

  const Library* lib_;
};

FiniteMonoid parse_monoid(const Json& j) { return Parser(nullptr).monoid(j, ""); }
Act parse_act(const Json& j) { return Parser(nullptr).act(j, ""); }
ActMap parse_map(const Json& j) { return Parser(nullptr).map(j, ""); }
Square parse_square(const Json& j) { return Parser(nullptr).square(j, ""); }
ActClass parse_class(const Json& j) { return Parser(nullptr).act_class(j, ""); }

// ---------------------------------------------------------------------------
// Library

namespace {

const std::vector<std::string> kKinds = {"monoid", "act",           "map", "square",
                                         "class",  "universe-spec", "job"};

}  // namespace

void Library::add(const Json& doc, const std::string& origin) {
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const std::string p = "/" + std::to_string(i);
      if (!doc[i].is_object()) {
        throw ParseError(origin + ":" + p, "expected a document object");
      }
      Json d = doc[i];
      const Json& kind = d.contains("kind") ? d["kind"] : Json();
      if (!kind.is_string() ||
          std::find(kKinds.begin(), kKinds.end(), kind.get<std::string>()) == kKinds.end()) {
        throw ParseError(origin + ":" + p + "/kind", "unknown or missing document kind");
      }
      std::string name = d.contains("name") && d["name"].is_string()
                             ? d["name"].get<std::string>()
                             : "#" + std::to_string(anonymous_++);
      if (docs_.count(name)) {
        throw ParseError(origin + ":" + p + "/name", "duplicate name '" + name + "'");
      }
      order_.emplace_back(name, kind.get<std::string>());
      docs_.emplace(name, Entry{std::move(d), kind.get<std::string>(), origin, origin + ":" + p});
    }
    return;
  }
  add(Json::array({doc}), origin);
}

void Library::add_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ":", std::string("malformed JSON: ") + e.what());
  }
  add(j, origin);
}

void Library::add_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ":", "cannot open file");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  add_text(ss.str(), path);
}

const Library::Entry& Library::find(const std::string& name, const std::string& kind) const {
  auto it = docs_.find(name);
  if (it == docs_.end()) {
    throw ParseError(name, "no document with this name");
  }
  if (it->second.kind != kind) {
    throw ParseError(it->second.path, "'" + name + "' is a " + it->second.kind + ", not a " + kind);
  }
  return it->second;
}

FiniteMonoid Library::monoid(const std::string& name) const {
  return Parser(this).monoid(Json(name), name);
}
Act Library::act(const std::string& name) const { return Parser(this).act(Json(name), name); }
ActMap Library::map(const std::string& name) const { return Parser(this).map(Json(name), name); }
Square Library::square(const std::string& name) const {
  return Parser(this).square(Json(name), name);
}
ActClass Library::act_class(const std::string& name) const {
  return Parser(this).act_class(Json(name), name);
}
UniverseSpec Library::universe(const std::string& name) const {
  return Parser(this).universe(Json(name), name);
}
Job Library::job(const std::string& name) const { return Parser(this).job(Json(name), name); }

std::vector<std::string> Library::names(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& [name, k] : order_) {
    if (k == kind) {
      out.push_back(name);
    }
  }
  return out;
}

std::vector<std::string> Library::names(const std::string& kind, const std::string& origin) const {
  std::vector<std::string> out;
  for (const auto& [name, k] : order_) {
    if (k == kind && docs_.at(name).origin == origin) {
      out.push_back(name);
    }
  }
  return out;
}

const Json& Library::raw(const std::string& name) const {
  auto it = docs_.find(name);
  if (it == docs_.end()) {
    throw ParseError(name, "no document with this name");
  }
  return it->second.doc;
}

}  // namespace actwfs::io
