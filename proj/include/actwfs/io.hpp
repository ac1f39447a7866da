#pragma once

// JSON documents for monoids, acts, maps, squares, classes, universe specs
// and jobs. Names exist only here; the engine works with indices.
//
// A document field that refers to another object holds either its name
// (resolved within the loaded set) or the object inline. Left-act tables
// are written |S| x size, as action[s][x].

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "actwfs/classes.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"

namespace actwfs::io {

class Parser;

using Json = nlohmann::json;

/// Schema violation; `path` locates the offending value, e.g. "/mul/1/0".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct UniverseSpec {
  FiniteMonoid monoid;
  Side side = Side::right;
  std::size_t max_size = 1;
};

struct Job {
  std::string command;
  std::vector<std::string> arguments;
};

// Every nested object is written inline. A non-empty name is added as
// the "name" field.
Json to_json(const FiniteMonoid& m, const std::string& name = "");
Json to_json(const Act& a, const std::string& name = "");
Json to_json(const ActMap& f, const std::string& name = "");
Json to_json(const Square& sq, const std::string& name = "");
Json to_json(const ActClass& c, const std::string& name = "");
Json to_json(const UniverseSpec& u, const std::string& name = "");
Json to_json(const Job& j, const std::string& name = "");

/// Sorted keys, no whitespace; byte-identical for equal inputs.
std::string canonical(const Json& j);

/// A set of named documents loaded from one or more files.
class Library {
 public:
  /// Accepts a single document or an array of documents.
  void add(const Json& doc, const std::string& origin = "");
  void add_text(const std::string& text, const std::string& origin = "");
  void add_file(const std::string& path);

  FiniteMonoid monoid(const std::string& name) const;
  Act act(const std::string& name) const;
  ActMap map(const std::string& name) const;
  Square square(const std::string& name) const;
  ActClass act_class(const std::string& name) const;
  UniverseSpec universe(const std::string& name) const;
  Job job(const std::string& name) const;

  /// Names of documents of a kind, in load order.
  std::vector<std::string> names(const std::string& kind) const;
  /// Names in load order restricted to documents from one origin.
  std::vector<std::string> names(const std::string& kind, const std::string& origin) const;
  const Json& raw(const std::string& name) const;

  /// Kind of every document, in load order.
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept {
    return order_;
  }

 private:
  struct Entry {
    Json doc;
    std::string kind;
    std::string origin;
    std::string path;
  };
  const Entry& find(const std::string& name, const std::string& kind) const;

  std::map<std::string, Entry> docs_;
  std::vector<std::pair<std::string, std::string>> order_;  // (name, kind)
  int anonymous_ = 0;

  friend class Parser;
};

/// Parse a single self-contained document (references must be inline).
FiniteMonoid parse_monoid(const Json& j);
Act parse_act(const Json& j);
ActMap parse_map(const Json& j);
Square parse_square(const Json& j);
ActClass parse_class(const Json& j);

}  // namespace actwfs::io
