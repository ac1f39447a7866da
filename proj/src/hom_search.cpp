#include "actwfs/hom_search.hpp"

#include <limits>

#include "actwfs/error.hpp"

namespace actwfs {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

class Searcher {
 public:
  Searcher(const Act& source, const Act& target, const MapConstraints& constraints)
      : source_(source),
        target_(target),
        constraints_(constraints),
        values_(source.size(), kUnset),
        used_(target.size(), 0) {}

  void run(const std::function<bool(const std::vector<Index>&)>& visit) {
    if (constraints_.injective && source_.size() > target_.size()) {
      return;
    }
    if (!constraints_.fixed.empty()) {
      for (Index a = 0; a < constraints_.fixed.size(); ++a) {
        if (constraints_.fixed[a] && !assign(a, *constraints_.fixed[a])) {
          return;
        }
      }
    }
    descend(0, visit);
  }

 private:
  bool permitted(Index a, Index b) const {
    if (b >= target_.size()) {
      return false;
    }
    return constraints_.allowed.empty() || constraints_.allowed[a][b];
  }

  // Sets h(a) = b and closes under h(x·s) = h(x)·s. On conflict the
  // partial assignment stays on the trail for the caller to undo.
  bool assign(Index a, Index b) {
    if (values_[a] != kUnset) {
      return values_[a] == b;
    }
    if (!set(a, b)) {
      return false;
    }
    const std::size_t cols = source_.monoid().size();
    std::size_t head = trail_.size() - 1;
    while (head < trail_.size()) {
      const Index x = trail_[head++];
      for (Index s = 0; s < cols; ++s) {
        const Index y = source_.act(x, s);
        const Index want = target_.act(values_[x], s);
        if (values_[y] == kUnset) {
          if (!set(y, want)) {
            return false;
          }
        } else if (values_[y] != want) {
          return false;
        }
      }
    }
    return true;
  }

  bool set(Index a, Index b) {
    if (!permitted(a, b)) {
      return false;
    }
    if (constraints_.injective && used_[b] != 0) {
      return false;
    }
    values_[a] = b;
    ++used_[b];
    trail_.push_back(a);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index a = trail_.back();
      trail_.pop_back();
      --used_[values_[a]];
      values_[a] = kUnset;
    }
  }

  // Returns false when the visitor asked to stop.
  bool descend(Index from, const std::function<bool(const std::vector<Index>&)>& visit) {
    while (from < values_.size() && values_[from] != kUnset) {
      ++from;
    }
    if (from == values_.size()) {
      return visit(values_);
    }
    for (Index b = 0; b < target_.size(); ++b) {
      const std::size_t mark = trail_.size();
      if (assign(from, b)) {
        if (!descend(from + 1, visit)) {
          undo(mark);
          return false;
        }
      }
      undo(mark);
    }
    return true;
  }

  const Act& source_;
  const Act& target_;
  const MapConstraints& constraints_;
  std::vector<Index> values_;
  std::vector<std::size_t> used_;
  std::vector<Index> trail_;
};

void require_compatible(const Act& a, const Act& b, const char* what) {
  if (!a.compatible(b)) {
    throw PreconditionError(std::string(what) + ": acts differ in monoid or side");
  }
}

}  // namespace

void for_each_map(const Act& source, const Act& target, const MapConstraints& constraints,
                  const std::function<bool(const std::vector<Index>&)>& visit) {
  require_compatible(source, target, "for_each_map");
  if (!constraints.fixed.empty() && constraints.fixed.size() != source.size()) {
    throw StructureError("for_each_map: fixed-value array has wrong length");
  }
  if (!constraints.allowed.empty() && constraints.allowed.size() != source.size()) {
    throw StructureError("for_each_map: domain array has wrong length");
  }
  Searcher(source, target, constraints).run(visit);
}

std::optional<ActMap> first_map(const Act& source, const Act& target,
                                const MapConstraints& constraints) {
  std::optional<ActMap> out;
  for_each_map(source, target, constraints, [&](const std::vector<Index>& v) {
    out.emplace(source, target, v);
    return false;
  });
  return out;
}

std::vector<ActMap> enumerate_maps(const Act& source, const Act& target) {
  std::vector<ActMap> out;
  for_each_map(source, target, {}, [&](const std::vector<Index>& v) {
    out.emplace_back(source, target, v);
    return true;
  });
  return out;
}

std::size_t count_maps(const Act& source, const Act& target) {
  std::size_t n = 0;
  for_each_map(source, target, {}, [&](const std::vector<Index>&) {
    ++n;
    return true;
  });
  return n;
}

bool Square::commutes() const {
  if (!(left.source() == top.source()) || !(left.target() == bottom.source()) ||
      !(top.target() == right.source()) || !(right.target() == bottom.target())) {
    return false;
  }
  for (Index a = 0; a < left.source().size(); ++a) {
    if (right(top(a)) != bottom(left(a))) {
      return false;
    }
  }
  return true;
}

std::optional<ActMap> find_filler(const Square& sq) {
  if (!sq.commutes()) {
    throw PreconditionError("find_filler: square does not commute");
  }
  const Act& b = sq.left.target();
  const Act& c = sq.right.source();
  MapConstraints k;
  k.fixed.assign(b.size(), std::nullopt);
  for (Index a = 0; a < sq.left.source().size(); ++a) {
    auto& slot = k.fixed[sq.left(a)];
    if (slot && *slot != sq.top(a)) {
      return std::nullopt;
    }
    slot = sq.top(a);
  }
  k.allowed.assign(b.size(), std::vector<bool>(c.size(), false));
  for (Index x = 0; x < b.size(); ++x) {
    for (Index y = 0; y < c.size(); ++y) {
      k.allowed[x][y] = sq.right(y) == sq.bottom(x);
    }
  }
  return first_map(b, c, k);
}

std::vector<Square> enumerate_squares(const ActMap& left, const ActMap& right) {
  require_compatible(left.source(), right.source(), "enumerate_squares");
  std::vector<Square> out;
  const Act& a = left.source();
  const Act& b = left.target();
  const Act& c = right.source();
  const Act& d = right.target();
  for_each_map(a, c, {}, [&](const std::vector<Index>& top) {
    MapConstraints k;
    k.fixed.assign(b.size(), std::nullopt);
    for (Index x = 0; x < a.size(); ++x) {
      const Index want = right(top[x]);
      auto& slot = k.fixed[left(x)];
      if (slot && *slot != want) {
        return true;
      }
      slot = want;
    }
    ActMap top_map(a, c, top);
    for_each_map(b, d, k, [&](const std::vector<Index>& bottom) {
      out.push_back(Square{left, right, top_map, ActMap(b, d, bottom)});
      return true;
    });
    return true;
  });
  return out;
}

std::optional<ActMap> find_section(const ActMap& g) {
  const Act& c = g.source();
  const Act& d = g.target();
  MapConstraints k;
  k.allowed.assign(d.size(), std::vector<bool>(c.size(), false));
  for (Index y = 0; y < c.size(); ++y) {
    k.allowed[g(y)][y] = true;
  }
  return first_map(d, c, k);
}

std::optional<ActMap> find_retraction(const ActMap& f) {
  const Act& a = f.source();
  const Act& b = f.target();
  MapConstraints k;
  k.fixed.assign(b.size(), std::nullopt);
  for (Index x = 0; x < a.size(); ++x) {
    auto& slot = k.fixed[f(x)];
    if (slot && *slot != x) {
      return std::nullopt;
    }
    slot = x;
  }
  return first_map(b, a, k);
}

std::optional<ActMap> find_isomorphism(const Act& a, const Act& b) {
  if (!a.compatible(b) || a.size() != b.size()) {
    return std::nullopt;
  }
  MapConstraints k;
  k.injective = true;
  return first_map(a, b, k);
}

std::optional<MapRetractWitness> find_map_retract(const ActMap& f, const ActMap& g) {
  if (!(f.source() == g.source())) {
    throw PreconditionError("find_map_retract: maps do not share a source");
  }
  const Act& a = f.source();
  const Act& b = f.target();
  const Act& c = g.target();
  MapConstraints alpha_k;
  alpha_k.fixed.assign(c.size(), std::nullopt);
  for (Index x = 0; x < a.size(); ++x) {
    auto& slot = alpha_k.fixed[g(x)];
    if (slot && *slot != f(x)) {
      return std::nullopt;
    }
    slot = f(x);
  }
  // beta∘alpha = 1 forces alpha injective.
  alpha_k.injective = true;
  std::optional<MapRetractWitness> out;
  for_each_map(c, b, alpha_k, [&](const std::vector<Index>& alpha) {
    MapConstraints beta_k;
    beta_k.fixed.assign(b.size(), std::nullopt);
    for (Index x = 0; x < a.size(); ++x) {
      beta_k.fixed[f(x)] = g(x);
    }
    for (Index y = 0; y < c.size(); ++y) {
      auto& slot = beta_k.fixed[alpha[y]];
      if (slot && *slot != y) {
        return true;
      }
      slot = y;
    }
    if (auto beta = first_map(b, c, beta_k)) {
      out.emplace(MapRetractWitness{ActMap(c, b, alpha), *beta});
      return false;
    }
    return true;
  });
  return out;
}

std::optional<MapRetractWitness> find_slice_retract(const ActMap& f, const ActMap& g) {
  if (!(f.target() == g.target())) {
    throw PreconditionError("find_slice_retract: maps do not share a target");
  }
  const Act& b = f.source();
  const Act& c = g.source();
  MapConstraints alpha_k;
  alpha_k.injective = true;
  alpha_k.allowed.assign(c.size(), std::vector<bool>(b.size(), false));
  for (Index y = 0; y < c.size(); ++y) {
    for (Index x = 0; x < b.size(); ++x) {
      alpha_k.allowed[y][x] = f(x) == g(y);
    }
  }
  std::optional<MapRetractWitness> out;
  for_each_map(c, b, alpha_k, [&](const std::vector<Index>& alpha) {
    MapConstraints beta_k;
    beta_k.fixed.assign(b.size(), std::nullopt);
    for (Index y = 0; y < c.size(); ++y) {
      beta_k.fixed[alpha[y]] = y;
    }
    beta_k.allowed.assign(b.size(), std::vector<bool>(c.size(), false));
    for (Index x = 0; x < b.size(); ++x) {
      for (Index y = 0; y < c.size(); ++y) {
        beta_k.allowed[x][y] = g(y) == f(x);
      }
    }
    if (auto beta = first_map(b, c, beta_k)) {
      out.emplace(MapRetractWitness{ActMap(c, b, alpha), *beta});
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace actwfs
