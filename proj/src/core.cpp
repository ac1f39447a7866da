#include "actwfs/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "actwfs/error.hpp"

namespace actwfs {

namespace detail {

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), Index{0});
}

Index UnionFind::find(Index a) {
  Index root = a;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[a] != root) {
    Index next = parent_[a];
    parent_[a] = root;
    a = next;
  }
  return root;
}

bool UnionFind::unite(Index a, Index b) {
  a = find(a);
  b = find(b);
  if (a == b) {
    return false;
  }
  if (b < a) {
    std::swap(a, b);
  }
  parent_[b] = a;
  return true;
}

}  // namespace detail

ValidationReport validate(const FiniteMonoid& m) {
  ValidationReport out;
  const std::size_t n = m.size();
  const Index e = m.identity();
  for (Index a = 0; a < n; ++a) {
    if (m.mul(e, a) != a || m.mul(a, e) != a) {
      out.push_back({"identity", {e, a},
                     "identity·a = " + std::to_string(m.mul(e, a)) +
                         ", a·identity = " + std::to_string(m.mul(a, e))});
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
          out.push_back({"associativity", {a, b, c}, "(ab)c != a(bc)"});
        }
      }
    }
  }
  if (auto z = m.declared_zero()) {
    for (Index a = 0; a < n; ++a) {
      if (m.mul(*z, a) != *z || m.mul(a, *z) != *z) {
        out.push_back({"zero", {*z, a}, "declared zero does not absorb"});
      }
    }
  }
  return out;
}

ValidationReport validate(const Act& a, EmptyActs policy) {
  ValidationReport out;
  const FiniteMonoid& m = a.monoid();
  if (a.size() == 0 && policy == EmptyActs::forbid) {
    out.push_back({"nonempty", {}, "empty act while empty acts are forbidden"});
  }
  for (Index x = 0; x < a.size(); ++x) {
    if (a.act(x, m.identity()) != x) {
      out.push_back({"unit", {x, m.identity()}, "action of the identity moves the element"});
    }
  }
  for (Index x = 0; x < a.size(); ++x) {
    for (Index s = 0; s < m.size(); ++s) {
      for (Index t = 0; t < m.size(); ++t) {
        // right: (x·s)·t = x·(st); left: s·(t·x) = (st)·x
        const bool ok = a.side() == Side::right
                            ? a.act(a.act(x, s), t) == a.act(x, m.mul(s, t))
                            : a.act(a.act(x, t), s) == a.act(x, m.mul(s, t));
        if (!ok) {
          out.push_back({"associativity", {x, s, t}, "action is not compatible with mul"});
        }
      }
    }
  }
  if (a.centred()) {
    const auto fix = fixed_points(a);
    if (fix.size() != 1) {
      out.push_back({"centred", fix,
                     "centred act has " + std::to_string(fix.size()) + " fixed points"});
    }
  }
  return out;
}

ValidationReport validate(const ActMap& f) {
  ValidationReport out;
  const Act& src = f.source();
  const Act& tgt = f.target();
  for (Index a = 0; a < src.size(); ++a) {
    for (Index s = 0; s < src.monoid().size(); ++s) {
      if (f(src.act(a, s)) != tgt.act(f(a), s)) {
        out.push_back({"equivariance", {a, s},
                       "f(a·s) = " + std::to_string(f(src.act(a, s))) + " but f(a)·s = " +
                           std::to_string(tgt.act(f(a), s))});
      }
    }
  }
  return out;
}

ValidationReport validate(const Congruence& c) {
  ValidationReport out;
  const Act& a = c.act();
  for (Index x = 0; x < a.size(); ++x) {
    const Index r = c.representative(x);
    if (r == x) {
      continue;
    }
    for (Index s = 0; s < a.monoid().size(); ++s) {
      if (!c.related(a.act(x, s), a.act(r, s))) {
        out.push_back({"compatibility", {x, r, s}, "related elements separate under the action"});
      }
    }
  }
  return out;
}

void require_valid(const Act& a, EmptyActs policy) {
  auto report = validate(a, policy);
  if (!report.empty()) {
    throw PreconditionError("invalid act: " + report.front().law + " (" + report.front().detail +
                            ")");
  }
}

void require_valid(const ActMap& f) {
  auto report = validate(f);
  if (!report.empty()) {
    throw PreconditionError("invalid map: " + report.front().law + " (" + report.front().detail +
                            ")");
  }
}

std::vector<Index> fixed_points(const Act& a) {
  std::vector<Index> out;
  for (Index x = 0; x < a.size(); ++x) {
    bool fixed = true;
    for (Index s = 0; s < a.monoid().size() && fixed; ++s) {
      fixed = a.act(x, s) == x;
    }
    if (fixed) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::vector<Index>> indecomposable_components(const Act& a) {
  detail::UnionFind uf(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    for (Index s = 0; s < a.monoid().size(); ++s) {
      uf.unite(x, a.act(x, s));
    }
  }
  std::vector<Index> rep(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    rep[x] = uf.find(x);
  }
  return Congruence(a, std::move(rep)).blocks();
}

Congruence congruence_closure(const Act& a, const std::vector<std::pair<Index, Index>>& pairs) {
  detail::UnionFind uf(a.size());
  std::deque<std::pair<Index, Index>> work;
  for (const auto& [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) {
      throw PreconditionError("congruence_closure: pair entry out of range");
    }
    work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!uf.unite(x, y)) {
      continue;
    }
    for (Index s = 0; s < a.monoid().size(); ++s) {
      work.emplace_back(a.act(x, s), a.act(y, s));
    }
  }
  std::vector<Index> rep(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    rep[x] = uf.find(x);
  }
  return Congruence(a, std::move(rep));
}

bool is_closed(const Act& a, const std::vector<Index>& elements) {
  std::vector<bool> in(a.size(), false);
  for (Index x : elements) {
    in[x] = true;
  }
  for (Index x : elements) {
    for (Index s = 0; s < a.monoid().size(); ++s) {
      if (!in[a.act(x, s)]) {
        return false;
      }
    }
  }
  return true;
}

Subact subact(const Act& a, const std::vector<Index>& elements) {
  std::vector<Index> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= a.size()) {
    throw PreconditionError("subact: element out of range");
  }
  if (!is_closed(a, sorted)) {
    throw PreconditionError("subact: element set is not closed under the action");
  }
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> position(a.size(), kNone);
  for (Index i = 0; i < sorted.size(); ++i) {
    position[sorted[i]] = i;
  }
  const std::size_t cols = a.monoid().size();
  std::vector<Index> table(sorted.size() * cols);
  for (Index i = 0; i < sorted.size(); ++i) {
    for (Index s = 0; s < cols; ++s) {
      table[i * cols + s] = position[a.act(sorted[i], s)];
    }
  }
  Act sub(a.monoid(), a.side(), sorted.size(), std::move(table));
  ActMap inc(sub, a, sorted);
  return {std::move(sub), std::move(inc)};
}

std::vector<Index> canonical_table(const Act& a) { return canonical_form(a).act.table(); }

CanonicalForm canonical_form(const Act& a) {
  const std::size_t n = a.size();
  if (n > kCanonicalLimit) {
    throw PreconditionError("canonical_form: carriers above " + std::to_string(kCanonicalLimit) +
                            " elements are not supported");
  }
  const std::size_t cols = a.monoid().size();
  std::vector<Index> perm(n);  // perm[new] = old
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> inverse(n);
  std::vector<Index> best_table;
  std::vector<Index> best_relabel;
  std::vector<Index> candidate(n * cols);
  do {
    for (Index i = 0; i < n; ++i) {
      inverse[perm[i]] = i;
    }
    bool better = best_table.empty();
    bool decided = better;
    for (Index i = 0; i < n; ++i) {
      for (Index s = 0; s < cols; ++s) {
        const Index v = inverse[a.act(perm[i], s)];
        candidate[i * cols + s] = v;
        if (!decided) {
          const Index b = best_table[i * cols + s];
          if (v != b) {
            decided = true;
            better = v < b;
          }
        }
      }
      if (decided && !better) {
        break;
      }
    }
    if (better) {
      best_table = candidate;
      best_relabel = inverse;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) {
    best_table.clear();
  }
  return {Act(a.monoid(), a.side(), n, std::move(best_table), a.centred()),
          std::move(best_relabel)};
}

Act terminal_act(const FiniteMonoid& m, Side side) {
  return Act(m, side, 1, std::vector<Index>(m.size(), 0));
}

Act regular_act(const FiniteMonoid& m, Side side) {
  const std::size_t n = m.size();
  std::vector<Index> table(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index s = 0; s < n; ++s) {
      table[a * n + s] = side == Side::right ? m.mul(a, s) : m.mul(s, a);
    }
  }
  return Act(m, side, n, std::move(table));
}

}  // namespace actwfs
