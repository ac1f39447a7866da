#include "actwfs/universe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "actwfs/core.hpp"
#include "actwfs/error.hpp"
#include "actwfs/hom_search.hpp"

namespace actwfs {

std::vector<Act> enumerate_acts(const FiniteMonoid& monoid, Side side, std::size_t size) {
  if (size == 0) {
    return {};
  }
  if (size > kCanonicalLimit) {
    throw PreconditionError("enumerate_acts: size above the canonical-form limit");
  }
  const std::size_t cols = monoid.size();
  const Index e = monoid.identity();
  std::vector<std::size_t> free;  // table slots not fixed by the unit law
  std::vector<Index> table(size * cols, 0);
  for (Index a = 0; a < size; ++a) {
    for (Index s = 0; s < cols; ++s) {
      if (s == e) {
        table[a * cols + s] = a;
      } else {
        free.push_back(a * cols + s);
      }
    }
  }
  std::set<std::vector<Index>> seen;
  std::vector<Act> out;
  while (true) {
    Act candidate(monoid, side, size, table);
    if (validate(candidate).empty()) {
      auto canon = canonical_form(candidate);
      if (seen.insert(canon.act.table()).second) {
        out.push_back(canon.act);
      }
    }
    std::size_t k = 0;
    while (k < free.size() && table[free[k]] == size - 1) {
      table[free[k]] = 0;
      ++k;
    }
    if (k == free.size()) {
      break;
    }
    ++table[free[k]];
  }
  std::sort(out.begin(), out.end(),
            [](const Act& x, const Act& y) { return x.table() < y.table(); });
  return out;
}

Universe Universe::enumerate(const FiniteMonoid& monoid, Side side, std::size_t max_size) {
  if (max_size == 0) {
    throw PreconditionError("universe: max size must be at least 1");
  }
  Universe u(monoid, side, max_size);
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto layer = enumerate_acts(monoid, side, n);
    u.acts_.insert(u.acts_.end(), layer.begin(), layer.end());
  }
  for (const auto& a : u.acts_) {
    for (const auto& b : u.acts_) {
      auto hom = enumerate_maps(a, b);
      u.maps_.insert(u.maps_.end(), hom.begin(), hom.end());
    }
  }
  return u;
}

std::optional<std::size_t> Universe::locate(const Act& a) const {
  if (!(a.monoid() == monoid_) || a.side() != side_ || a.size() > max_size_ || a.size() == 0) {
    return std::nullopt;
  }
  const auto key = canonical_table(a);
  for (std::size_t i = 0; i < acts_.size(); ++i) {
    if (acts_[i].size() == a.size() && acts_[i].table() == key) {
      return i;
    }
  }
  return std::nullopt;
}

std::shared_ptr<const Universe> shared_universe(const FiniteMonoid& monoid, Side side,
                                                std::size_t max_size) {
  using Key = std::tuple<std::vector<Index>, Index, Side, std::size_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const Universe>> cache;
  Key key{monoid.table(), monoid.identity(), side, max_size};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  auto built = std::make_shared<const Universe>(Universe::enumerate(monoid, side, max_size));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

}  // namespace actwfs
