#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "actwfs/algebra.hpp"

namespace actwfs {

/// All acts of a given side with at most `max_size` elements, up to
/// isomorphism, together with every map between them. Stands in for the
/// proper class of all acts wherever a statement quantifies over it.
class Universe {
 public:
  static Universe enumerate(const FiniteMonoid& monoid, Side side, std::size_t max_size);

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  Side side() const noexcept { return side_; }
  std::size_t max_act_size() const noexcept { return max_size_; }

  /// Canonical representatives, ordered by size then canonical table.
  const std::vector<Act>& acts() const noexcept { return acts_; }
  /// Maps ordered by (source index, target index, values).
  const std::vector<ActMap>& maps() const noexcept { return maps_; }

  /// Index of the act isomorphic to `a`, if it lies in the universe.
  std::optional<std::size_t> locate(const Act& a) const;

 private:
  Universe(FiniteMonoid monoid, Side side, std::size_t max_size)
      : monoid_(std::move(monoid)), side_(side), max_size_(max_size) {}

  FiniteMonoid monoid_;
  Side side_;
  std::size_t max_size_;
  std::vector<Act> acts_;
  std::vector<ActMap> maps_;
};

/// Every valid act of exactly `size` elements up to isomorphism, as
/// canonical forms in increasing table order.
std::vector<Act> enumerate_acts(const FiniteMonoid& monoid, Side side, std::size_t size);

/// Memoised Universe::enumerate, safe to call from several threads.
std::shared_ptr<const Universe> shared_universe(const FiniteMonoid& monoid, Side side,
                                                std::size_t max_size);

}  // namespace actwfs
