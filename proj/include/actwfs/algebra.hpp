#pragma once

// Finite monoids, finite acts over them, act maps and congruences.
//
// Every type here is an immutable value. Monoids and acts are handles onto
// shared, read-only tables so they copy in O(1) and can be sent across
// threads freely. Elements are dense 0-based indices; names only exist at
// the I/O boundary.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace actwfs {

using Index = std::size_t;

class FiniteMonoid {
 public:
  /// `mul` is row-major, mul[a * size + b] = a·b. Only dimensions and
  /// ranges are checked here (StructureError); the laws are checked by
  /// validate().
  FiniteMonoid(std::size_t size, std::vector<Index> mul, Index identity,
               std::optional<Index> declared_zero = std::nullopt);

  static FiniteMonoid from_rows(const std::vector<std::vector<Index>>& rows,
                                Index identity,
                                std::optional<Index> declared_zero = std::nullopt);

  std::size_t size() const noexcept { return rep_->size; }
  Index identity() const noexcept { return rep_->identity; }
  Index mul(Index a, Index b) const noexcept { return rep_->mul[a * rep_->size + b]; }
  const std::vector<Index>& table() const noexcept { return rep_->mul; }

  /// The declared zero if one was given, otherwise the two-sided zero
  /// found in the table (if any).
  std::optional<Index> zero() const noexcept;
  const std::optional<Index>& declared_zero() const noexcept { return rep_->declared_zero; }

  /// z with z·s = z for all s.
  std::vector<Index> left_zeros() const;

  bool operator==(const FiniteMonoid& other) const noexcept;

 private:
  struct Rep {
    std::size_t size;
    std::vector<Index> mul;
    Index identity;
    std::optional<Index> declared_zero;
    std::optional<Index> derived_zero;
  };
  std::shared_ptr<const Rep> rep_;
};

enum class Side { right, left };

std::string to_string(Side side);

/// A finite act. The table is stored element-major for both sides:
/// act(a, s) is a·s for a right act and s·a for a left act.
class Act {
 public:
  Act(FiniteMonoid monoid, Side side, std::size_t size, std::vector<Index> table,
      bool centred = false);

  /// rows[a][s] = act(a, s), regardless of side.
  static Act from_rows(FiniteMonoid monoid, Side side,
                       const std::vector<std::vector<Index>>& rows, bool centred = false);

  const FiniteMonoid& monoid() const noexcept { return rep_->monoid; }
  Side side() const noexcept { return rep_->side; }
  std::size_t size() const noexcept { return rep_->size; }
  bool centred() const noexcept { return rep_->centred; }
  Index act(Index a, Index s) const noexcept {
    return rep_->table[a * rep_->monoid.size() + s];
  }
  const std::vector<Index>& table() const noexcept { return rep_->table; }

  /// Same act with the centred flag changed.
  Act with_centred(bool centred) const;

  /// True when both acts live over equal monoids on the same side.
  bool compatible(const Act& other) const noexcept;

  bool operator==(const Act& other) const noexcept;

 private:
  struct Rep {
    FiniteMonoid monoid;
    Side side;
    std::size_t size;
    std::vector<Index> table;
    bool centred;
  };
  std::shared_ptr<const Rep> rep_;
};

/// A function between the carriers of two compatible acts. Equivariance is
/// not enforced on construction; see validate().
class ActMap {
 public:
  ActMap(Act source, Act target, std::vector<Index> values);

  const Act& source() const noexcept { return source_; }
  const Act& target() const noexcept { return target_; }
  const std::vector<Index>& values() const noexcept { return values_; }
  Index operator()(Index a) const noexcept { return values_[a]; }

  bool operator==(const ActMap& other) const noexcept;

 private:
  Act source_;
  Act target_;
  std::vector<Index> values_;
};

ActMap identity_map(const Act& a);

/// outer ∘ inner.
ActMap compose(const ActMap& outer, const ActMap& inner);

/// Partition of an act's carrier, stored as the least element of each
/// element's block.
class Congruence {
 public:
  /// `representative[a]` must be the least element of a's block.
  Congruence(Act act, std::vector<Index> representative);

  static Congruence discrete(const Act& act);
  static Congruence full(const Act& act);

  const Act& act() const noexcept { return act_; }
  Index representative(Index a) const noexcept { return representative_[a]; }
  const std::vector<Index>& representatives() const noexcept { return representative_; }
  bool related(Index a, Index b) const noexcept {
    return representative_[a] == representative_[b];
  }
  std::size_t block_count() const;
  /// Blocks in order of their least element; each block sorted.
  std::vector<std::vector<Index>> blocks() const;

  bool operator==(const Congruence& other) const noexcept;

 private:
  Act act_;
  std::vector<Index> representative_;
};

}  // namespace actwfs
