#include "actwfs/algebra.hpp"

#include <algorithm>
#include <utility>

#include "actwfs/error.hpp"

namespace actwfs {

namespace {

std::optional<Index> find_zero(std::size_t n, const std::vector<Index>& mul) {
  for (Index z = 0; z < n; ++z) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      ok = mul[z * n + a] == z && mul[a * n + z] == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Index> mul, Index identity,
                           std::optional<Index> declared_zero) {
  if (size == 0) {
    throw StructureError("monoid: size must be positive");
  }
  if (mul.size() != size * size) {
    throw StructureError("monoid: multiplication table has " + std::to_string(mul.size()) +
                         " entries, expected " + std::to_string(size * size));
  }
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i] >= size) {
      throw StructureError("monoid: mul[" + std::to_string(i / size) + "][" +
                           std::to_string(i % size) + "] = " + std::to_string(mul[i]) +
                           " out of range");
    }
  }
  if (identity >= size) {
    throw StructureError("monoid: identity out of range");
  }
  if (declared_zero && *declared_zero >= size) {
    throw StructureError("monoid: zero out of range");
  }
  auto derived = find_zero(size, mul);
  rep_ = std::make_shared<const Rep>(Rep{size, std::move(mul), identity, declared_zero, derived});
}

FiniteMonoid FiniteMonoid::from_rows(const std::vector<std::vector<Index>>& rows, Index identity,
                                     std::optional<Index> declared_zero) {
  std::vector<Index> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw StructureError("monoid: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return FiniteMonoid(rows.size(), std::move(flat), identity, declared_zero);
}

std::optional<Index> FiniteMonoid::zero() const noexcept {
  return rep_->declared_zero ? rep_->declared_zero : rep_->derived_zero;
}

std::vector<Index> FiniteMonoid::left_zeros() const {
  std::vector<Index> out;
  for (Index z = 0; z < size(); ++z) {
    bool ok = true;
    for (Index s = 0; s < size() && ok; ++s) {
      ok = mul(z, s) == z;
    }
    if (ok) {
      out.push_back(z);
    }
  }
  return out;
}

bool FiniteMonoid::operator==(const FiniteMonoid& other) const noexcept {
  if (rep_ == other.rep_) {
    return true;
  }
  return rep_->size == other.rep_->size && rep_->identity == other.rep_->identity &&
         rep_->mul == other.rep_->mul;
}

std::string to_string(Side side) { return side == Side::right ? "right" : "left"; }

Act::Act(FiniteMonoid monoid, Side side, std::size_t size, std::vector<Index> table,
         bool centred)
    : rep_(nullptr) {
  const std::size_t cols = monoid.size();
  if (table.size() != size * cols) {
    throw StructureError("act: action table has " + std::to_string(table.size()) +
                         " entries, expected " + std::to_string(size * cols));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size) {
      throw StructureError("act: action[" + std::to_string(i / cols) + "][" +
                           std::to_string(i % cols) + "] = " + std::to_string(table[i]) +
                           " out of range");
    }
  }
  rep_ = std::make_shared<const Rep>(Rep{std::move(monoid), side, size, std::move(table), centred});
}

Act Act::from_rows(FiniteMonoid monoid, Side side, const std::vector<std::vector<Index>>& rows,
                   bool centred) {
  std::vector<Index> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != monoid.size()) {
      throw StructureError("act: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(monoid.size()));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return Act(std::move(monoid), side, rows.size(), std::move(flat), centred);
}

Act Act::with_centred(bool centred) const {
  return Act(rep_->monoid, rep_->side, rep_->size, rep_->table, centred);
}

bool Act::compatible(const Act& other) const noexcept {
  return side() == other.side() && monoid() == other.monoid();
}

bool Act::operator==(const Act& other) const noexcept {
  if (rep_ == other.rep_) {
    return true;
  }
  return rep_->side == other.rep_->side && rep_->size == other.rep_->size &&
         rep_->centred == other.rep_->centred && rep_->table == other.rep_->table &&
         rep_->monoid == other.rep_->monoid;
}

ActMap::ActMap(Act source, Act target, std::vector<Index> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (!source_.compatible(target_)) {
    throw StructureError("map: source and target differ in monoid or side");
  }
  if (values_.size() != source_.size()) {
    throw StructureError("map: " + std::to_string(values_.size()) + " values for a source of size " +
                         std::to_string(source_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= target_.size()) {
      throw StructureError("map: values[" + std::to_string(i) + "] = " +
                           std::to_string(values_[i]) + " out of range");
    }
  }
}

bool ActMap::operator==(const ActMap& other) const noexcept {
  return values_ == other.values_ && source_ == other.source_ && target_ == other.target_;
}

ActMap identity_map(const Act& a) {
  std::vector<Index> v(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    v[i] = i;
  }
  return ActMap(a, a, std::move(v));
}

ActMap compose(const ActMap& outer, const ActMap& inner) {
  if (!(inner.target() == outer.source())) {
    throw PreconditionError("compose: target of inner map is not the source of outer map");
  }
  std::vector<Index> v(inner.source().size());
  for (Index i = 0; i < v.size(); ++i) {
    v[i] = outer(inner(i));
  }
  return ActMap(inner.source(), outer.target(), std::move(v));
}

Congruence::Congruence(Act act, std::vector<Index> representative)
    : act_(std::move(act)), representative_(std::move(representative)) {
  if (representative_.size() != act_.size()) {
    throw StructureError("congruence: representative array has wrong length");
  }
  for (Index a = 0; a < representative_.size(); ++a) {
    const Index r = representative_[a];
    if (r >= act_.size() || r > a || representative_[r] != r) {
      throw StructureError("congruence: representative[" + std::to_string(a) +
                           "] is not the least element of its block");
    }
  }
}

Congruence Congruence::discrete(const Act& act) {
  std::vector<Index> r(act.size());
  for (Index i = 0; i < r.size(); ++i) {
    r[i] = i;
  }
  return Congruence(act, std::move(r));
}

Congruence Congruence::full(const Act& act) {
  return Congruence(act, std::vector<Index>(act.size(), 0));
}

std::size_t Congruence::block_count() const {
  std::size_t n = 0;
  for (Index a = 0; a < representative_.size(); ++a) {
    n += representative_[a] == a ? 1 : 0;
  }
  return n;
}

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> slot(representative_.size(), 0);
  for (Index a = 0; a < representative_.size(); ++a) {
    if (representative_[a] == a) {
      slot[a] = out.size();
      out.emplace_back();
    }
    out[slot[representative_[a]]].push_back(a);
  }
  return out;
}

bool Congruence::operator==(const Congruence& other) const noexcept {
  return representative_ == other.representative_ && act_ == other.act_;
}

}  // namespace actwfs
