#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cleansr/error.hpp"
#include "cleansr/ring_spec.hpp"

namespace cleansr {

/// Ordinal of an element in its ring's element list. Element 0 is the
/// additive identity and element 1 the multiplicative identity.
struct RingElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// A finite commutative ring with unity stored as explicit operation tables.
///
/// Construction validates every ring axiom exhaustively and then caches the
/// idempotents, units and unit inverses. Instances are immutable.
class FiniteRing {
 public:
  using Table = std::vector<std::uint32_t>;

  FiniteRing(Table add_table, Table mul_table, std::vector<std::string> names,
             RingSpec construction)
      : order_(static_cast<std::uint32_t>(names.size())),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        names_(std::move(names)),
        construction_(std::move(construction)) {
    validate();
    build_inventory();
  }

  std::uint32_t order() const noexcept { return order_; }
  RingElement zero() const noexcept { return {0}; }
  RingElement one() const noexcept { return {1}; }

  RingElement add(RingElement a, RingElement b) const { return {add_[a.index * order_ + b.index]}; }
  RingElement mul(RingElement a, RingElement b) const { return {mul_[a.index * order_ + b.index]}; }
  RingElement neg(RingElement a) const { return {neg_[a.index]}; }
  RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

  const std::string& name(RingElement a) const { return names_[a.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const RingSpec& construction() const noexcept { return construction_; }
  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }

  std::vector<RingElement> elements() const {
    std::vector<RingElement> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) out[i] = {i};
    return out;
  }

  const std::vector<RingElement>& idempotents() const noexcept { return idempotents_; }
  const std::vector<RingElement>& units() const noexcept { return units_; }
  bool is_idempotent(RingElement e) const { return mul(e, e) == e; }
  bool is_unit(RingElement u) const { return inverse_[u.index].has_value(); }
  std::optional<RingElement> inverse(RingElement u) const { return inverse_[u.index]; }

 private:
  std::uint32_t op(const Table& t, std::uint32_t a, std::uint32_t b) const {
    return t[a * order_ + b];
  }

  void validate() {
    if (order_ < 2)
      throw MalformedSpec("order-1 ring rejected: a ring with unity needs 0 != 1");
    const std::size_t cells = static_cast<std::size_t>(order_) * order_;
    if (add_.size() != cells || mul_.size() != cells)
      throw MalformedSpec("operation table has wrong size");
    for (std::size_t i = 0; i < cells; ++i)
      if (add_[i] >= order_ || mul_[i] >= order_)
        throw MalformedSpec("operation table entry out of range");

    neg_.assign(order_, order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
      if (op(add_, 0, a) != a) throw MalformedSpec("element 0 is not an additive identity");
      if (op(mul_, 1, a) != a) throw MalformedSpec("element 1 is not a multiplicative identity");
      for (std::uint32_t b = 0; b < order_; ++b) {
        if (op(add_, a, b) != op(add_, b, a)) throw MalformedSpec("addition is not commutative");
        if (op(mul_, a, b) != op(mul_, b, a))
          throw MalformedSpec("multiplication is not commutative");
        if (op(add_, a, b) == 0) neg_[a] = b;
      }
      if (neg_[a] == order_) throw MalformedSpec("element has no additive inverse");
    }
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b) {
        const auto ab_add = op(add_, a, b);
        const auto ab_mul = op(mul_, a, b);
        for (std::uint32_t c = 0; c < order_; ++c) {
          if (op(add_, ab_add, c) != op(add_, a, op(add_, b, c)))
            throw MalformedSpec("addition is not associative");
          if (op(mul_, ab_mul, c) != op(mul_, a, op(mul_, b, c)))
            throw MalformedSpec("multiplication is not associative");
          if (op(mul_, a, op(add_, b, c)) != op(add_, ab_mul, op(mul_, a, c)))
            throw MalformedSpec("multiplication does not distribute over addition");
        }
      }
  }

  void build_inventory() {
    inverse_.assign(order_, std::nullopt);
    for (std::uint32_t a = 0; a < order_; ++a) {
      if (op(mul_, a, a) == a) idempotents_.push_back({a});
      for (std::uint32_t b = 0; b < order_; ++b)
        if (op(mul_, a, b) == 1) {
          inverse_[a] = RingElement{b};
          break;
        }
      if (inverse_[a]) units_.push_back({a});
    }
  }

  std::uint32_t order_;
  Table add_;
  Table mul_;
  Table neg_;
  std::vector<std::string> names_;
  RingSpec construction_;
  std::vector<RingElement> idempotents_;
  std::vector<RingElement> units_;
  std::vector<std::optional<RingElement>> inverse_;
};

// ---------------------------------------------------------------------------
// Algebraic inventory queries.

inline const std::vector<RingElement>& idempotents(const FiniteRing& r) { return r.idempotents(); }

/// Id(R)* = Id(R) \ {0, 1}.
inline std::vector<RingElement> nontrivial_idempotents(const FiniteRing& r) {
  std::vector<RingElement> out;
  for (auto e : r.idempotents())
    if (e != r.zero() && e != r.one()) out.push_back(e);
  return out;
}

struct UnitGroup {
  std::vector<RingElement> elements;
  /// inverse[i] is the inverse of elements[i].
  std::vector<RingElement> inverse;
};

inline UnitGroup units(const FiniteRing& r) {
  UnitGroup g;
  g.elements = r.units();
  for (auto u : g.elements) g.inverse.push_back(*r.inverse(u));
  return g;
}

/// Partition of U(R) into involutory units U'(R) (u^2 = 1) and the rest U''(R).
struct UnitClasses {
  std::vector<RingElement> involutory;
  std::vector<RingElement> noninvolutory;
};

inline UnitClasses classify_units(const FiniteRing& r) {
  UnitClasses c;
  for (auto u : r.units()) (r.mul(u, u) == r.one() ? c.involutory : c.noninvolutory).push_back(u);
  return c;
}

/// Multiplicative order of a unit.
inline std::uint32_t unit_order(const FiniteRing& r, RingElement u) {
  std::uint32_t k = 1;
  for (RingElement p = u; p != r.one(); p = r.mul(p, u)) ++k;
  return k;
}

inline bool unit_group_is_cyclic(const FiniteRing& r) {
  const auto n = static_cast<std::uint32_t>(r.units().size());
  return std::any_of(r.units().begin(), r.units().end(),
                     [&](RingElement u) { return unit_order(r, u) == n; });
}

/// Both sides of the two unit-group propositions evaluated on one ring:
///   |U''| = 2  <=>  U(R) cyclic of order 3 or 4
///   U'' empty  <=>  U(R) trivial or elementary abelian 2-group
struct PropositionReport {
  bool two_noninvolutory = false;
  bool cyclic_of_order_3_or_4 = false;
  bool no_noninvolutory = false;
  bool elementary_two_group = false;

  bool first_consistent() const { return two_noninvolutory == cyclic_of_order_3_or_4; }
  bool second_consistent() const { return no_noninvolutory == elementary_two_group; }
  bool consistent() const { return first_consistent() && second_consistent(); }
};

inline PropositionReport check_unit_group_propositions(const FiniteRing& r) {
  PropositionReport rep;
  auto cls = classify_units(r);
  const auto n = r.units().size();
  rep.two_noninvolutory = cls.noninvolutory.size() == 2;
  rep.no_noninvolutory = cls.noninvolutory.empty();
  rep.cyclic_of_order_3_or_4 = (n == 3 || n == 4) && unit_group_is_cyclic(r);
  // Structural side: |U| is a power of two and the group exponent divides 2.
  bool exponent_two = std::all_of(r.units().begin(), r.units().end(),
                                  [&](RingElement u) { return unit_order(r, u) <= 2; });
  rep.elementary_two_group = std::has_single_bit(n) && exponent_two;
  return rep;
}

/// A maximum family of pairwise-orthogonal nonzero idempotents. Among all
/// maximum families the lexicographically least (by element index) is returned.
inline std::vector<RingElement> max_orthogonal_idempotents(const FiniteRing& r) {
  std::vector<RingElement> pool;
  for (auto e : r.idempotents())
    if (e != r.zero()) pool.push_back(e);

  std::vector<RingElement> best, current;
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (current.size() + (pool.size() - i) <= best.size()) return;
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](RingElement f) { return r.mul(pool[i], f) == r.zero(); });
      if (!ok) continue;
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  search(search, 0);
  return best;
}

/// n = log2 |Id(R)|, the number of local factors of R.
inline std::uint32_t local_factor_count(const FiniteRing& r) {
  const auto count = r.idempotents().size();
  if (!std::has_single_bit(count))
    throw NonPowerOfTwoIdempotentCount("|Id(R)| = " + std::to_string(count) +
                                       " is not a power of two");
  return static_cast<std::uint32_t>(std::countr_zero(count));
}

/// True iff the non-units are closed under addition (they then form the
/// unique maximal ideal).
inline bool is_local(const FiniteRing& r) {
  std::vector<RingElement> nonunits;
  for (auto a : r.elements())
    if (!r.is_unit(a)) nonunits.push_back(a);
  for (auto a : nonunits)
    for (auto b : nonunits)
      if (r.is_unit(r.add(a, b))) return false;
  return true;
}

inline bool is_field(const FiniteRing& r) { return r.units().size() + 1 == r.order(); }

}  // namespace cleansr
