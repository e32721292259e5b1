#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"
#include "twistalg/group.hpp"

namespace twistalg {

enum class TwistKind { CayleyDickson, Clifford, Hadamard, Trivial, GradeParity, XorParity, Table };

inline constexpr std::array kNamedTwists = {TwistKind::CayleyDickson, TwistKind::Clifford,
                                            TwistKind::Hadamard,      TwistKind::Trivial,
                                            TwistKind::GradeParity,   TwistKind::XorParity};

inline std::string_view to_string(TwistKind kind) {
  switch (kind) {
    case TwistKind::CayleyDickson: return "cyd";
    case TwistKind::Clifford: return "clf";
    case TwistKind::Hadamard: return "hadamard";
    case TwistKind::Trivial: return "trivial";
    case TwistKind::GradeParity: return "grade-parity";
    case TwistKind::XorParity: return "xor-parity";
    case TwistKind::Table: return "table";
  }
  return "table";
}

inline std::optional<TwistKind> parse_twist_kind(std::string_view name) {
  for (auto kind : {TwistKind::CayleyDickson, TwistKind::Clifford, TwistKind::Hadamard,
                    TwistKind::Trivial, TwistKind::GradeParity, TwistKind::XorParity,
                    TwistKind::Table}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

/// Cayley-Dickson twist, evaluated by the seven-rule recursion on the low
/// bits of (p, q). The r = 0 cases (rules 4 and 7) are tested before the
/// guarded rules 3 and 6.
constexpr Sign cyd(GroupElement p, GroupElement q) noexcept {
  Sign sign = 1;
  while (p != 0 || q != 0) {
    const GroupElement r = p >> 1;
    const GroupElement s = q >> 1;
    const bool p_odd = p & 1U;
    const bool q_odd = q & 1U;
    if (!p_odd && !q_odd) {  // cyd(2r,2s) = cyd(r,s)
      p = r;
      q = s;
    } else if (!p_odd) {
      if (r == 0) {  // cyd(0,2s+1) = cyd(0,s)
        q = s;
      } else {  // cyd(2r,2s+1) = -cyd(r,s)
        sign = -sign;
        p = r;
        q = s;
      }
    } else if (!q_odd) {  // cyd(2r+1,2s) = cyd(s,r)
      p = s;
      q = r;
    } else if (r == 0) {  // cyd(1,2s+1) = -cyd(s,0)
      sign = -sign;
      p = s;
      q = 0;
    } else {  // cyd(2r+1,2s+1) = cyd(s,r)
      p = s;
      q = r;
    }
  }
  return sign;
}

/// Clifford twist: clf(2p+b, 2q) = clf(p,q), clf(2p+b, 2q+1) = (-1)^sob(p) clf(p,q).
constexpr Sign clf(GroupElement p, GroupElement q) noexcept {
  Sign sign = 1;
  while (p != 0 || q != 0) {
    const GroupElement u = p >> 1;
    if (q & 1U) sign *= parity_sign(sob(u));
    p = u;
    q >>= 1;
  }
  return sign;
}

/// Evaluates one of the built-in twists; Table is not a named rule.
constexpr Sign named(TwistKind kind, GroupElement p, GroupElement q) {
  switch (kind) {
    case TwistKind::CayleyDickson: return cyd(p, q);
    case TwistKind::Clifford: return clf(p, q);
    case TwistKind::Hadamard: return parity_sign(sob(p & q));
    case TwistKind::Trivial: return 1;
    case TwistKind::GradeParity: return parity_sign(std::uint64_t{sob(p)} * sob(q));
    case TwistKind::XorParity: return parity_sign(sob(p ^ q));
    case TwistKind::Table: break;
  }
  throw Error(ErrorCode::UnsupportedTwist, "a table twist has no closed-form rule");
}

/// A sign function G x G -> {-1,+1}: either a named rule (defined on every
/// index pair) or an explicit sign matrix bound to a finite group.
class Twist {
 public:
  struct TableData {
    FiniteGroup group;
    std::vector<std::int8_t> signs;  // row-major, order x order
  };

  static Twist of(TwistKind kind) {
    if (kind == TwistKind::Table)
      throw Error(ErrorCode::UnsupportedTwist, "table twists are built with Twist::from_table");
    Twist t;
    t.kind_ = kind;
    return t;
  }

  static Twist from_table(FiniteGroup group, std::vector<std::int8_t> signs) {
    const auto order = group.order();
    if (signs.size() != order * order) {
      throw Error(ErrorCode::DimensionMismatch, "sign matrix has " + std::to_string(signs.size()) +
                                                    " entries, group order is " +
                                                    std::to_string(order));
    }
    for (auto s : signs)
      if (s != 1 && s != -1) throw Error(ErrorCode::MalformedTable, "sign entries must be +1 or -1");
    Twist t;
    t.kind_ = TwistKind::Table;
    t.table_ = std::make_shared<const TableData>(TableData{std::move(group), std::move(signs)});
    return t;
  }

  TwistKind kind() const noexcept { return kind_; }
  std::string_view name() const { return to_string(kind_); }

  /// Group of a table twist; named twists are defined on every group.
  const FiniteGroup* group() const noexcept { return table_ ? &table_->group : nullptr; }

  Sign operator()(GroupElement p, GroupElement q) const {
    if (!table_) return named(kind_, p, q);
    const auto order = table_->group.order();
    return table_->signs[static_cast<std::size_t>(p) * order + q];
  }

  /// Throws GroupMismatch unless this twist can be evaluated on g.
  void require_group(const FiniteGroup& g) const {
    if (table_ && !(table_->group == g)) {
      throw Error(ErrorCode::GroupMismatch, "table twist of order " +
                                                std::to_string(table_->group.order()) +
                                                " used on a different group of order " +
                                                std::to_string(g.order()));
    }
  }

 private:
  Twist() = default;

  TwistKind kind_ = TwistKind::Trivial;
  std::shared_ptr<const TableData> table_;
};

/// Sign matrix of a twist over a fixed group, cached for repeated lookup.
class TwistTable {
 public:
  static constexpr unsigned kMaxExponent = 12;

  TwistTable(TwistKind kind, std::size_t order, std::vector<std::int8_t> signs)
      : kind_(kind), order_(order), signs_(std::move(signs)) {
    if (signs_.size() != order_ * order_)
      throw Error(ErrorCode::DimensionMismatch, "sign matrix size does not match order");
    for (auto s : signs_)
      if (s != 1 && s != -1) throw Error(ErrorCode::MalformedTable, "sign entries must be +1 or -1");
  }

  TwistKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return order_; }
  /// Dimension exponent when the order is a power of two, else -1.
  int exponent() const noexcept { return exponent_of(order_); }

  Sign operator()(GroupElement p, GroupElement q) const noexcept {
    return signs_[static_cast<std::size_t>(p) * order_ + q];
  }
  Sign at(GroupElement p, GroupElement q) const {
    if (p >= order_ || q >= order_) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    return (*this)(p, q);
  }

  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

  friend bool operator==(const TwistTable&, const TwistTable&) = default;

 private:
  TwistKind kind_;
  std::size_t order_;
  std::vector<std::int8_t> signs_;
};

inline TwistTable materialize(const Twist& t, const FiniteGroup& g) {
  t.require_group(g);
  const auto order = g.order();
  if (order > dyadic_order(TwistTable::kMaxExponent)) {
    throw Error(ErrorCode::DimensionTooLarge,
                "group order " + std::to_string(order) + " exceeds the table cap 2^12");
  }
  std::vector<std::int8_t> signs(order * order);
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q)
      signs[p * order + q] =
          static_cast<std::int8_t>(t(static_cast<GroupElement>(p), static_cast<GroupElement>(q)));
  return TwistTable(t.kind(), order, std::move(signs));
}

inline TwistTable materialize(const Twist& t, unsigned n) {
  require_exponent(n, TwistTable::kMaxExponent, "twist table");
  return materialize(t, FiniteGroup::dyadic(n));
}

/// Turns a cached table back into a twist bound to g.
inline Twist to_twist(const TwistTable& table, const FiniteGroup& g) {
  if (table.order() != g.order())
    throw Error(ErrorCode::GroupMismatch, "table order does not match group order");
  if (table.kind() != TwistKind::Table) {
    bool matches = true;
    for (std::size_t p = 0; p < g.order() && matches; ++p)
      for (std::size_t q = 0; q < g.order() && matches; ++q)
        matches = named(table.kind(), static_cast<GroupElement>(p), static_cast<GroupElement>(q)) ==
                  table(static_cast<GroupElement>(p), static_cast<GroupElement>(q));
    if (matches) return Twist::of(table.kind());
  }
  return Twist::from_table(g, table.signs());
}

// ---------------------------------------------------------------------------
// Twist axioms

enum class Property : unsigned {
  Identive = 1U << 0,
  Positive = 1U << 1,
  Invertive = 1U << 2,
  Associative = 1U << 3,
  Proper = 1U << 4,
};

/// Bit set of Property flags.
class PropertySet {
 public:
  constexpr PropertySet() = default;
  constexpr PropertySet(std::initializer_list<Property> props) {
    for (auto p : props) bits_ |= static_cast<unsigned>(p);
  }
  constexpr bool contains(Property p) const noexcept { return bits_ & static_cast<unsigned>(p); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr PropertySet& insert(Property p) noexcept {
    bits_ |= static_cast<unsigned>(p);
    return *this;
  }

 private:
  unsigned bits_ = 0;
};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::Identive: return "identive";
    case Property::Positive: return "positive";
    case Property::Invertive: return "invertive";
    case Property::Associative: return "associative";
    case Property::Proper: return "proper";
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (auto p : {Property::Identive, Property::Positive, Property::Invertive,
                 Property::Associative, Property::Proper}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

/// Outcome of one axiom scan. The witness is the first failing tuple in
/// row-major order: (p) for single-element laws, (p,q) or (p,q,r) otherwise.
struct PropertyCheck {
  bool holds = true;
  std::vector<GroupElement> witness;
};

struct PropertyReport {
  std::string twist;
  std::size_t order = 0;
  PropertyCheck identive;
  PropertyCheck positive;
  PropertyCheck invertive;
  PropertyCheck associative;
  PropertyCheck proper;

  const PropertyCheck& get(Property p) const {
    switch (p) {
      case Property::Identive: return identive;
      case Property::Positive: return positive;
      case Property::Invertive: return invertive;
      case Property::Associative: return associative;
      case Property::Proper: return proper;
    }
    return proper;
  }

  bool satisfies(PropertySet wanted) const {
    for (auto p : {Property::Identive, Property::Positive, Property::Invertive,
                   Property::Associative, Property::Proper}) {
      if (wanted.contains(p) && !get(p).holds) return false;
    }
    return true;
  }
};

namespace detail {

template <typename SignFn>
PropertyCheck scan_identive(const SignFn& sgn, const FiniteGroup& g) {
  const auto e = g.identity();
  for (GroupElement p = 0; p < g.order(); ++p)
    if (sgn(p, e) != 1 || sgn(e, p) != 1) return {false, {p}};
  return {};
}

template <typename SignFn>
PropertyCheck scan_positive(const SignFn& sgn, const FiniteGroup& g) {
  const auto e = g.identity();
  if (sgn(e, e) != 1) return {false, {e}};
  return {};
}

template <typename SignFn>
PropertyCheck scan_invertive(const SignFn& sgn, const FiniteGroup& g) {
  for (GroupElement p = 0; p < g.order(); ++p) {
    const auto inv = g.inverse(p);
    if (sgn(p, inv) != sgn(inv, p)) return {false, {p}};
  }
  return {};
}

// sgn(p,q) sgn(pq,r) = sgn(p,qr) sgn(q,r)
template <typename SignFn>
PropertyCheck scan_associative(const SignFn& sgn, const FiniteGroup& g) {
  const auto n = static_cast<GroupElement>(g.order());
  for (GroupElement p = 0; p < n; ++p)
    for (GroupElement q = 0; q < n; ++q) {
      const auto pq = g.op(p, q);
      const auto s_pq = sgn(p, q);
      for (GroupElement r = 0; r < n; ++r) {
        if (s_pq * sgn(pq, r) != sgn(p, g.op(q, r)) * sgn(q, r)) return {false, {p, q, r}};
      }
    }
  return {};
}

// sgn(p,q) sgn(q,r) = sgn(p,qr) sgn(pq,r)
template <typename SignFn>
PropertyCheck scan_alt_associative(const SignFn& sgn, const FiniteGroup& g) {
  const auto n = static_cast<GroupElement>(g.order());
  for (GroupElement p = 0; p < n; ++p)
    for (GroupElement q = 0; q < n; ++q)
      for (GroupElement r = 0; r < n; ++r) {
        if (sgn(p, q) * sgn(q, r) != sgn(p, g.op(q, r)) * sgn(g.op(p, q), r))
          return {false, {p, q, r}};
      }
  return {};
}

// (1) sgn(p,q) sgn(q,q^-1) = sgn(pq,q^-1)
// (2) sgn(p^-1,p) sgn(p,q) = sgn(p^-1,pq)
template <typename SignFn>
PropertyCheck scan_proper(const SignFn& sgn, const FiniteGroup& g) {
  const auto n = static_cast<GroupElement>(g.order());
  for (GroupElement p = 0; p < n; ++p) {
    const auto p_inv = g.inverse(p);
    for (GroupElement q = 0; q < n; ++q) {
      const auto q_inv = g.inverse(q);
      const auto pq = g.op(p, q);
      if (sgn(p, q) * sgn(q, q_inv) != sgn(pq, q_inv)) return {false, {p, q}};
      if (sgn(p_inv, p) * sgn(p, q) != sgn(p_inv, pq)) return {false, {p, q}};
    }
  }
  return {};
}

inline void require_scan_order(const FiniteGroup& g, std::size_t cap, const char* what) {
  if (g.order() > cap) {
    throw Error(ErrorCode::GroupTooLarge, std::string(what) + ": group order " +
                                              std::to_string(g.order()) + " exceeds the cap " +
                                              std::to_string(cap));
  }
}

}  // namespace detail

/// Cap on the group order for the cubic associativity scan.
inline constexpr std::size_t kMaxAssociativityOrder = 256;
/// Cap on the group order for the quadratic scans.
inline constexpr std::size_t kMaxQuadraticOrder = std::size_t{1} << TwistTable::kMaxExponent;

inline PropertyCheck check_proper(const TwistTable& table, const FiniteGroup& g) {
  detail::require_scan_order(g, kMaxQuadraticOrder, "proper scan");
  return detail::scan_proper(table, g);
}

inline PropertyCheck check_invertive(const TwistTable& table, const FiniteGroup& g) {
  return detail::scan_invertive(table, g);
}

inline PropertyCheck check_associative(const TwistTable& table, const FiniteGroup& g) {
  detail::require_scan_order(g, kMaxAssociativityOrder, "associativity scan");
  return detail::scan_associative(table, g);
}

/// Equivalent reformulation of associativity; kept as an independent scan.
inline PropertyCheck check_alt_associative(const Twist& t, const FiniteGroup& g) {
  t.require_group(g);
  detail::require_scan_order(g, kMaxAssociativityOrder, "associativity scan");
  return detail::scan_alt_associative(materialize(t, g), g);
}

inline PropertyReport check_properties(const Twist& t, const FiniteGroup& g) {
  t.require_group(g);
  detail::require_scan_order(g, kMaxAssociativityOrder, "property report");
  const auto table = materialize(t, g);
  PropertyReport report;
  report.twist = std::string(t.name());
  report.order = g.order();
  report.identive = detail::scan_identive(table, g);
  report.positive = detail::scan_positive(table, g);
  report.invertive = detail::scan_invertive(table, g);
  report.associative = detail::scan_associative(table, g);
  report.proper = detail::scan_proper(table, g);
  return report;
}

inline PropertyReport check_properties(const Twist& t, unsigned n) {
  return check_properties(t, FiniteGroup::dyadic(n));
}

// ---------------------------------------------------------------------------
// The abelian group of twists

inline Twist pointwise_product(const Twist& a, const Twist& b, const FiniteGroup& g) {
  a.require_group(g);
  b.require_group(g);
  const auto order = g.order();
  if (order > kMaxQuadraticOrder)
    throw Error(ErrorCode::GroupTooLarge, "pointwise product: group too large to tabulate");
  std::vector<std::int8_t> signs(order * order);
  for (GroupElement p = 0; p < order; ++p)
    for (GroupElement q = 0; q < order; ++q)
      signs[p * order + q] = static_cast<std::int8_t>(a(p, q) * b(p, q));
  return Twist::from_table(g, std::move(signs));
}

/// Product of two twists where at least one is a table twist fixing the group.
inline Twist pointwise_product(const Twist& a, const Twist& b) {
  const FiniteGroup* g = a.group() ? a.group() : b.group();
  if (!g)
    throw Error(ErrorCode::GroupMismatch, "two named twists need an explicit group for a product");
  return pointwise_product(a, b, *g);
}

inline constexpr std::size_t kMaxEnumerationOrder = 4;

/// Every sign function on g with the requested properties, ordered
/// lexicographically by row-major sign matrix with -1 < +1.
inline std::vector<Twist> enumerate_twists(const FiniteGroup& g, PropertySet filter) {
  detail::require_scan_order(g, kMaxEnumerationOrder, "twist enumeration");
  const auto order = g.order();
  const std::size_t cells = order * order;
  const std::uint64_t count = std::uint64_t{1} << cells;
  std::vector<Twist> out;
  std::vector<std::int8_t> signs(cells);
  auto sgn = [&](GroupElement p, GroupElement q) -> Sign { return signs[p * order + q]; };
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < cells; ++k)
      signs[k] = ((mask >> (cells - 1 - k)) & 1U) ? 1 : -1;
    if (filter.contains(Property::Identive) && !detail::scan_identive(sgn, g).holds) continue;
    if (filter.contains(Property::Positive) && !detail::scan_positive(sgn, g).holds) continue;
    if (filter.contains(Property::Invertive) && !detail::scan_invertive(sgn, g).holds) continue;
    if (filter.contains(Property::Proper) && !detail::scan_proper(sgn, g).holds) continue;
    if (filter.contains(Property::Associative) && !detail::scan_associative(sgn, g).holds) continue;
    out.push_back(Twist::from_table(g, signs));
  }
  return out;
}

}  // namespace twistalg
