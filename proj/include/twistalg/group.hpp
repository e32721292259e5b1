#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"

namespace twistalg {

/// A finite group on {0, ..., order-1}.
///
/// Either backed by an explicit Cayley table (validated on construction) or
/// the dyadic group G_n, whose law is XOR and needs no table.
class FiniteGroup {
 public:
  /// Associativity validation is cubic in the order.
  static constexpr std::size_t kMaxTableOrder = 256;
  static constexpr unsigned kMaxDyadicExponent = 16;

  static FiniteGroup from_table(std::vector<std::vector<GroupElement>> rows);

  static FiniteGroup dyadic(unsigned n) {
    require_exponent(n, kMaxDyadicExponent, "dyadic group");
    FiniteGroup g;
    g.order_ = dyadic_order(n);
    g.exponent_ = n;
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  GroupElement identity() const noexcept { return identity_; }
  bool is_dyadic() const noexcept { return exponent_.has_value(); }
  std::optional<unsigned> dyadic_exponent() const noexcept { return exponent_; }

  GroupElement op(GroupElement p, GroupElement q) const noexcept {
    if (exponent_) return p ^ q;
    return table_[static_cast<std::size_t>(p) * order_ + q];
  }

  GroupElement inverse(GroupElement p) const noexcept {
    if (exponent_) return p;
    return inverse_[p];
  }

  /// Dense Cayley table, row p / column q holding p*q.
  std::vector<std::vector<GroupElement>> table() const {
    std::vector<std::vector<GroupElement>> rows(order_, std::vector<GroupElement>(order_));
    for (std::size_t p = 0; p < order_; ++p)
      for (std::size_t q = 0; q < order_; ++q)
        rows[p][q] = op(static_cast<GroupElement>(p), static_cast<GroupElement>(q));
    return rows;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order_ != b.order_) return false;
    if (a.exponent_ && b.exponent_) return true;
    for (std::size_t p = 0; p < a.order_; ++p)
      for (std::size_t q = 0; q < a.order_; ++q) {
        const auto gp = static_cast<GroupElement>(p);
        const auto gq = static_cast<GroupElement>(q);
        if (a.op(gp, gq) != b.op(gp, gq)) return false;
      }
    return true;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 1;
  GroupElement identity_ = 0;
  std::optional<unsigned> exponent_;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
};

inline FiniteGroup FiniteGroup::from_table(std::vector<std::vector<GroupElement>> rows) {
  auto fail = [](const std::string& reason) -> FiniteGroup {
    throw Error(ErrorCode::NotAGroup, reason);
  };
  const std::size_t n = rows.size();
  if (n == 0) return fail("empty table");
  if (n > kMaxTableOrder) {
    throw Error(ErrorCode::GroupTooLarge,
                "order " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxTableOrder));
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    if (rows[p].size() != n) return fail("row " + std::to_string(p) + " has wrong length");
    for (auto v : rows[p]) {
      if (v >= n) return fail("entry " + std::to_string(v) + " out of range");
      g.table_.push_back(v);
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t q = 0; q < n; ++q) {
      auto v = g.table_[p * n + q];
      if (seen[v]++) return fail("row " + std::to_string(p) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t q = 0; q < n; ++q) {
      auto v = g.table_[q * n + p];
      if (seen[v]++) return fail("column " + std::to_string(p) + " is not a permutation");
    }
  }

  std::optional<GroupElement> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p)
      ok = g.table_[e * n + p] == p && g.table_[p * n + e] == p;
    if (ok) identity = static_cast<GroupElement>(e);
  }
  if (!identity) return fail("no identity element");
  g.identity_ = *identity;

  g.inverse_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    bool found = false;
    for (std::size_t q = 0; q < n && !found; ++q) {
      if (g.table_[p * n + q] == g.identity_ && g.table_[q * n + p] == g.identity_) {
        g.inverse_[p] = static_cast<GroupElement>(q);
        found = true;
      }
    }
    if (!found) return fail("element " + std::to_string(p) + " has no two-sided inverse");
  }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        auto pq = g.table_[p * n + q];
        auto qr = g.table_[q * n + r];
        if (g.table_[pq * n + r] != g.table_[p * n + qr]) {
          return fail("not associative at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                      std::to_string(r) + ")");
        }
      }
  return g;
}

}  // namespace twistalg
