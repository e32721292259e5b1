#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "twistalg/error.hpp"

namespace twistalg {

/// Index of a basis vector; in the dyadic group the group law is XOR.
using GroupElement = std::uint32_t;

/// Twist values are kept as small signed integers so products of signs are
/// ordinary multiplication.
using Sign = int;

/// Largest dimension exponent accepted anywhere a 2^n table may be built.
inline constexpr unsigned kMaxExponent = 24;

constexpr GroupElement xor_mul(GroupElement p, GroupElement q) noexcept { return p ^ q; }

constexpr GroupElement bit_and(GroupElement p, GroupElement q) noexcept { return p & q; }

/// Sum of the bits of p.
constexpr unsigned sob(GroupElement p) noexcept { return static_cast<unsigned>(std::popcount(p)); }

constexpr std::uint64_t triangular(std::uint64_t k) noexcept { return k == 0 ? 0 : k * (k - 1) / 2; }

/// (-1)^k
constexpr Sign parity_sign(std::uint64_t k) noexcept { return (k & 1U) ? -1 : 1; }

constexpr std::size_t dyadic_order(unsigned n) noexcept { return std::size_t{1} << n; }

inline void require_exponent(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::DimensionTooLarge, std::string(what) + ": n=" + std::to_string(n) +
                                                  " exceeds the cap n<=" + std::to_string(cap));
  }
}

/// Exponent n with 2^n == size, or -1 when size is not a power of two.
constexpr int exponent_of(std::size_t size) noexcept {
  if (size == 0 || !std::has_single_bit(size)) return -1;
  return std::countr_zero(size);
}

}  // namespace twistalg
