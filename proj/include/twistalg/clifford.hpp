#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"
#include "twistalg/twist.hpp"

namespace twistalg {

/// Clifford basis vector i_p, i.e. the product of the 1-blades e_{k+1} for
/// the set bits k of p, in increasing order.
struct Blade {
  GroupElement index = 0;

  unsigned grade() const noexcept { return sob(index); }

  /// 1-based indices of the 1-blade factors, strictly increasing.
  std::vector<unsigned> factors() const {
    std::vector<unsigned> out;
    for (unsigned k = 0; k < 32; ++k)
      if (index & (GroupElement{1} << k)) out.push_back(k + 1);
    return out;
  }

  friend bool operator==(const Blade&, const Blade&) = default;
};

struct SignedBlade {
  Sign sign = 1;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

inline constexpr unsigned kMaxOneBlade = 32;

/// Parses "1", compact "e134", or bracketed "e[10,12]".
inline Blade parse_e(std::string_view text) {
  auto fail = [&](const std::string& why) -> Blade {
    throw Error(ErrorCode::MalformedENotation, "'" + std::string(text) + "': " + why);
  };
  if (text == "1") return Blade{0};
  if (text.size() < 2 || text.front() != 'e') return fail("expected '1' or 'e' followed by indices");

  std::vector<unsigned> factors;
  const auto body = text.substr(1);
  if (body.front() == '[') {
    if (body.back() != ']' || body.size() < 3) return fail("unterminated bracket list");
    const auto list = body.substr(1, body.size() - 2);
    std::size_t pos = 0;
    while (pos <= list.size()) {
      const auto comma = list.find(',', pos);
      const auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos);
      if (item.empty() || item.size() > 2) return fail("bad index '" + std::string(item) + "'");
      unsigned value = 0;
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail("non-digit in index list");
        value = value * 10 + static_cast<unsigned>(c - '0');
      }
      factors.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail("non-digit in compact form");
      factors.push_back(static_cast<unsigned>(c - '0'));
    }
  }

  GroupElement index = 0;
  unsigned previous = 0;
  for (auto f : factors) {
    if (f == 0) return fail("1-blade indices start at 1");
    if (f > kMaxOneBlade) return fail("1-blade index above " + std::to_string(kMaxOneBlade));
    if (f <= previous) return fail("indices must be strictly increasing");
    index |= GroupElement{1} << (f - 1);
    previous = f;
  }
  return Blade{index};
}

/// Compact form when every factor is at most 9, bracketed otherwise.
inline std::string format_e(Blade b) {
  if (b.index == 0) return "1";
  const auto factors = b.factors();
  const bool compact = factors.back() <= 9;
  std::string out = compact ? "e" : "e[";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(factors[k]);
  }
  if (!compact) out += ']';
  return out;
}

/// Multiplies two blades by writing both as 1-blade products, sorting the
/// concatenation with adjacent swaps (each flips the sign, e_k e_j = -e_j e_k)
/// and cancelling equal neighbours (e_k e_k = 1).
inline SignedBlade blade_mul_oracle(Blade a, Blade b) {
  auto word = a.factors();
  const auto right = b.factors();
  word.insert(word.end(), right.begin(), right.end());

  Sign sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        swapped = true;
      }
    }
    if (!swapped) break;
  }

  GroupElement index = 0;
  for (std::size_t k = 0; k < word.size();) {
    if (k + 1 < word.size() && word[k] == word[k + 1]) {
      k += 2;
      continue;
    }
    index |= GroupElement{1} << (word[k] - 1);
    ++k;
  }
  return SignedBlade{sign, Blade{index}};
}

struct E1LemmaCheck {
  bool left_even = false;   // e1 i_{2p}   =  i_{2p+1}
  bool left_odd = false;    // e1 i_{2p+1} =  i_{2p}
  bool right_even = false;  // i_{2p} e1   = (-1)^sob(p) i_{2p+1}
  bool right_odd = false;   // i_{2p+1} e1 = (-1)^sob(p) i_{2p}

  bool all() const noexcept { return left_even && left_odd && right_even && right_odd; }
};

inline constexpr GroupElement kMaxLemmaIndex = GroupElement{1} << 10;

/// Checks the four products of e1 with i_{2p} and i_{2p+1} via blade_mul_oracle.
inline E1LemmaCheck e1_lemma_check(GroupElement p) {
  if (p >= kMaxLemmaIndex)
    throw Error(ErrorCode::DimensionTooLarge, "e1 lemma check needs p < 2^10");
  const Blade e1{1};
  const Blade even{2 * p};
  const Blade odd{2 * p + 1};
  const Sign s = parity_sign(sob(p));
  E1LemmaCheck check;
  check.left_even = blade_mul_oracle(e1, even) == SignedBlade{1, odd};
  check.left_odd = blade_mul_oracle(e1, odd) == SignedBlade{1, even};
  check.right_even = blade_mul_oracle(even, e1) == SignedBlade{s, odd};
  check.right_odd = blade_mul_oracle(odd, e1) == SignedBlade{s, even};
  return check;
}

}  // namespace twistalg
