#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistalg/algebra.hpp"
#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"

namespace twistalg {

/// Recursive ordered-pair form of a Cayley-Dickson element: a real leaf at
/// depth 0, or a pair (a, b) of equal-depth subtrees. Only the oracle uses it.
template <Scalar T>
class PairTree {
 public:
  PairTree() = default;
  explicit PairTree(T leaf) : leaf_(leaf) {}
  PairTree(PairTree a, PairTree b) {
    if (a.depth() != b.depth()) throw Error(ErrorCode::DepthMismatch, "pair halves differ in depth");
    depth_ = a.depth() + 1;
    halves_.reserve(2);
    halves_.push_back(std::move(a));
    halves_.push_back(std::move(b));
  }

  static PairTree zero(unsigned depth) {
    if (depth == 0) return PairTree(T{0});
    return PairTree(zero(depth - 1), zero(depth - 1));
  }

  unsigned depth() const noexcept { return depth_; }
  bool is_leaf() const noexcept { return depth_ == 0; }
  T leaf() const noexcept { return leaf_; }
  const PairTree& first() const { return halves_.at(0); }
  const PairTree& second() const { return halves_.at(1); }

  friend bool operator==(const PairTree&, const PairTree&) = default;

 private:
  unsigned depth_ = 0;
  T leaf_{0};
  std::vector<PairTree> halves_;
};

namespace detail {

template <Scalar T>
PairTree<T> zip_with(const PairTree<T>& x, const PairTree<T>& y, int sign) {
  if (x.is_leaf()) return PairTree<T>(x.leaf() + static_cast<T>(sign) * y.leaf());
  return PairTree<T>(zip_with(x.first(), y.first(), sign), zip_with(x.second(), y.second(), sign));
}

template <Scalar T>
void require_same_depth(const PairTree<T>& x, const PairTree<T>& y) {
  if (x.depth() != y.depth()) {
    throw Error(ErrorCode::DepthMismatch, "depths " + std::to_string(x.depth()) + " and " +
                                              std::to_string(y.depth()) + " differ");
  }
}

}  // namespace detail

template <Scalar T>
PairTree<T> operator+(const PairTree<T>& x, const PairTree<T>& y) {
  detail::require_same_depth(x, y);
  return detail::zip_with(x, y, 1);
}

template <Scalar T>
PairTree<T> operator-(const PairTree<T>& x, const PairTree<T>& y) {
  detail::require_same_depth(x, y);
  return detail::zip_with(x, y, -1);
}

template <Scalar T>
PairTree<T> negate(const PairTree<T>& x) {
  return PairTree<T>::zero(x.depth()) - x;
}

/// conj(leaf) = leaf, conj((a,b)) = (conj(a), -b)
template <Scalar T>
PairTree<T> cd_conjugate(const PairTree<T>& x) {
  if (x.is_leaf()) return x;
  return PairTree<T>(cd_conjugate(x.first()), negate(x.second()));
}

/// (a,b)(c,d) = (ac - d conj(b), conj(a) d + c b)
template <Scalar T>
PairTree<T> cd_mul(const PairTree<T>& x, const PairTree<T>& y) {
  detail::require_same_depth(x, y);
  if (x.is_leaf()) return PairTree<T>(x.leaf() * y.leaf());
  const auto& a = x.first();
  const auto& b = x.second();
  const auto& c = y.first();
  const auto& d = y.second();
  return PairTree<T>(cd_mul(a, c) - cd_mul(d, cd_conjugate(b)),
                     cd_mul(cd_conjugate(a), d) + cd_mul(c, b));
}

/// Conjugation-free doubling (a,b)(c,d) = (ac - bd, ad + bc).
template <Scalar T>
PairTree<T> hadamard_mul(const PairTree<T>& x, const PairTree<T>& y) {
  detail::require_same_depth(x, y);
  if (x.is_leaf()) return PairTree<T>(x.leaf() * y.leaf());
  const auto& a = x.first();
  const auto& b = x.second();
  const auto& c = y.first();
  const auto& d = y.second();
  return PairTree<T>(hadamard_mul(a, c) - hadamard_mul(b, d),
                     hadamard_mul(a, d) + hadamard_mul(b, c));
}

/// Interleaves the pair (x, y) into x_0, y_0, x_1, y_1, ...
template <Scalar T>
BasicElement<T> shuffle(const PairTree<T>& x) {
  if (x.is_leaf()) return BasicElement<T>(std::vector<T>{x.leaf()});
  const auto evens = shuffle(x.first());
  const auto odds = shuffle(x.second());
  std::vector<T> out(2 * evens.size());
  for (std::size_t k = 0; k < evens.size(); ++k) {
    out[2 * k] = evens[k];
    out[2 * k + 1] = odds[k];
  }
  return BasicElement<T>(std::move(out));
}

namespace detail {

template <Scalar T>
PairTree<T> unshuffle_strided(const BasicElement<T>& e, std::size_t offset, std::size_t stride,
                              unsigned depth) {
  if (depth == 0) return PairTree<T>(e[offset]);
  return PairTree<T>(unshuffle_strided(e, offset, stride * 2, depth - 1),
                     unshuffle_strided(e, offset + stride, stride * 2, depth - 1));
}

}  // namespace detail

/// Inverse of shuffle: even-indexed coefficients form the first half.
template <Scalar T>
PairTree<T> unshuffle(const BasicElement<T>& e, unsigned depth) {
  if (depth > 31 || e.size() != dyadic_order(depth)) {
    throw Error(ErrorCode::DepthMismatch, "element of size " + std::to_string(e.size()) +
                                              " cannot be unshuffled to depth " +
                                              std::to_string(depth));
  }
  return detail::unshuffle_strided(e, 0, 1, depth);
}

inline constexpr unsigned kMaxOracleExponent = 8;

namespace detail {

template <typename PairProduct>
Sign oracle_sign(GroupElement p, GroupElement q, unsigned n, PairProduct product) {
  require_exponent(n, kMaxOracleExponent, "oracle");
  const auto dim = dyadic_order(n);
  if (p >= dim || q >= dim)
    throw Error(ErrorCode::DimensionMismatch, "basis index outside G_" + std::to_string(n));
  using I = std::int64_t;
  const auto lhs = unshuffle(BasicElement<I>::basis(dim, p), n);
  const auto rhs = unshuffle(BasicElement<I>::basis(dim, q), n);
  const auto prod = shuffle(product(lhs, rhs));
  const auto target = p ^ q;
  for (std::size_t k = 0; k < dim; ++k) {
    const I c = prod[k];
    if (k == target ? (c != 1 && c != -1) : c != 0) {
      throw Error(ErrorCode::NotSignedBasis, "i_" + std::to_string(p) + " i_" + std::to_string(q) +
                                                 " is not +-i_" + std::to_string(target));
    }
  }
  return static_cast<Sign>(prod[target]);
}

}  // namespace detail

/// Sign of i_p i_q computed through the ordered-pair Cayley-Dickson product.
inline Sign oracle_twist(GroupElement p, GroupElement q, unsigned n) {
  return detail::oracle_sign(p, q, n, [](const auto& a, const auto& b) { return cd_mul(a, b); });
}

/// Sign of i_p i_q under the conjugation-free pair product.
inline Sign hadamard_oracle_twist(GroupElement p, GroupElement q, unsigned n) {
  return detail::oracle_sign(p, q, n,
                             [](const auto& a, const auto& b) { return hadamard_mul(a, b); });
}

}  // namespace twistalg
