#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>
#include <vector>

#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"
#include "twistalg/group.hpp"
#include "twistalg/twist.hpp"

namespace twistalg {

template <typename T>
concept Scalar = std::integral<T> || std::floating_point<T>;

/// Element sum_p x_p i_p of a twisted group algebra over the reals, stored
/// densely with x_p at index p.
template <Scalar T>
class BasicElement {
 public:
  using value_type = T;

  BasicElement() : coeffs_(1, T{0}) {}

  explicit BasicElement(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::MalformedElement, "element needs at least one coefficient");
    if constexpr (std::floating_point<T>) {
      for (auto c : coeffs_)
        if (!std::isfinite(c)) throw Error(ErrorCode::MalformedElement, "non-finite coefficient");
    }
  }

  static BasicElement zero(std::size_t dimension) {
    return BasicElement(std::vector<T>(dimension, T{0}));
  }

  static BasicElement basis(std::size_t dimension, GroupElement p, T coeff = T{1}) {
    if (p >= dimension) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    auto e = zero(dimension);
    e.coeffs_[p] = coeff;
    return e;
  }

  static BasicElement scalar(std::size_t dimension, T value) { return basis(dimension, 0, value); }

  std::size_t size() const noexcept { return coeffs_.size(); }
  /// n with size() == 2^n, or -1 for non-dyadic sizes.
  int exponent() const noexcept { return exponent_of(coeffs_.size()); }

  T operator[](std::size_t p) const noexcept { return coeffs_[p]; }
  T& operator[](std::size_t p) noexcept { return coeffs_[p]; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept {
    for (auto c : coeffs_)
      if (c != T{0}) return false;
    return true;
  }

  BasicElement& operator+=(const BasicElement& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BasicElement& operator*=(T c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator-(BasicElement a) { return a *= T{-1}; }
  friend BasicElement operator*(T c, BasicElement a) { return a *= c; }
  friend BasicElement operator*(BasicElement a, T c) { return a *= c; }
  friend bool operator==(const BasicElement&, const BasicElement&) = default;

  void require_same_size(const BasicElement& o) const {
    if (o.size() != size()) {
      throw Error(ErrorCode::DimensionMismatch, "element sizes " + std::to_string(size()) +
                                                    " and " + std::to_string(o.size()) + " differ");
    }
  }

 private:
  std::vector<T> coeffs_;
};

using Element = BasicElement<double>;
/// Integer coefficients: products of integer elements stay integral, so
/// identities can be checked exactly.
using IntElement = BasicElement<std::int64_t>;

template <Scalar To, Scalar From>
BasicElement<To> element_cast(const BasicElement<From>& x) {
  std::vector<To> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<To>(x[i]);
  return BasicElement<To>(std::move(out));
}

/// Group, twist and cached sign table of one algebra [G, sgn] over the reals.
class AlgebraContext {
 public:
  AlgebraContext(FiniteGroup group, Twist twist)
      : group_(std::move(group)),
        twist_(std::move(twist)),
        table_(materialize(twist_, group_)),
        invertive_(check_invertive(table_, group_)),
        cache_(std::make_shared<Cache>()) {}

  static AlgebraContext dyadic(TwistKind kind, unsigned n) {
    require_exponent(n, TwistTable::kMaxExponent, "algebra");
    return AlgebraContext(FiniteGroup::dyadic(n), Twist::of(kind));
  }

  const FiniteGroup& group() const noexcept { return group_; }
  const Twist& twist() const noexcept { return twist_; }
  const TwistTable& table() const noexcept { return table_; }
  TwistKind kind() const noexcept { return twist_.kind(); }
  std::size_t dimension() const noexcept { return group_.order(); }

  Sign sign(GroupElement p, GroupElement q) const noexcept { return table_(p, q); }

  const PropertyCheck& invertive() const noexcept { return invertive_; }

  /// Verdict computed on first use and shared by copies of this context.
  const PropertyCheck& proper() const {
    std::call_once(cache_->proper_once, [&] { cache_->proper = check_proper(table_, group_); });
    return cache_->proper;
  }

  const PropertyCheck& associative() const {
    std::call_once(cache_->associative_once,
                   [&] { cache_->associative = check_associative(table_, group_); });
    return cache_->associative;
  }

  bool is_cayley_dickson() const noexcept {
    return group_.is_dyadic() && twist_.kind() == TwistKind::CayleyDickson;
  }

  template <Scalar T>
  void require_element(const BasicElement<T>& x) const {
    if (x.size() != dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "element of size " + std::to_string(x.size()) +
                                                    " in an algebra of dimension " +
                                                    std::to_string(dimension()));
    }
  }

  void require_cayley_dickson(const char* what) const {
    if (!is_cayley_dickson()) {
      throw Error(ErrorCode::UnsupportedTwist,
                  std::string(what) + " is defined for the Cayley-Dickson twist on a dyadic group");
    }
  }

 private:
  struct Cache {
    std::once_flag proper_once;
    std::once_flag associative_once;
    PropertyCheck proper;
    PropertyCheck associative;
  };

  FiniteGroup group_;
  Twist twist_;
  TwistTable table_;
  PropertyCheck invertive_;
  std::shared_ptr<Cache> cache_;
};

/// xy = sum_p sum_q x_p y_q sgn(p,q) i_{pq}
template <Scalar T>
BasicElement<T> mul(const AlgebraContext& ctx, const BasicElement<T>& x, const BasicElement<T>& y) {
  ctx.require_element(x);
  ctx.require_element(y);
  const auto n = static_cast<GroupElement>(ctx.dimension());
  const auto& g = ctx.group();
  const auto& sgn = ctx.table();
  auto out = BasicElement<T>::zero(n);
  for (GroupElement p = 0; p < n; ++p) {
    const T xp = x[p];
    if (xp == T{0}) continue;
    for (GroupElement q = 0; q < n; ++q) {
      const T term = xp * y[q];
      const auto r = g.is_dyadic() ? (p ^ q) : g.op(p, q);
      if (sgn(p, q) > 0)
        out[r] += term;
      else
        out[r] -= term;
    }
  }
  return out;
}

/// i_p x
template <Scalar T>
BasicElement<T> left_basis_mul(const AlgebraContext& ctx, GroupElement p, const BasicElement<T>& x) {
  ctx.require_element(x);
  const auto n = static_cast<GroupElement>(ctx.dimension());
  if (p >= n) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  auto out = BasicElement<T>::zero(n);
  for (GroupElement q = 0; q < n; ++q)
    out[ctx.group().op(p, q)] += static_cast<T>(ctx.sign(p, q)) * x[q];
  return out;
}

/// x i_p
template <Scalar T>
BasicElement<T> right_basis_mul(const AlgebraContext& ctx, const BasicElement<T>& x, GroupElement p) {
  ctx.require_element(x);
  const auto n = static_cast<GroupElement>(ctx.dimension());
  if (p >= n) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  auto out = BasicElement<T>::zero(n);
  for (GroupElement q = 0; q < n; ++q)
    out[ctx.group().op(q, p)] += static_cast<T>(ctx.sign(q, p)) * x[q];
  return out;
}

/// Coefficient at p is sgn(p^-1, p) x_{p^-1}; over a dyadic group this is sgn(p,p) x_p.
template <Scalar T>
BasicElement<T> conjugate(const AlgebraContext& ctx, const BasicElement<T>& x) {
  ctx.require_element(x);
  if (!ctx.invertive().holds) {
    throw Error(ErrorCode::TwistNotInvertive,
                "conjugate needs sgn(p,p^-1) = sgn(p^-1,p); fails at p=" +
                    std::to_string(ctx.invertive().witness.front()));
  }
  const auto n = static_cast<GroupElement>(ctx.dimension());
  auto out = BasicElement<T>::zero(n);
  for (GroupElement p = 0; p < n; ++p) {
    const auto inv = ctx.group().inverse(p);
    out[p] = static_cast<T>(ctx.sign(inv, p)) * x[inv];
  }
  return out;
}

template <Scalar T>
T inner(const BasicElement<T>& x, const BasicElement<T>& y) {
  x.require_same_size(y);
  T acc{0};
  for (std::size_t p = 0; p < x.size(); ++p) acc += x[p] * y[p];
  return acc;
}

template <Scalar T>
T norm_squared(const BasicElement<T>& x) {
  return inner(x, x);
}

template <Scalar T>
double norm(const BasicElement<T>& x) {
  if constexpr (std::floating_point<T>) {
    // Scaled so tiny or huge coefficients neither underflow nor overflow.
    double big = 0.0;
    for (auto c : x.coeffs()) big = std::max(big, std::abs(static_cast<double>(c)));
    if (big == 0.0) return 0.0;
    double acc = 0.0;
    for (auto c : x.coeffs()) {
      const double s = static_cast<double>(c) / big;
      acc += s * s;
    }
    return big * std::sqrt(acc);
  } else {
    return std::sqrt(static_cast<double>(norm_squared(x)));
  }
}

/// |a - b| <= rel * scale + abs_floor, with exact comparison for integers.
template <Scalar T>
bool nearly_equal(T a, T b, double scale = 1.0, double rel = 1e-9, double abs_floor = 1e-12) {
  if constexpr (std::integral<T>) {
    return a == b;
  } else {
    return std::abs(static_cast<double>(a) - static_cast<double>(b)) <= rel * scale + abs_floor;
  }
}

template <Scalar T>
bool nearly_equal(const BasicElement<T>& a, const BasicElement<T>& b, double scale = 1.0,
                  double rel = 1e-9, double abs_floor = 1e-12) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!nearly_equal(a[i], b[i], scale, rel, abs_floor)) return false;
  return true;
}

/// Product through inner products, valid for proper twists:
///   xy = sum_r <x, i_r conj(y)> i_r = sum_r <y, conj(x) i_r> i_r.
/// Both forms are evaluated and must agree.
template <Scalar T>
BasicElement<T> mul_via_inner(const AlgebraContext& ctx, const BasicElement<T>& x,
                              const BasicElement<T>& y) {
  ctx.require_element(x);
  ctx.require_element(y);
  if (const auto& proper = ctx.proper(); !proper.holds) {
    throw Error(ErrorCode::TwistNotProper,
                std::string(ctx.twist().name()) + " fails the proper laws at (" +
                    std::to_string(proper.witness[0]) + "," + std::to_string(proper.witness[1]) + ")");
  }
  const auto& g = ctx.group();
  const auto y_bar = conjugate(ctx, y);
  const auto x_bar = conjugate(ctx, x);
  const auto n = static_cast<GroupElement>(ctx.dimension());
  const double scale = norm(x) * norm(y);
  auto out = BasicElement<T>::zero(n);
  for (GroupElement r = 0; r < n; ++r) {
    const auto r_inv = g.inverse(r);
    // (i_r conj(y))_p = sgn(r, s) conj(y)_s with r s = p
    T by_left{0};
    for (GroupElement p = 0; p < n; ++p) {
      const auto s = g.op(r_inv, p);
      by_left += x[p] * static_cast<T>(ctx.sign(r, s)) * y_bar[s];
    }
    // (conj(x) i_r)_q = sgn(s, r) conj(x)_s with s r = q
    T by_right{0};
    for (GroupElement q = 0; q < n; ++q) {
      const auto s = g.op(q, r_inv);
      by_right += y[q] * static_cast<T>(ctx.sign(s, r)) * x_bar[s];
    }
    if (!nearly_equal(by_left, by_right, scale)) {
      throw Error(ErrorCode::InconsistentResult,
                  "inner-product forms disagree at r=" + std::to_string(r));
    }
    out[r] = by_left;
  }
  return out;
}

/// x^-1 = conj(x) / |x|^2 in a Cayley-Dickson algebra.
inline Element inverse_cd(const AlgebraContext& ctx, const Element& x) {
  ctx.require_cayley_dickson("inverse_cd");
  ctx.require_element(x);
  const double n2 = norm_squared(x);
  if (n2 == 0.0) throw Error(ErrorCode::ZeroElement, "zero has no inverse");
  return conjugate(ctx, x) * (1.0 / n2);
}

/// [x,y] = xy - yx
template <Scalar T>
BasicElement<T> commutator(const AlgebraContext& ctx, const BasicElement<T>& x,
                           const BasicElement<T>& y) {
  return mul(ctx, x, y) - mul(ctx, y, x);
}

/// Reduced commutator sum for the Cayley-Dickson twist:
///   [x,y]_r = sum_{0<p!=r} cyd(p,r) (x_{pr} y_p - x_p y_{pr}),  [x,y]_0 = 0.
template <Scalar T>
BasicElement<T> commutator_closed(const AlgebraContext& ctx, const BasicElement<T>& x,
                                  const BasicElement<T>& y) {
  ctx.require_cayley_dickson("commutator_closed");
  ctx.require_element(x);
  ctx.require_element(y);
  const auto n = static_cast<GroupElement>(ctx.dimension());
  auto out = BasicElement<T>::zero(n);
  for (GroupElement r = 1; r < n; ++r) {
    T acc{0};
    for (GroupElement p = 1; p < n; ++p) {
      if (p == r) continue;
      const auto pr = p ^ r;
      acc += static_cast<T>(ctx.sign(p, r)) * (x[pr] * y[p] - x[p] * y[pr]);
    }
    out[r] = acc;
  }
  return out;
}

/// Dyadic convolution: (x*y)_r = sum_p x_p y_{p xor r}.
template <Scalar T>
BasicElement<T> convolution(const BasicElement<T>& x, const BasicElement<T>& y) {
  x.require_same_size(y);
  if (x.exponent() < 0)
    throw Error(ErrorCode::DimensionMismatch, "convolution needs a dyadic (power of two) size");
  const auto n = static_cast<GroupElement>(x.size());
  auto out = BasicElement<T>::zero(n);
  for (GroupElement r = 0; r < n; ++r) {
    T acc{0};
    for (GroupElement p = 0; p < n; ++p) acc += x[p] * y[p ^ r];
    out[r] = acc;
  }
  return out;
}

struct IdentityCheck {
  bool passed = false;
  double residual = 0.0;
};

/// Checks x^2 = 2 x_0 x - |x|^2 under the Cayley-Dickson twist. Integer
/// inputs must match exactly; floating inputs within 1e-9 |x|^2 + 1e-12.
template <Scalar T>
IdentityCheck square_identity_check(const AlgebraContext& ctx, const BasicElement<T>& x) {
  ctx.require_cayley_dickson("square_identity_check");
  ctx.require_element(x);
  const auto lhs = mul(ctx, x, x);
  auto rhs = T{2} * x[0] * x;
  rhs[0] -= norm_squared(x);
  const auto diff = lhs - rhs;
  IdentityCheck check;
  check.residual = norm(diff);
  if constexpr (std::integral<T>) {
    check.passed = diff.is_zero();
  } else {
    check.passed = check.residual <= 1e-9 * static_cast<double>(norm_squared(x)) + 1e-12;
  }
  return check;
}

/// Dense square matrix, row-major.
template <Scalar T>
struct Matrix {
  std::size_t size = 0;
  std::vector<T> data;

  explicit Matrix(std::size_t n = 0) : size(n), data(n * n, T{0}) {}

  T operator()(std::size_t r, std::size_t c) const noexcept { return data[r * size + c]; }
  T& operator()(std::size_t r, std::size_t c) noexcept { return data[r * size + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.size != b.size) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
    Matrix out(a.size);
    for (std::size_t r = 0; r < a.size; ++r)
      for (std::size_t k = 0; k < a.size; ++k) {
        const T v = a(r, k);
        if (v == T{0}) continue;
        for (std::size_t c = 0; c < a.size; ++c) out(r, c) += v * b(k, c);
      }
    return out;
  }
  friend Matrix operator*(T s, Matrix m) {
    for (auto& v : m.data) v *= s;
    return m;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  template <Scalar U>
  BasicElement<U> apply(const BasicElement<U>& x) const {
    if (x.size() != size) throw Error(ErrorCode::DimensionMismatch, "matrix/element size mismatch");
    auto out = BasicElement<U>::zero(size);
    for (std::size_t r = 0; r < size; ++r) {
      U acc{0};
      for (std::size_t c = 0; c < size; ++c) acc += static_cast<U>((*this)(r, c)) * x[c];
      out[r] = acc;
    }
    return out;
  }
};

using SignMatrix = Matrix<int>;

inline void require_associative(const AlgebraContext& ctx) {
  if (const auto& assoc = ctx.associative(); !assoc.holds) {
    throw Error(ErrorCode::TwistNotAssociative,
                std::string(ctx.twist().name()) + " fails associativity at (" +
                    std::to_string(assoc.witness[0]) + "," + std::to_string(assoc.witness[1]) +
                    "," + std::to_string(assoc.witness[2]) + ")");
  }
}

/// Left-regular matrix L_p: entry (r, s) is sgn(p, s) when r = p s, else 0.
inline SignMatrix matrix_rep(const AlgebraContext& ctx, GroupElement p) {
  require_associative(ctx);
  const auto n = ctx.dimension();
  if (p >= n) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  SignMatrix m(n);
  for (GroupElement s = 0; s < n; ++s) m(ctx.group().op(p, s), s) = ctx.sign(p, s);
  return m;
}

/// Image of x under x -> sum_p x_p L_p.
template <Scalar T>
Matrix<T> regular_representation(const AlgebraContext& ctx, const BasicElement<T>& x) {
  ctx.require_element(x);
  require_associative(ctx);
  const auto n = ctx.dimension();
  Matrix<T> m(n);
  for (GroupElement p = 0; p < n; ++p) {
    if (x[p] == T{0}) continue;
    for (GroupElement s = 0; s < n; ++s)
      m(ctx.group().op(p, s), s) += static_cast<T>(ctx.sign(p, s)) * x[p];
  }
  return m;
}

}  // namespace twistalg
