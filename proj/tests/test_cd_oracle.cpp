#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace twistalg;
using namespace twistalg::testing;

namespace {

using Tree = PairTree<std::int64_t>;

Tree leaf(std::int64_t v) { return Tree(v); }
Tree pair(std::int64_t a, std::int64_t b) { return Tree(leaf(a), leaf(b)); }

}  // namespace

TEST(PairTree, ShapeAndDepth) {
  EXPECT_EQ(leaf(3).depth(), 0U);
  EXPECT_EQ(pair(1, 2).depth(), 1U);
  EXPECT_EQ(Tree::zero(3).depth(), 3U);
  try {
    Tree(leaf(1), pair(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthMismatch);
  }
}

TEST(CdMul, DepthOneIsComplexProduct) {
  const std::int64_t a = 2, b = -3, c = 5, d = 4;
  EXPECT_EQ(cd_mul(pair(a, b), pair(c, d)), pair(a * c - d * b, a * d + c * b));
}

TEST(CdMul, UnitIsIdentity) {
  std::mt19937_64 rng(1);
  for (unsigned depth = 0; depth <= 5; ++depth) {
    const auto x = unshuffle(random_int_element(dyadic_order(depth), rng), depth);
    const auto one = unshuffle(IntElement::scalar(dyadic_order(depth), 1), depth);
    EXPECT_EQ(cd_mul(x, one), x);
    EXPECT_EQ(cd_mul(one, x), x);
  }
}

TEST(CdMul, QuaternionBasis) {
  const auto i1 = unshuffle(IntElement::basis(4, 1), 2);
  const auto i2 = unshuffle(IntElement::basis(4, 2), 2);
  EXPECT_EQ(shuffle(cd_mul(i1, i2)), IntElement::basis(4, 3));
}

TEST(CdMul, DepthMismatch) {
  try {
    cd_mul(pair(1, 0), leaf(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthMismatch);
  }
  EXPECT_THROW(hadamard_mul(pair(1, 0), leaf(1)), Error);
  EXPECT_THROW(pair(1, 0) + leaf(1), Error);
}

TEST(Shuffle, BasisCorrespondence) {
  EXPECT_EQ(unshuffle(IntElement::basis(4, 2), 2), Tree(pair(0, 1), pair(0, 0)));
  EXPECT_EQ(unshuffle(IntElement::basis(4, 3), 2), Tree(pair(0, 0), pair(0, 1)));
  EXPECT_EQ(shuffle(Tree(pair(1, 2), pair(3, 4))), IntElement(std::vector<std::int64_t>{1, 3, 2, 4}));
  // i_{2k} = (i_k, 0) and i_{2k+1} = (0, i_k)
  for (GroupElement k = 0; k < 16; ++k) {
    const auto ik = unshuffle(IntElement::basis(16, k), 4);
    const auto zero = Tree::zero(4);
    EXPECT_EQ(unshuffle(IntElement::basis(32, 2 * k), 5), Tree(ik, zero));
    EXPECT_EQ(unshuffle(IntElement::basis(32, 2 * k + 1), 5), Tree(zero, ik));
  }
}

TEST(Shuffle, RoundTrip) {
  std::mt19937_64 rng(2);
  for (unsigned depth = 0; depth <= 6; ++depth) {
    const auto e = random_int_element(dyadic_order(depth), rng);
    EXPECT_EQ(shuffle(unshuffle(e, depth)), e);
  }
  try {
    unshuffle(IntElement::zero(8), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthMismatch);
  }
}

TEST(OracleTwist, Examples) {
  EXPECT_EQ(oracle_twist(9, 11, 4), -1);
  for (GroupElement q = 0; q < 8; ++q) EXPECT_EQ(oracle_twist(0, q, 3), 1);
  for (GroupElement p = 1; p < 8; ++p) EXPECT_EQ(oracle_twist(p, p, 3), -1);
}

TEST(OracleTwist, Errors) {
  EXPECT_THROW(oracle_twist(0, 0, 9), Error);
  EXPECT_THROW(oracle_twist(4, 0, 2), Error);
}

TEST(OracleTwist, MatchesCydOnG5) {
  for (GroupElement p = 0; p < 32; ++p)
    for (GroupElement q = 0; q < 32; ++q) ASSERT_EQ(oracle_twist(p, q, 5), cyd(p, q)) << p << "," << q;
}

TEST(HadamardOracle, Examples) {
  EXPECT_EQ(hadamard_oracle_twist(1, 1, 1), -1);
  EXPECT_EQ(hadamard_oracle_twist(1, 2, 2), 1);
  EXPECT_EQ(hadamard_oracle_twist(3, 3, 2), 1);
}

TEST(HadamardOracle, MatchesClosedFormOnG5) {
  for (GroupElement p = 0; p < 32; ++p)
    for (GroupElement q = 0; q < 32; ++q)
      ASSERT_EQ(hadamard_oracle_twist(p, q, 5), parity_sign(sob(p & q))) << p << "," << q;
}

TEST(Transport, WholeProducts) {
  std::mt19937_64 rng(3);
  for (unsigned n = 0; n <= 4; ++n) {
    const auto ctx = AlgebraContext::dyadic(TwistKind::CayleyDickson, n);
    const auto had = AlgebraContext::dyadic(TwistKind::Hadamard, n);
    for (int t = 0; t < 10; ++t) {
      const auto x = random_int_element(ctx.dimension(), rng);
      const auto y = random_int_element(ctx.dimension(), rng);
      const auto ux = unshuffle(x, n), uy = unshuffle(y, n);
      ASSERT_EQ(shuffle(cd_mul(ux, uy)), mul(ctx, x, y));
      ASSERT_EQ(shuffle(hadamard_mul(ux, uy)), mul(had, x, y));
    }
  }
}

TEST(Transport, Conjugate) {
  std::mt19937_64 rng(4);
  for (unsigned n = 0; n <= 5; ++n) {
    const auto ctx = AlgebraContext::dyadic(TwistKind::CayleyDickson, n);
    const auto x = random_int_element(ctx.dimension(), rng);
    EXPECT_EQ(shuffle(cd_conjugate(unshuffle(x, n))), conjugate(ctx, x));
  }
}
