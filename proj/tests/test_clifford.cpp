#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace twistalg;

TEST(Blade, GradeAndFactors) {
  EXPECT_EQ(Blade{13}.grade(), 3U);
  EXPECT_EQ(Blade{13}.factors(), (std::vector<unsigned>{1, 3, 4}));
  EXPECT_EQ(Blade{0}.grade(), 0U);
  EXPECT_TRUE(Blade{0}.factors().empty());
}

TEST(ParseE, Examples) {
  EXPECT_EQ(parse_e("e134").index, 13U);
  EXPECT_EQ(parse_e("e23").index, 6U);
  EXPECT_EQ(parse_e("1").index, 0U);
  EXPECT_EQ(parse_e("e1").index, 1U);
  EXPECT_EQ(parse_e("e[10,12]").index, (1U << 9) | (1U << 11));
  EXPECT_EQ(parse_e("e[2,10]").index, 2U | (1U << 9));
  EXPECT_EQ(parse_e("e[32]").index, 1U << 31);
}

TEST(ParseE, Malformed) {
  for (const char* bad : {"", "e", "e0", "e21", "e11", "x12", "e1a", "e[]", "e[3,3]", "e[1,,2]",
                          "e[33]", "e[10", "e[100]", "2", "e[5,4]"}) {
    try {
      parse_e(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedENotation) << bad;
    }
  }
}

TEST(FormatE, Examples) {
  EXPECT_EQ(format_e(Blade{13}), "e134");
  EXPECT_EQ(format_e(Blade{6}), "e23");
  EXPECT_EQ(format_e(Blade{0}), "1");
  EXPECT_EQ(format_e(Blade{(1U << 9) | 1U}), "e[1,10]");
}

TEST(FormatE, RoundTripBelow1024) {
  for (GroupElement b = 0; b < 1024; ++b) ASSERT_EQ(parse_e(format_e(Blade{b})).index, b);
}

TEST(BladeMulOracle, Examples) {
  EXPECT_EQ(blade_mul_oracle(parse_e("e134"), parse_e("e23")), (SignedBlade{-1, parse_e("e124")}));
  EXPECT_EQ(parse_e("e124").index, 11U);
  EXPECT_EQ(blade_mul_oracle(Blade{0}, Blade{13}), (SignedBlade{1, Blade{13}}));
  EXPECT_EQ(blade_mul_oracle(Blade{1}, Blade{1}), (SignedBlade{1, Blade{0}}));
  EXPECT_EQ(blade_mul_oracle(Blade{2}, Blade{1}), (SignedBlade{-1, Blade{3}}));
}

TEST(BladeMulOracle, MatchesClfOnG6) {
  for (GroupElement p = 0; p < 64; ++p)
    for (GroupElement q = 0; q < 64; ++q) {
      const auto r = blade_mul_oracle(Blade{p}, Blade{q});
      ASSERT_EQ(r.sign, clf(p, q)) << p << "," << q;
      ASSERT_EQ(r.blade.index, p ^ q);
      ASSERT_EQ(r.blade.grade(), sob(p ^ q));
    }
}

TEST(E1Lemma, Examples) {
  EXPECT_TRUE(e1_lemma_check(0).all());
  EXPECT_EQ(blade_mul_oracle(Blade{2}, Blade{1}), (SignedBlade{-1, Blade{3}}));
  EXPECT_EQ(blade_mul_oracle(Blade{6}, Blade{1}), (SignedBlade{1, Blade{7}}));
  EXPECT_TRUE(e1_lemma_check(1).all());
  EXPECT_TRUE(e1_lemma_check(3).all());
}

TEST(E1Lemma, HoldsBelow1024) {
  for (GroupElement p = 0; p < 1024; ++p) ASSERT_TRUE(e1_lemma_check(p).all()) << p;
  EXPECT_THROW(e1_lemma_check(1024), Error);
}
