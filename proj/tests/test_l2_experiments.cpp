#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace twistalg;
using namespace twistalg::testing;

TEST(Uniform, RangeAndDeterminism) {
  std::mt19937_64 a(7), b(7);
  for (int k = 0; k < 1000; ++k) {
    const double u = uniform_signed(a);
    ASSERT_GE(u, -1.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u, uniform_signed(b));
  }
}

TEST(DecayProfile, Validation) {
  EXPECT_THROW(DecayProfile::geometric(1.0), Error);
  EXPECT_THROW(DecayProfile::geometric(-1.5), Error);
  EXPECT_THROW(DecayProfile::power_law(0.5), Error);
  EXPECT_EQ(DecayProfile::geometric(0.5).envelope(3), 0.125);
  EXPECT_EQ(DecayProfile::power_law(1.0).envelope(3), 0.25);
  EXPECT_EQ(DecayProfile::geometric(0.5).label(), "geometric:0.5");
  EXPECT_EQ(DecayProfile::power_law(2).label(), "power:2");
}

TEST(TruncatedSequence, TruncationKeepsPrefix) {
  std::mt19937_64 rng(1);
  const auto s = random_sequence(DecayProfile::geometric(0.5), 5, rng);
  const auto t = s.truncate(3);
  ASSERT_EQ(t.values.size(), 8U);
  for (std::size_t p = 0; p < 8; ++p) {
    EXPECT_EQ(t.values[p], s.values[p]);
    EXPECT_LE(std::abs(s.values[p]), std::pow(0.5, static_cast<double>(p)));
  }
  EXPECT_THROW(s.truncate(6), Error);
}

TEST(Orthogonality, SmallDimensionsAreOrthogonal) {
  for (unsigned n = 0; n < 4; ++n) {
    const auto r = orthogonality_scan(n, 64, kDefaultSeed);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_LE(r.column(0, "max_ratio"), 1e-12);
  }
}

TEST(Orthogonality, SedenionWitness) {
  const auto r = orthogonality_scan(4, 64, kDefaultSeed);
  EXPECT_GT(r.column(0, "witness_2_5_max"), 1e-12);
  EXPECT_GE(r.column(0, "witness_2_5_nonzero"), 63.0);
  EXPECT_GT(r.column(0, "max_ratio"), 1e-12);
}

TEST(Orthogonality, WitnessMatchesDirectComputation) {
  // Rebuild the first trial's x and evaluate <i_2 x, i_5 x> by hand.
  std::mt19937_64 rng(99);
  const auto x = random_element(16, rng);
  const auto ctx = AlgebraContext::dyadic(TwistKind::CayleyDickson, 4);
  double direct = 0.0;
  for (GroupElement q = 0; q < 16; ++q) {
    // coefficient of i_2 x at 2^q is cyd(2,q) x_q; of i_5 x at 5^s is cyd(5,s) x_s
    const GroupElement s = 2 ^ q ^ 5;
    direct += cyd(2, q) * x[q] * cyd(5, s) * x[s];
  }
  const auto r = orthogonality_scan(4, 1, 99);
  EXPECT_NEAR(r.column(0, "witness_2_5_max"), std::abs(direct) / norm_squared(x), 1e-12);
  EXPECT_NEAR(std::abs(inner(left_basis_mul(ctx, 2, x), left_basis_mul(ctx, 5, x))), std::abs(direct),
              1e-12);
}

TEST(Orthogonality, Cap) { EXPECT_THROW(orthogonality_scan(7, 1, 1), Error); }

TEST(Orthogonality, Reproducible) {
  EXPECT_EQ(orthogonality_scan(5, 16, 3), orthogonality_scan(5, 16, 3));
  EXPECT_NE(orthogonality_scan(5, 16, 3).rows, orthogonality_scan(5, 16, 4).rows);
}

TEST(NormGrowth, ConvolutionTable) {
  const auto r = norm_growth(GrowthProduct::dyadic_convolution(), 4, 10,
                             DecayProfile::geometric(0.5), 64, kDefaultSeed);
  EXPECT_TRUE(r.exploratory);
  EXPECT_EQ(r.product, "convolution");
  ASSERT_EQ(r.rows.size(), 7U);
  ASSERT_EQ(r.verdicts.at(0), "exploratory - no acceptance threshold");
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    EXPECT_EQ(r.column(k, "n"), 4.0 + static_cast<double>(k));
    EXPECT_LE(r.column(k, "min_ratio"), r.column(k, "mean_ratio"));
    EXPECT_LE(r.column(k, "mean_ratio"), r.column(k, "max_ratio"));
    EXPECT_TRUE(std::isfinite(r.column(k, "max_ratio")));
  }
}

TEST(NormGrowth, CompositionAlgebrasPreserveNorms) {
  for (auto profile : {DecayProfile::geometric(0.5), DecayProfile::power_law(1.0)}) {
    const auto r =
        norm_growth(GrowthProduct::twisted(TwistKind::CayleyDickson), 0, 3, profile, 64, 5);
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      EXPECT_NEAR(r.column(k, "min_ratio"), 1.0, 1e-9);
      EXPECT_NEAR(r.column(k, "max_ratio"), 1.0, 1e-9);
    }
  }
}

TEST(NormGrowth, BasisTimesBasisHasRatioOne) {
  for (auto kind : kNamedTwists) {
    const auto ctx = AlgebraContext::dyadic(kind, 4);
    for (GroupElement p = 0; p < 16; ++p)
      for (GroupElement q = 0; q < 16; ++q)
        ASSERT_EQ(norm(mul(ctx, Element::basis(16, p), Element::basis(16, q))), 1.0);
  }
  for (GroupElement p = 0; p < 16; ++p)
    EXPECT_EQ(norm(convolution(Element::basis(16, p), Element::basis(16, 3))), 1.0);
}

TEST(NormGrowth, Reproducible) {
  const auto a = norm_growth(GrowthProduct::twisted(TwistKind::Clifford), 2, 6,
                             DecayProfile::power_law(0.75), 8, 11);
  const auto b = norm_growth(GrowthProduct::twisted(TwistKind::Clifford), 2, 6,
                             DecayProfile::power_law(0.75), 8, 11);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.seed, 11U);
  EXPECT_EQ(a.profile, "power:0.75");
}

TEST(NormGrowth, Errors) {
  const auto g = DecayProfile::geometric(0.5);
  EXPECT_THROW(norm_growth(GrowthProduct::dyadic_convolution(), 4, 13, g, 1, 1), Error);
  EXPECT_THROW(norm_growth(GrowthProduct::dyadic_convolution(), 5, 4, g, 1, 1), Error);
  EXPECT_THROW(norm_growth(GrowthProduct::twisted(TwistKind::Table), 1, 2, g, 1, 1), Error);
}

TEST(Bounds, SquareBound) {
  std::mt19937_64 rng(6);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto ctx = AlgebraContext::dyadic(TwistKind::CayleyDickson, n);
    for (int t = 0; t < 5; ++t) {
      const auto x = random_sequence(DecayProfile::power_law(0.75), n, rng).values;
      EXPECT_GE(square_bound_slack(ctx, x), -1e-9 * norm_squared(x));
    }
  }
}

TEST(Bounds, CommutatorBound) {
  std::mt19937_64 rng(7);
  for (unsigned n = 0; n <= 8; ++n)
    for (auto kind : {TwistKind::CayleyDickson, TwistKind::Clifford}) {
      const auto ctx = AlgebraContext::dyadic(kind, n);
      const auto x = random_sequence(DecayProfile::geometric(0.8), n, rng).values;
      const auto y = random_sequence(DecayProfile::geometric(0.8), n, rng).values;
      EXPECT_LE(commutator_bound_excess(ctx, x, y), 1e-9);
    }
}

TEST(Report, JsonRoundTripAndText) {
  auto r = orthogonality_scan(4, 8, 2);
  r.append(orthogonality_scan(5, 8, 2));
  EXPECT_EQ(r.rows.size(), 2U);
  EXPECT_EQ(experiment_report_from_json(report_to_json(r)), r);
  const auto text = format_report(r);
  EXPECT_NE(text.find("orthogonality  product=cyd"), std::string::npos);
  EXPECT_NE(text.find("witness_2_5_nonzero"), std::string::npos);
  EXPECT_NE(text.find("# n=4"), std::string::npos);
  EXPECT_THROW(experiment_report_from_json(json{{"experiment", 1}}), Error);
  EXPECT_THROW(r.column(0, "nope"), Error);
}
