#include <gtest/gtest.h>

#include <random>

#include "shv/poly.hpp"
#include "shv/scalar.hpp"

using shv::MPoly;
using shv::Scalar;

TEST(Scalar, CanonicalForm) {
  Scalar s(6, -4);
  EXPECT_EQ(s.str(), "-3/2");
  EXPECT_EQ(s.denominator(), 2);
  EXPECT_EQ(Scalar(0, 7).str(), "0");
  EXPECT_EQ(Scalar(0, 7).denominator(), 1);
  EXPECT_EQ(Scalar::parse("10/4"), Scalar(5, 2));
  EXPECT_EQ(Scalar::parse("+3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("-0/5").str(), "0");
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1 /2"})
    EXPECT_THROW(Scalar::parse(bad), std::invalid_argument) << bad;
  EXPECT_THROW(Scalar(1, 0), std::domain_error);
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
  EXPECT_THROW((void)Scalar(1, 2).to_long(), std::range_error);
}

TEST(Scalar, ExactArithmeticOnRandomRationals) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L), den(1, 1'000'000'000L);
  for (int t = 0; t < 100; ++t) {
    const Scalar x(num(rng), den(rng)), y(num(rng), den(rng));
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ(Scalar::parse(x.str()), x);
    if (!y.is_zero()) {
      EXPECT_EQ((x * y) / y, x);
    }
    EXPECT_GT(x.denominator(), 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    EXPECT_TRUE(x.is_zero() ? x.denominator() == 1 : g == 1);
  }
}

TEST(Scalar, GeneralizedBinomial) {
  EXPECT_EQ(shv::binomial(5, 2), Scalar(10));
  EXPECT_EQ(shv::binomial(2, 5), Scalar(0));
  EXPECT_EQ(shv::binomial(-1, 3), Scalar(-1));
  EXPECT_EQ(shv::binomial(-3, 2), Scalar(6));
  EXPECT_EQ(shv::binomial(7, -1), Scalar(0));
  EXPECT_EQ(shv::factorial(5), Scalar(120));
}

TEST(MPoly, ArithmeticAndSubstitution) {
  const MPoly d = MPoly::var(0), l = MPoly::var(1);
  const MPoly p = d + l * Scalar(2);
  // λ -> -λ-∂ in ∂+2λ gives -∂-2λ
  EXPECT_EQ(p.substitute(1, -l - d), -d - l * Scalar(2));
  EXPECT_EQ((d + l).pow(2), d * d + d * l * Scalar(2) + l * l);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(((d + l) * (d - l)).coefficient(1, 2), MPoly(-1));
  EXPECT_EQ(p.total_degree(), 1);
  EXPECT_EQ(MPoly(Scalar(3)).constant_term(), Scalar(3));
}

TEST(MPoly, LinearDivision) {
  const MPoly d = MPoly::var(0), l = MPoly::var(1);
  const MPoly q = (d + l) * (d * Scalar(2) + Scalar(1));
  auto exact = q.divide_linear(1, l + d);
  ASSERT_TRUE(exact.has_value());
  EXPECT_EQ(*exact, d * Scalar(2) + Scalar(1));
  EXPECT_FALSE((q + Scalar(1)).divide_linear(1, l + d).has_value());
}

TEST(MPoly, MonicAndSplit) {
  const MPoly d = MPoly::var(0), a = MPoly::var(3);
  const MPoly p = a * d * Scalar(4) + d * Scalar(2);
  const auto parts = p.split({0});
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.begin()->second, a * Scalar(4) + Scalar(2));
  EXPECT_EQ(MPoly(Scalar(-3, 2)).monic(), MPoly(1));
}
