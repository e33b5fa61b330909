#include <array>
#include <random>

#include <gtest/gtest.h>

#include "hsdet/error.hpp"
#include "hsdet/exact_rational.hpp"
#include "hsdet/special.hpp"
#include "oracles.hpp"

using namespace hsdet;

namespace {

bool lowest_terms(const ExactRational& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return g == 1 && r.denominator() > 0;
}

}  // namespace

TEST(ExactRational, CanonicalForm) {
  const ExactRational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_TRUE(lowest_terms(r));
  EXPECT_EQ(ExactRational(10, 5).str(), "2");
}

TEST(ExactRational, DivisionByZeroThrows) {
  EXPECT_THROW(ExactRational(1) / ExactRational(0), DomainError);
  EXPECT_THROW(ExactRational(1, 0), DomainError);
}

TEST(ExactRational, ParseAndSerialize) {
  EXPECT_EQ(ExactRational::parse("-7/3876"), ExactRational(-7, 3876));
  EXPECT_EQ(ExactRational::parse("12/8").str(), "3/2");
  EXPECT_EQ(ExactRational::parse("1e-3"), ExactRational(1, 1000));
  EXPECT_EQ(ExactRational::parse("-0.125"), ExactRational(-1, 8));
  EXPECT_EQ(ExactRational::parse("2.5E2"), ExactRational(250));
  EXPECT_EQ(ExactRational(-7, 3876).str(), "-7/3876");
  EXPECT_THROW(ExactRational::parse("1/0"), FormatError);
  EXPECT_THROW(ExactRational::parse("abc"), FormatError);
  EXPECT_THROW(ExactRational::parse("1/-2"), FormatError);
}

TEST(ExactRational, ArithmeticStaysInLowestTerms) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const ExactRational a(num(rng), den(rng));
    const ExactRational b(num(rng), den(rng));
    EXPECT_TRUE(lowest_terms(a + b));
    EXPECT_TRUE(lowest_terms(a - b));
    EXPECT_TRUE(lowest_terms(a * b));
    if (!b.is_zero()) {
      EXPECT_TRUE(lowest_terms(a / b));
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(HalfIntegerAlpha, ParsesDecimalHalves) {
  EXPECT_EQ(HalfIntegerAlpha::parse("0.5").two_alpha(), 1);
  EXPECT_EQ(HalfIntegerAlpha::parse("1").two_alpha(), 2);
  EXPECT_EQ(HalfIntegerAlpha::parse("1.5").two_alpha(), 3);
  EXPECT_EQ(HalfIntegerAlpha::parse("35").two_alpha(), 70);
  EXPECT_EQ(HalfIntegerAlpha(35).str(), "17.5");
  EXPECT_THROW(HalfIntegerAlpha::parse("0.25"), DomainError);
  EXPECT_THROW(HalfIntegerAlpha::parse("0"), DomainError);
  EXPECT_THROW(HalfIntegerAlpha::parse("-1"), DomainError);
  EXPECT_THROW(HalfIntegerAlpha::parse("1/2"), DomainError);
  EXPECT_THROW(HalfIntegerAlpha::parse("x"), DomainError);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(ExactRational(1, 2), 0), ExactRational(1));
  EXPECT_EQ(pochhammer(ExactRational(2), 2), ExactRational(6));
  // 17*19*21*23 / 2^4
  EXPECT_EQ(pochhammer(ExactRational(17, 2), 4), ExactRational(156009, 16));
  EXPECT_EQ(pochhammer(ExactRational(-3), 5), ExactRational(0));
}

TEST(Pochhammer, RecursionProperty) {
  const std::array<ExactRational, 6> xs{ExactRational(1, 2), ExactRational(-7, 3), ExactRational(5),
                                        ExactRational(-4), ExactRational(13, 2), ExactRational(-11, 2)};
  for (const auto& x : xs) {
    ExactRational previous = pochhammer(x, 0);
    for (unsigned k = 0; k < 100; ++k) {
      const ExactRational next = pochhammer(x, k + 1);
      EXPECT_EQ(next, previous * (x + ExactRational(static_cast<long>(k))));
      EXPECT_EQ(next, oracle::rising(x, k + 1));
      previous = next;
    }
  }
}

TEST(GammaHalf, Examples) {
  EXPECT_EQ(gamma_half(2), (GammaHalfValue{ExactRational(1), 0}));
  EXPECT_EQ(gamma_half(1), (GammaHalfValue{ExactRational(1), 1}));
  EXPECT_EQ(gamma_half(7), (GammaHalfValue{ExactRational(15, 8), 1}));
  EXPECT_THROW(gamma_half(0), DomainError);
}

TEST(GammaHalf, RecursionProperty) {
  for (unsigned m = 1; m <= 200; ++m) {
    const GammaHalfValue g = gamma_half(m);
    const GammaHalfValue next = gamma_half(m + 2);
    EXPECT_EQ(next.sqrt_pi_exponent, g.sqrt_pi_exponent);
    EXPECT_EQ(next.rational_part, ExactRational(m, 2) * g.rational_part) << "m = " << m;
    EXPECT_EQ(g.rational_part, oracle::gamma_half_by_recursion(m));
  }
}

TEST(GammaRatio, Examples) {
  const std::array<unsigned, 1> n11{11}, d23{23}, n8{8}, n14{14};
  const std::array<unsigned, 2> d10_4{10, 4};
  // Gamma(11/2)/Gamma(23/2) = 1/((11/2)(13/2)...(21/2))
  EXPECT_EQ(gamma_ratio(n11, d23), ExactRational(1) / oracle::rising(ExactRational(11, 2), 6));
  EXPECT_EQ(gamma_ratio(n11, d23), ExactRational(64, 14549535));
  EXPECT_EQ(gamma_ratio(n8, n8), ExactRational(1));
  EXPECT_EQ(gamma_ratio(n14, d10_4), ExactRational(30));
}

TEST(GammaRatio, IdentityForAllArguments) {
  for (unsigned m = 1; m <= 100; ++m) {
    const std::array<unsigned, 1> arg{m};
    EXPECT_EQ(gamma_ratio(arg, arg), ExactRational(1));
  }
}

TEST(GammaRatio, UncancelledSqrtPiThrows) {
  const std::array<unsigned, 1> odd{3}, even{4};
  EXPECT_THROW(gamma_ratio(odd, even), NumericError);
}

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(40, 20), oracle::choose(40, 20));
}
