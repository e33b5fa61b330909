#include <gtest/gtest.h>

#include "hsdet/error.hpp"
#include "hsdet/moments.hpp"
#include "hsdet/rebit_density.hpp"

using namespace hsdet;

namespace {
double to_double(const BigReal& x) { return x.convert_to<double>(); }
}  // namespace

TEST(RebitDensity, VanishesAtUpperEndpoint) {
  ScopedDigits guard(60);
  EXPECT_LT(to_double(abs(rebit_density(BigReal(1) / 256, 60))), 1e-25);
}

TEST(RebitDensity, PositiveAtOrigin) {
  ScopedDigits guard(60);
  const BigReal f0 = rebit_density(BigReal(0), 60);
  EXPECT_GT(f0, 0);
  EXPECT_LT(f0, 1);
}

TEST(RebitDensity, LowerEndpointLimit) {
  ScopedDigits guard(80);
  const BigReal at = rebit_density(BigReal(-1) / 16, 80);
  EXPECT_LT(to_double(abs(at - BigReal(68544) / 289)), 1e-60);
  std::vector<BigReal> v;
  for (int k : {10, 20, 30}) v.push_back(rebit_density(BigReal(-1) / 16 + pow(BigReal(10), -k), 80));
  const double d1 = to_double(abs(v[1] - v[0]));
  const double d2 = to_double(abs(v[2] - v[1]));
  EXPECT_LT(d2, d1 * 1e-3);
  EXPECT_LT(to_double(abs(v[2] - at)), 1e-9);
}

TEST(RebitDensity, NonNegativeOnGrid) {
  ScopedDigits guard(50);
  const BigReal a = BigReal(-1) / 16;
  const BigReal width = BigReal(17) / 256;
  for (int i = 0; i <= 200; ++i) {
    const BigReal y = a + width * i / 200;
    EXPECT_GE(rebit_density(y, 50), 0) << i;
  }
}

TEST(RebitDensity, PrecisionDoublingIsStable) {
  const ExactRational a(-1, 16);
  const ExactRational width(17, 256);
  for (int i = 0; i < 100; ++i) {
    const ExactRational y = a + width * ExactRational(i, 99);
    BigReal lo, hi;
    {
      ScopedDigits guard(40);
      lo = rebit_density(to_big_real(y), 40);
    }
    {
      ScopedDigits guard(80);
      hi = rebit_density(to_big_real(y), 80);
    }
    ScopedDigits guard(80);
    EXPECT_LT(to_double(abs(hi - lo)), 1e-20) << y.str();
  }
}

TEST(RebitDensity, OutsideSupport) {
  ScopedDigits guard(30);
  EXPECT_THROW(rebit_density(BigReal("0.01"), 30), DomainError);
  EXPECT_THROW(rebit_density(BigReal("-0.07"), 30), DomainError);
}

TEST(RebitDensityMoment, MatchesExactMoments) {
  const MomentSequence exact = affine_transform_moments(moment_table(MomentFamily::RhoDet, HalfIntegerAlpha(1), 6),
                                                        rebit_support());
  EXPECT_EQ(exact.values[1], ExactRational(-63, 1144));
  for (unsigned k = 0; k <= 6; ++k) {
    const BigReal got = rebit_density_moment(k, 50);
    ScopedDigits guard(50);
    const BigReal want = to_big_real(exact.values[k]);
    EXPECT_LT(to_double(abs(got - want) / abs(want)), 1e-8) << k;
  }
}
