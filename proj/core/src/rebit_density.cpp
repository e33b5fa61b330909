#include "hsdet/rebit_density.hpp"

#include "hsdet/error.hpp"
#include "hsdet/quadrature.hpp"

namespace hsdet {

Interval rebit_support() { return {ExactRational(-1, 16), ExactRational(1, 256)}; }

namespace {

// Radicands may dip below zero by rounding at the endpoints.
BigReal checked_sqrt(const BigReal& radicand, const BigReal& slack, const char* which) {
  if (radicand >= 0) return sqrt(radicand);
  if (-radicand <= slack) return BigReal(0);
  throw NumericError(std::string("rebit_density: negative radicand in ") + which + "; precision too low");
}

}  // namespace

BigReal rebit_density(const BigReal& y, unsigned digits) {
  ScopedDigits guard(digits);
  const BigReal lower = BigReal(-1) / 16;
  const BigReal upper = BigReal(1) / 256;
  if (y < lower || y > upper) {
    throw DomainError("rebit_density: y = " + format_significant(y, 20) + " outside [-1/16, 1/256]");
  }
  const BigReal slack = pow(BigReal(10), -static_cast<int>(digits) + 5);
  const BigReal sqrt17 = sqrt(BigReal(17));

  const BigReal s1 = checked_sqrt(BigReal(16 * y + 1), slack, "16y+1");
  const BigReal outer = checked_sqrt(BigReal(17 - 4 * checked_sqrt(BigReal(272 * y + 17), slack, "272y+17")),
                                     slack, "17-4sqrt(272y+17)");

  BigReal value = -BigReal(4128768) * outer * y / (289 * sqrt17)  //
                  - BigReal(72576) / 289 * s1 * outer            //
                  - BigReal(189504) * outer / (289 * sqrt17);
  if (y == lower) return value;

  const BigReal arg = checked_sqrt(BigReal(1 - 4 * s1 / sqrt17), slack, "arctanh argument");
  const BigReal at = atanh(arg);
  value += BigReal(7741440) / 289 * y * at + BigReal(483840) / 289 * at;
  return value;
}

BigReal rebit_density_moment(unsigned k, unsigned digits) {
  ScopedDigits guard(digits);
  const BigReal a = BigReal(-1) / 16;
  const BigReal b = BigReal(1) / 256;
  // Dedicated band at the logarithmic endpoint; the origin splits the rest.
  const std::vector<BigReal> breakpoints{a, BigReal(a + BigReal(1) / 10000), BigReal(0), b};
  const BigReal tolerance = pow(BigReal(10), -static_cast<int>(digits / 2));
  auto integrand = [k, digits](const BigReal& y) { return BigReal(pow(y, k) * rebit_density(y, digits)); };
  const QuadratureResult r = adaptive_integrate(integrand, breakpoints, BigReal(tolerance / 10), digits);
  if (r.error_estimate > tolerance) {
    throw NumericError("rebit_density_moment: quadrature error estimate " + format_significant(r.error_estimate, 5) +
                       " exceeds tolerance");
  }
  return r.value;
}

}  // namespace hsdet
