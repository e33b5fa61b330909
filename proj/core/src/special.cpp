#include "hsdet/special.hpp"

#include "hsdet/error.hpp"

namespace hsdet {

ExactRational pochhammer(const ExactRational& x, unsigned k) {
  // Accumulate numerator and denominator separately; x + i shares x's
  // denominator, so the product is (prod (p + i q)) / q^k.
  const mpz_class& p = x.raw().get_num();
  const mpz_class& q = x.raw().get_den();
  mpz_class num = 1;
  mpz_class term = p;
  for (unsigned i = 0; i < k; ++i) {
    num *= term;
    if (num == 0) return ExactRational(0);
    term += q;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), k);
  return ExactRational(num, den);
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

GammaHalfValue gamma_half(unsigned m) {
  if (m == 0) throw DomainError("gamma_half: argument must be >= 1");
  if (m % 2 == 0) return {ExactRational(factorial(m / 2 - 1)), 0};
  // Gamma(m/2) = (m-2)!! / 2^((m-1)/2) * sqrt(pi)
  mpz_class dfact;
  if (m >= 3) {
    mpz_2fac_ui(dfact.get_mpz_t(), m - 2);
  } else {
    dfact = 1;
  }
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, (m - 1) / 2);
  return {ExactRational(dfact, two_pow), 1};
}

ExactRational gamma_ratio(std::span<const unsigned> doubled_numerators,
                          std::span<const unsigned> doubled_denominators) {
  ExactRational value(1);
  int sqrt_pi = 0;
  for (unsigned m : doubled_numerators) {
    const GammaHalfValue g = gamma_half(m);
    value *= g.rational_part;
    sqrt_pi += g.sqrt_pi_exponent;
  }
  for (unsigned m : doubled_denominators) {
    const GammaHalfValue g = gamma_half(m);
    value /= g.rational_part;
    sqrt_pi -= g.sqrt_pi_exponent;
  }
  if (sqrt_pi != 0) {
    throw NumericError("gamma_ratio: sqrt(pi) powers do not cancel (net exponent " +
                       std::to_string(sqrt_pi) + ")");
  }
  return value;
}

}  // namespace hsdet
