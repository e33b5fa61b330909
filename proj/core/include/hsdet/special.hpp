#pragma once

#include <span>

#include "hsdet/exact_rational.hpp"

namespace hsdet {

/// Rising factorial x(x+1)...(x+k-1); 1 for k == 0.
ExactRational pochhammer(const ExactRational& x, unsigned k);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

/// Exact Gamma(m/2) = rational_part * pi^(sqrt_pi_exponent/2).
struct GammaHalfValue {
  ExactRational rational_part;
  int sqrt_pi_exponent = 0;  // 0 or 1

  friend bool operator==(const GammaHalfValue&, const GammaHalfValue&) = default;
};

GammaHalfValue gamma_half(unsigned m);

/// prod Gamma(n_i/2) / prod Gamma(d_j/2), arguments given doubled.
/// Throws NumericError when the sqrt(pi) powers do not cancel.
ExactRational gamma_ratio(std::span<const unsigned> doubled_numerators,
                          std::span<const unsigned> doubled_denominators);

}  // namespace hsdet
