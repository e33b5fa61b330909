#include "hsdet/sep_series.hpp"

#include <array>

#include "hsdet/error.hpp"
#include "hsdet/special.hpp"

namespace hsdet {

ExactRational q_poly(const ExactRational& a) {
  // a (5 a (25 a (2 a (740 a + 3119) + 10313) + 208403) + 410694) + 63000
  ExactRational v = 740 * a + 3119;
  v = 2 * a * v + 10313;
  v = 25 * a * v + 208403;
  v = 5 * a * v + 410694;
  return a * v + 63000;
}

ExactRational q_poly_expanded(const ExactRational& a) {
  static const std::array<long, 6> coeffs{63000, 410694, 1042015, 1289125, 779750, 185000};
  ExactRational total(0);
  ExactRational power(1);
  for (long c : coeffs) {
    total += c * power;
    power *= a;
  }
  return total;
}

ExactRational f_term(HalfIntegerAlpha alpha) {
  const unsigned t = static_cast<unsigned>(alpha.two_alpha());
  // Doubled gamma arguments: 3a+5/2 -> 3t+5, 5a+2 -> 5t+4, a+1 -> t+2,
  // 2a+3 -> 2t+6, 5a+13/2 -> 5t+13.
  const std::array<unsigned, 2> num{3 * t + 5, 5 * t + 4};
  const std::array<unsigned, 3> den{t + 2, 2 * t + 6, 5 * t + 13};
  ExactRational value = gamma_ratio(num, den);
  value *= q_poly(alpha.value());
  value *= pow(ExactRational(2), -2 * static_cast<long>(t) - 6);  // 2^(-4a-6)
  value /= 3;
  return value;
}

SeriesState separability_probability(HalfIntegerAlpha alpha, const ExactRational& epsilon) {
  if (epsilon.sign() <= 0) throw DomainError("separability_probability: epsilon must be positive");

  SeriesState state{alpha, 0, ExactRational(0), ExactRational(0), ExactRational(0)};
  ExactRational term = f_term(alpha);
  const ExactRational tail_factor = kTailRatio / (1 - kTailRatio);
  while (state.terms_used < kMaxSeriesTerms) {
    if (term.sign() <= 0) throw NumericError("separability_probability: non-positive series term");
    state.partial_sum += term;
    state.last_term = term;
    ++state.terms_used;

    ExactRational next = f_term(alpha.shifted(static_cast<int>(state.terms_used)));
    if (next / term < kTailRatio) {
      state.tail_bound = term * tail_factor;
      if (state.tail_bound < epsilon) return state;
    }
    term = std::move(next);
  }
  throw NumericError("separability_probability: term ratio did not confirm decay within " +
                     std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace hsdet
