#pragma once

#include "hsdet/exact_rational.hpp"

namespace hsdet {

/// 185000 a^5 + 779750 a^4 + 1289125 a^3 + 1042015 a^2 + 410694 a + 63000,
/// evaluated in nested form.
ExactRational q_poly(const ExactRational& alpha);

/// Same quintic from the expanded coefficients.
ExactRational q_poly_expanded(const ExactRational& alpha);

/// f(a) = P(a) - P(a+1)
///      = q(a) 2^(-4a-6) G(3a+5/2) G(5a+2) / (3 G(a+1) G(2a+3) G(5a+13/2)).
ExactRational f_term(HalfIntegerAlpha alpha);

struct SeriesState {
  HalfIntegerAlpha alpha;
  unsigned terms_used = 0;
  ExactRational partial_sum;
  ExactRational last_term;
  ExactRational tail_bound;
};

/// Ratio below which the geometric tail bound is applied.
inline const ExactRational kTailRatio{1, 2};
inline constexpr unsigned kMaxSeriesTerms = 10000;

/// Sums f(a + i), i = 0, 1, ... until the certified tail bound drops
/// below epsilon. The bound lastTerm * r/(1 - r) with r = 1/2 is used only
/// after the observed term ratio falls below r.
SeriesState separability_probability(HalfIntegerAlpha alpha, const ExactRational& epsilon);

}  // namespace hsdet
