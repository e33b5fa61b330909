#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "hsdet/exact_rational.hpp"

namespace hsdet {

enum class MomentFamily {
  Balanced,    ///< <(|rho| |rho^PT|)^n>
  Unbalanced,  ///< <|rho^PT|^n>
  RhoDet,      ///< <|rho|^k>, two-rebit case only
};

std::string_view to_string(MomentFamily family);
MomentFamily parse_family(std::string_view text);

/// Natural support of the family's random variable.
Interval family_support(MomentFamily family);

/// Throws DomainError when the family is not defined at alpha.
void require_family_alpha(MomentFamily family, HalfIntegerAlpha alpha);

struct MomentSequence {
  MomentFamily family;
  HalfIntegerAlpha alpha;
  Interval support;
  std::vector<ExactRational> values;  ///< values[n] = <X^n>, n = 0..N
  std::chrono::system_clock::time_point generated_at;

  std::size_t max_order() const { return values.empty() ? 0 : values.size() - 1; }
};

struct HypergeometricSpec;

/// The 4F3 of the balanced formula at order n >= 1.
HypergeometricSpec balanced_pfq_spec(HalfIntegerAlpha alpha, unsigned n);
/// The 5F4 of the unbalanced formula at order n >= 2.
HypergeometricSpec unbalanced_pfq_spec(HalfIntegerAlpha alpha, unsigned n);

ExactRational balanced_moment(HalfIntegerAlpha alpha, unsigned n);
ExactRational unbalanced_moment(HalfIntegerAlpha alpha, unsigned n);
ExactRational rho_det_moment(unsigned k);

/// Dispatches to the family's formula.
ExactRational family_moment(MomentFamily family, HalfIntegerAlpha alpha, unsigned n);

/// Moments of Y = a' + (b'-a')(X-a)/(b-a), by exact binomial expansion.
MomentSequence affine_transform_moments(const MomentSequence& moments, const Interval& new_support);

class MomentCache;

/// values[0..n_max] of the family at alpha. When a cache is given, stored
/// prefixes are reused and the table is extended on a miss.
MomentSequence moment_table(MomentFamily family, HalfIntegerAlpha alpha, unsigned n_max,
                            MomentCache* cache = nullptr);

}  // namespace hsdet
