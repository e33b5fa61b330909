#pragma once

#include <vector>

#include "hsdet/exact_rational.hpp"

namespace hsdet {

/// Terminating generalized hypergeometric series at argument 1.
struct HypergeometricSpec {
  std::vector<ExactRational> upper;
  std::vector<ExactRational> lower;

  /// Index of the last nonzero term: min{-u : u upper, u a non-positive integer}.
  /// Throws DomainError if no upper parameter terminates the series, or if
  /// a lower Pochhammer vanishes at or before that index.
  unsigned termination_index() const;
};

/// Sum over k = 0..t of prod (upper)_k / (prod (lower)_k k!).
ExactRational eval_terminating_pfq(const HypergeometricSpec& spec);

}  // namespace hsdet
