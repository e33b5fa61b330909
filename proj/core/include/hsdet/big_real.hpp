#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "hsdet/exact_rational.hpp"

namespace hsdet {

/// Configurable-precision real. Values take the process default precision
/// at construction; use ScopedDigits around every computation.
using BigReal = boost::multiprecision::mpfr_float;

/// Sets the default BigReal precision (decimal digits) for the lifetime of
/// the guard and restores the previous value afterwards.
class ScopedDigits {
 public:
  explicit ScopedDigits(unsigned digits);
  ~ScopedDigits();
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned previous_;
};

/// Correctly rounded conversion at the current default precision.
BigReal to_big_real(const ExactRational& x);

/// Locale-independent rendering with `significant` significant digits.
std::string format_significant(const BigReal& x, unsigned significant);

/// Convenience: exact rational rendered as a decimal with `significant`
/// digits, evaluated at a working precision a little above that.
std::string format_decimal(const ExactRational& x, unsigned significant);

}  // namespace hsdet
