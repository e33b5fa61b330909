#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hsdet {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Serialized as "p/q" (or "p" when q == 1).
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(long numerator, long denominator);
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit ExactRational(const mpz_class& integer) : value_(integer) {}
  explicit ExactRational(mpq_class value);

  /// Parses "p/q", "p", or a decimal/scientific literal such as "1e-30" or
  /// "-0.125" (decimal literals are converted exactly).
  static ExactRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string str() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r);

 private:
  mpq_class value_{0};
};

ExactRational abs(const ExactRational& x);

/// x^e for any integer e (negative exponents require x != 0).
ExactRational pow(const ExactRational& x, long exponent);

/// Closed interval [lower, upper] with lower < upper.
struct Interval {
  ExactRational lower;
  ExactRational upper;

  ExactRational width() const { return upper - lower; }
  bool contains(const ExactRational& x) const { return lower <= x && x <= upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The Dyson-index-like parameter, stored as the integer 2*alpha.
class HalfIntegerAlpha {
 public:
  explicit HalfIntegerAlpha(int two_alpha);

  /// Accepts "0.5", "1", "1.5", "35" ... ; anything that is not a positive
  /// multiple of 1/2 is rejected.
  static HalfIntegerAlpha parse(std::string_view text);

  int two_alpha() const { return two_alpha_; }
  ExactRational value() const { return ExactRational(two_alpha_, 2); }
  HalfIntegerAlpha shifted(int whole_steps) const { return HalfIntegerAlpha(two_alpha_ + 2 * whole_steps); }

  /// Decimal rendering: "0.5", "1", "17.5".
  std::string str() const;

  friend auto operator<=>(const HalfIntegerAlpha&, const HalfIntegerAlpha&) = default;

 private:
  int two_alpha_;
};

}  // namespace hsdet
