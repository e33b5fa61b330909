#include "hsdet/exact_rational.hpp"

#include <cctype>
#include <ostream>

#include "hsdet/error.hpp"

namespace hsdet {

ExactRational::ExactRational(long numerator, long denominator)
    : ExactRational(mpz_class(numerator), mpz_class(denominator)) {}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("ExactRational: zero denominator");
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw FormatError("not a rational literal: '" + std::string(whole) + "'");
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(str, 10);
}

mpz_class power_of_ten(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw FormatError("not a rational literal: '" + std::string(text) + "'");
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return ExactRational(num, den);
  }

  // Decimal or scientific literal, converted exactly.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string exp_text(text.substr(e + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw FormatError("bad exponent in '" + std::string(text) + "'");
    }
    if (used != exp_text.size()) throw FormatError("bad exponent in '" + std::string(text) + "'");
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw FormatError("not a rational literal: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw FormatError("not a rational literal: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  if (shift >= 0) return ExactRational(mpz_class(num * power_of_ten(static_cast<unsigned long>(shift))));
  return ExactRational(num, power_of_ten(static_cast<unsigned long>(-shift)));
}

std::string ExactRational::str() const { return value_.get_str(10); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

ExactRational abs(const ExactRational& x) { return x.sign() < 0 ? -x : x; }

ExactRational pow(const ExactRational& x, long exponent) {
  if (exponent < 0) {
    if (x.is_zero()) throw DomainError("pow: zero to a negative power");
    return pow(ExactRational(1) / x, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  return ExactRational(std::move(out));
}

HalfIntegerAlpha::HalfIntegerAlpha(int two_alpha) : two_alpha_(two_alpha) {
  if (two_alpha < 1) throw DomainError("alpha must be a positive multiple of 1/2 (2*alpha >= 1)");
}

HalfIntegerAlpha HalfIntegerAlpha::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    throw DomainError("invalid alpha '" + std::string(text) + "': use decimal notation (0.5, 1, 1.5, ...)");
  }
  ExactRational value;
  try {
    value = ExactRational::parse(text);
  } catch (const FormatError&) {
    throw DomainError("invalid alpha '" + std::string(text) + "': expected a decimal half-integer such as 0.5, 1, 1.5");
  }
  const ExactRational doubled = value * ExactRational(2);
  if (!doubled.is_integer() || doubled.sign() <= 0 || !doubled.numerator().fits_sint_p()) {
    throw DomainError("invalid alpha '" + std::string(text) + "': 2*alpha must be a positive integer");
  }
  return HalfIntegerAlpha(static_cast<int>(doubled.numerator().get_si()));
}

std::string HalfIntegerAlpha::str() const {
  std::string whole = std::to_string(two_alpha_ / 2);
  return two_alpha_ % 2 == 0 ? whole : whole + ".5";
}

}  // namespace hsdet
