#include "hsdet/big_real.hpp"

#include <ios>

namespace hsdet {

ScopedDigits::ScopedDigits(unsigned digits) : previous_(BigReal::default_precision()) {
  BigReal::default_precision(digits);
}

ScopedDigits::~ScopedDigits() { BigReal::default_precision(previous_); }

BigReal to_big_real(const ExactRational& x) {
  BigReal out;
  mpfr_set_q(out.backend().data(), x.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string format_significant(const BigReal& x, unsigned significant) {
  return x.str(static_cast<std::streamsize>(significant), std::ios_base::fmtflags(0));
}

std::string format_decimal(const ExactRational& x, unsigned significant) {
  ScopedDigits guard(significant + 20);
  return format_significant(to_big_real(x), significant);
}

}  // namespace hsdet
