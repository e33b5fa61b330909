#include "hsdet/hypergeometric.hpp"

#include <limits>
#include <optional>

#include "hsdet/error.hpp"

namespace hsdet {

namespace {

// -p for a non-positive integer p, nothing otherwise.
std::optional<unsigned long> nonpositive_integer_magnitude(const ExactRational& p) {
  if (!p.is_integer() || p.sign() > 0) return std::nullopt;
  const mpz_class m = -p.numerator();
  if (!m.fits_ulong_p()) throw DomainError("hypergeometric parameter too large: " + p.str());
  return m.get_ui();
}

}  // namespace

unsigned HypergeometricSpec::termination_index() const {
  std::optional<unsigned long> t;
  for (const auto& u : upper) {
    if (auto m = nonpositive_integer_magnitude(u)) t = t ? std::min(*t, *m) : *m;
  }
  if (!t) throw DomainError("hypergeometric series does not terminate (no non-positive integer upper parameter)");
  // (l)_k first vanishes at k = -l + 1; terms 0..t need k <= t.
  for (const auto& l : lower) {
    if (auto m = nonpositive_integer_magnitude(l); m && *m < *t) {
      throw DomainError("lower parameter " + l.str() + " vanishes before the series terminates at index " +
                        std::to_string(*t));
    }
  }
  if (*t > std::numeric_limits<unsigned>::max()) throw DomainError("termination index out of range");
  return static_cast<unsigned>(*t);
}

ExactRational eval_terminating_pfq(const HypergeometricSpec& spec) {
  const unsigned t = spec.termination_index();
  ExactRational sum(1);
  ExactRational term(1);
  for (unsigned k = 0; k < t; ++k) {
    ExactRational num(1);
    ExactRational den(static_cast<long>(k) + 1);
    const ExactRational shift(static_cast<long>(k));
    for (const auto& u : spec.upper) num *= u + shift;
    if (num.is_zero()) break;
    for (const auto& l : spec.lower) den *= l + shift;
    if (den.is_zero()) {
      throw DomainError("lower Pochhammer vanishes at term " + std::to_string(k + 1) + " with nonzero numerator");
    }
    term *= num / den;
    sum += term;
  }
  return sum;
}

}  // namespace hsdet
