#include "hsdet/moments.hpp"

#include "hsdet/error.hpp"
#include "hsdet/hypergeometric.hpp"
#include "hsdet/moment_cache.hpp"
#include "hsdet/special.hpp"

namespace hsdet {

std::string_view to_string(MomentFamily family) {
  switch (family) {
    case MomentFamily::Balanced: return "balanced";
    case MomentFamily::Unbalanced: return "unbalanced";
    case MomentFamily::RhoDet: return "rhodet";
  }
  return "unknown";
}

MomentFamily parse_family(std::string_view text) {
  if (text == "balanced") return MomentFamily::Balanced;
  if (text == "unbalanced") return MomentFamily::Unbalanced;
  if (text == "rhodet" || text == "rho-det") return MomentFamily::RhoDet;
  throw DomainError("unknown moment family '" + std::string(text) + "' (balanced|unbalanced|rhodet)");
}

Interval family_support(MomentFamily family) {
  switch (family) {
    // [-2^-12 3^-3, 2^-16]
    case MomentFamily::Balanced: return {ExactRational(-1, 4096 * 27), ExactRational(1, 65536)};
    // [-2^-4, 2^-8]
    case MomentFamily::Unbalanced: return {ExactRational(-1, 16), ExactRational(1, 256)};
    case MomentFamily::RhoDet: return {ExactRational(0), ExactRational(1, 256)};
  }
  throw DomainError("unknown moment family");
}

void require_family_alpha(MomentFamily family, HalfIntegerAlpha alpha) {
  if (family == MomentFamily::RhoDet && alpha.two_alpha() != 1) {
    throw DomainError("family rhodet is defined only for alpha = 1/2 (got alpha = " + alpha.str() + ")");
  }
}

namespace {

ExactRational two_pow(long e) { return pow(ExactRational(2), e); }

ExactRational half(long twice) { return ExactRational(twice, 2); }

}  // namespace

HypergeometricSpec balanced_pfq_spec(HalfIntegerAlpha alpha, unsigned n) {
  const long nn = n;
  const ExactRational a = alpha.value();
  HypergeometricSpec spec;
  spec.upper = {ExactRational(-nn), a, a + ExactRational(1, 2), ExactRational(-4 * nn - 1) - 5 * a};
  spec.lower = {ExactRational(-2 * nn) - a, ExactRational(-2 * nn) - 2 * a, ExactRational(1, 2) - ExactRational(nn)};
  return spec;
}

HypergeometricSpec unbalanced_pfq_spec(HalfIntegerAlpha alpha, unsigned n) {
  const long nn = n;
  const ExactRational a = alpha.value();
  HypergeometricSpec spec;
  spec.upper = {ExactRational(-(nn - 2), 2), ExactRational(-(nn - 1), 2), ExactRational(-nn), a + 1, 2 * a + 1};
  spec.lower = {ExactRational(1 - nn), ExactRational(nn + 2) + 5 * a, ExactRational(1 - nn) - a,
                ExactRational(1, 2) - ExactRational(nn) - a};
  return spec;
}

ExactRational balanced_moment(HalfIntegerAlpha alpha, unsigned n) {
  if (n == 0) return ExactRational(1);
  const long t = alpha.two_alpha();  // alpha = t/2
  const long nn = n;
  const ExactRational a = alpha.value();

  ExactRational prefactor(factorial(2 * n));
  prefactor *= pochhammer(1 + a, 2 * n);
  prefactor *= pochhammer(1 + 2 * a, 2 * n);
  prefactor /= two_pow(12 * nn);
  prefactor /= pochhammer(half(3 * t + 3), 2 * n);   // 3a + 3/2
  prefactor /= pochhammer(half(6 * t + 5), 4 * n);   // 6a + 5/2

  return prefactor * eval_terminating_pfq(balanced_pfq_spec(alpha, n));
}

ExactRational unbalanced_moment(HalfIntegerAlpha alpha, unsigned n) {
  // The closed form yields 2 at n = 0 (both terms reduce to 1); the zeroth
  // moment of a probability distribution is 1.
  if (n == 0) return ExactRational(1);
  const long t = alpha.two_alpha();
  const long nn = n;
  const ExactRational a = alpha.value();

  const ExactRational common = pochhammer(half(3 * t + 3), n) * pochhammer(half(6 * t + 5), 2 * n);

  ExactRational first(factorial(n));
  first *= pochhammer(a + 1, n);
  first *= pochhammer(2 * a + 1, n);
  first /= two_pow(6 * nn) * common;

  ExactRational second = pochhammer(ExactRational(-2 * nn - 1) - 5 * a, n);
  second *= pochhammer(a, n);
  second *= pochhammer(a + ExactRational(1, 2), n);
  second /= two_pow(4 * nn) * common;

  // The 1-n lower parameter makes the 5F4 meaningless at n = 1; it is 1 there.
  if (n >= 2) {
    second *= eval_terminating_pfq(unbalanced_pfq_spec(alpha, n));
  }
  return first + second;
}

ExactRational rho_det_moment(unsigned k) {
  // 945 * 4^(3-2k) * Gamma(2k+2) Gamma(2k+4) / Gamma(4k+10)
  ExactRational value(945);
  value *= pow(ExactRational(4), 3 - 2 * static_cast<long>(k));
  value *= ExactRational(factorial(2 * k + 1));
  value *= ExactRational(factorial(2 * k + 3));
  value /= ExactRational(factorial(4 * k + 9));
  return value;
}

ExactRational family_moment(MomentFamily family, HalfIntegerAlpha alpha, unsigned n) {
  switch (family) {
    case MomentFamily::Balanced: return balanced_moment(alpha, n);
    case MomentFamily::Unbalanced: return unbalanced_moment(alpha, n);
    case MomentFamily::RhoDet:
      require_family_alpha(family, alpha);
      return rho_det_moment(n);
  }
  throw DomainError("unknown moment family");
}

MomentSequence affine_transform_moments(const MomentSequence& moments, const Interval& new_support) {
  const Interval& from = moments.support;
  if (!(from.lower < from.upper) || !(new_support.lower < new_support.upper)) {
    throw DomainError("affine_transform_moments: intervals must satisfy a < b");
  }
  const ExactRational scale = new_support.width() / from.width();
  const ExactRational offset = new_support.lower - scale * from.lower;

  // scaled[m] = s^m <X^m>; offset powers c^(n-m) come from a running table.
  const std::size_t count = moments.values.size();
  std::vector<ExactRational> scaled(count);
  std::vector<ExactRational> offset_pow(count);
  ExactRational s_pow(1), c_pow(1);
  for (std::size_t m = 0; m < count; ++m) {
    scaled[m] = s_pow * moments.values[m];
    offset_pow[m] = c_pow;
    s_pow *= scale;
    c_pow *= offset;
  }

  MomentSequence out{moments.family, moments.alpha, new_support, {}, std::chrono::system_clock::now()};
  out.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    ExactRational total(0);
    for (std::size_t m = 0; m <= n; ++m) {
      if (offset_pow[n - m].is_zero() && n != m) continue;
      total += ExactRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(m))) * offset_pow[n - m] *
               scaled[m];
    }
    out.values.push_back(std::move(total));
  }
  return out;
}

MomentSequence moment_table(MomentFamily family, HalfIntegerAlpha alpha, unsigned n_max, MomentCache* cache) {
  require_family_alpha(family, alpha);
  MomentSequence seq{family, alpha, family_support(family), {}, std::chrono::system_clock::now()};
  if (cache) {
    if (auto stored = cache->load(family, alpha)) {
      seq.values = std::move(stored->values);
      seq.generated_at = stored->generated_at;
      if (seq.values.size() > n_max + 1) seq.values.resize(n_max + 1);
    }
  }
  const std::size_t have = seq.values.size();
  if (have >= n_max + 1) return seq;

  seq.values.reserve(n_max + 1);
  for (unsigned n = static_cast<unsigned>(have); n <= n_max; ++n) seq.values.push_back(family_moment(family, alpha, n));
  seq.generated_at = std::chrono::system_clock::now();
  if (cache) cache->store(seq);
  return seq;
}

}  // namespace hsdet
