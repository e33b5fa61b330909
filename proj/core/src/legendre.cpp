#include "hsdet/legendre.hpp"

#include <algorithm>
#include <ostream>

#include "hsdet/error.hpp"
#include "hsdet/moment_cache.hpp"

namespace hsdet {

unsigned LegendreExpansion::degree() const {
  const std::size_t n = is_exact() ? coefficients.size() : approx_coefficients.size();
  return n == 0 ? 0 : static_cast<unsigned>(n - 1);
}

namespace {

const Interval kCanonical{ExactRational(-1), ExactRational(1)};

MomentSequence truncated(const MomentSequence& moments, unsigned degree) {
  if (moments.values.size() < static_cast<std::size_t>(degree) + 1) {
    throw DomainError("legendre_coefficients: degree " + std::to_string(degree) + " needs " +
                      std::to_string(degree + 1) + " moments, only " + std::to_string(moments.values.size()) +
                      " available");
  }
  MomentSequence out = moments;
  out.values.resize(degree + 1);
  return out;
}

// Coefficients of the degree-N expansion in u, computed with rows
// E[u^k P_j(u)] updated by the Legendre three-term recurrence.
std::vector<BigReal> approx_expectations(const MomentSequence& moments, unsigned degree) {
  const std::vector<ExactRational> nu_exact = affine_transform_moments(moments, kCanonical).values;
  std::vector<BigReal> prev, cur;
  cur.reserve(degree + 1);
  for (const auto& v : nu_exact) cur.push_back(to_big_real(v));
  std::vector<BigReal> out;
  out.reserve(degree + 1);
  out.push_back(cur[0]);
  if (degree == 0) return out;
  prev = cur;
  cur.assign(prev.begin() + 1, prev.end());
  out.push_back(cur[0]);
  for (unsigned j = 1; j < degree; ++j) {
    std::vector<BigReal> next(degree - j);
    for (unsigned k = 0; k + j < degree; ++k) {
      next[k] = ((2 * j + 1) * cur[k + 1] - j * prev[k]) / (j + 1);
    }
    prev = std::move(cur);
    cur = std::move(next);
    out.push_back(cur[0]);
  }
  return out;
}

// sum_j c_j P_j(u) by the forward three-term recurrence (stable on [-1, 1]).
template <class T>
T legendre_series(const std::vector<T>& c, const T& u) {
  if (c.empty()) return T(0);
  T p_prev(1);
  T p_cur = u;
  T sum = c[0];
  if (c.size() > 1) sum += c[1] * u;
  for (std::size_t j = 1; j + 1 < c.size(); ++j) {
    const long jj = static_cast<long>(j);
    T p_next = ((2 * jj + 1) * u * p_cur - jj * p_prev) / (jj + 1);
    sum += c[j + 1] * p_next;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
  }
  return sum;
}

// Integral of sum_j c_j P_j from -1 to u:
//   c_0 (u + 1) + sum_{j>=1} c_j (P_{j+1}(u) - P_{j-1}(u)) / (2j + 1).
template <class T>
T legendre_series_integral(const std::vector<T>& c, const T& u) {
  if (c.empty()) return T(0);
  T total = c[0] * (u + T(1));
  T p_prev(1);   // P_{j-1}
  T p_cur = u;   // P_j
  for (std::size_t j = 1; j < c.size(); ++j) {
    const long jj = static_cast<long>(j);
    T p_next = ((2 * jj + 1) * u * p_cur - jj * p_prev) / (jj + 1);
    total += c[j] * (p_next - p_prev) / (2 * jj + 1);
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
  }
  return total;
}

void require_inside(const Interval& support, const ExactRational& x, const char* what) {
  if (!support.contains(x)) {
    throw DomainError(std::string(what) + ": x = " + x.str() + " outside support [" + support.lower.str() + ", " +
                      support.upper.str() + "]");
  }
}

}  // namespace

std::vector<ExactRational> legendre_expectations(const MomentSequence& moments, unsigned degree) {
  const MomentSequence trimmed = truncated(moments, degree);
  const std::vector<ExactRational> nu = affine_transform_moments(trimmed, kCanonical).values;

  // Scaled rows S_j[k] = j! * D * E[u^k P_j(u)] are integers, with D the
  // common denominator of the moments of u, and satisfy
  //   S_{j+1}[k] = (2j+1) S_j[k+1] - j^2 S_{j-1}[k].
  mpz_class common = 1;
  for (const auto& v : nu) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.raw().get_den_mpz_t());

  std::vector<mpz_class> prev, cur(nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) cur[k] = nu[k].numerator() * (common / nu[k].denominator());

  std::vector<ExactRational> out;
  out.reserve(degree + 1);
  mpz_class j_factorial = 1;
  out.emplace_back(cur[0], common);
  if (degree == 0) return out;
  prev = cur;
  cur.assign(prev.begin() + 1, prev.end());
  out.emplace_back(cur[0], common);
  for (unsigned j = 1; j < degree; ++j) {
    std::vector<mpz_class> next(degree - j);
    const unsigned long jsq = static_cast<unsigned long>(j) * j;
    for (unsigned k = 0; k + j < degree; ++k) {
      next[k] = cur[k + 1] * (2 * j + 1);
      next[k] -= prev[k] * jsq;
    }
    prev = std::move(cur);
    cur = std::move(next);
    j_factorial *= (j + 1);
    out.emplace_back(cur[0], mpz_class(j_factorial * common));
  }
  return out;
}

LegendreExpansion legendre_coefficients(const MomentSequence& moments, unsigned degree, unsigned digits) {
  const Interval& support = moments.support;
  if (!(support.lower < support.upper)) throw DomainError("legendre_coefficients: empty support");
  LegendreExpansion e;
  e.support = support;
  const ExactRational width = support.width();

  if (degree <= kExactDegreeLimit) {
    const std::vector<ExactRational> expectations = legendre_expectations(moments, degree);
    e.coefficients.reserve(expectations.size());
    for (std::size_t j = 0; j < expectations.size(); ++j) {
      e.coefficients.push_back(ExactRational(2 * static_cast<long>(j) + 1) / width * expectations[j]);
    }
    return e;
  }

  // The recurrence cancels roughly one decimal digit per degree.
  e.approx_digits = digits + degree + 50;
  ScopedDigits guard(e.approx_digits);
  const std::vector<BigReal> expectations = approx_expectations(truncated(moments, degree), degree);
  const BigReal inv_width = to_big_real(ExactRational(1) / width);
  e.approx_coefficients.reserve(expectations.size());
  for (std::size_t j = 0; j < expectations.size(); ++j) {
    e.approx_coefficients.push_back(BigReal(2 * j + 1) * inv_width * expectations[j]);
  }
  return e;
}

ExactRational density_eval_exact(const LegendreExpansion& e, const ExactRational& x) {
  if (!e.is_exact()) throw DomainError("density_eval_exact: expansion has no exact coefficients");
  require_inside(e.support, x, "density_eval_exact");
  const ExactRational u = (2 * x - e.support.lower - e.support.upper) / e.support.width();
  return legendre_series(e.coefficients, u);
}

ExactRational cdf_eval_exact(const LegendreExpansion& e, const ExactRational& x) {
  if (!e.is_exact()) throw DomainError("cdf_eval_exact: expansion has no exact coefficients");
  require_inside(e.support, x, "cdf_eval_exact");
  const ExactRational u = (2 * x - e.support.lower - e.support.upper) / e.support.width();
  return e.support.width() / 2 * legendre_series_integral(e.coefficients, u);
}

DensityEstimate::DensityEstimate(LegendreExpansion expansion, unsigned eval_digits)
    : expansion_(std::move(expansion)), eval_digits_(eval_digits) {
  if (eval_digits_ < 10) throw DomainError("DensityEstimate: evaluation precision must be at least 10 digits");
  ScopedDigits guard(eval_digits_);
  if (expansion_.is_exact()) {
    coefficients_.reserve(expansion_.coefficients.size());
    for (const auto& c : expansion_.coefficients) coefficients_.push_back(to_big_real(c));
  } else {
    for (const auto& c : expansion_.approx_coefficients) {
      BigReal v;
      v.precision(eval_digits_);
      v = c;
      v.precision(eval_digits_);
      coefficients_.push_back(v);
    }
  }
}

namespace {

struct Mapped {
  BigReal u;
  bool at_lower;
  bool at_upper;
};

Mapped map_to_canonical(const DensityEstimate& d, const BigReal& x, const char* what) {
  const BigReal a = to_big_real(d.support().lower);
  const BigReal b = to_big_real(d.support().upper);
  if (x < a || x > b) {
    throw DomainError(std::string(what) + ": x = " + format_significant(x, 20) + " outside support [" +
                      d.support().lower.str() + ", " + d.support().upper.str() + "]");
  }
  return {BigReal((2 * x - a - b) / (b - a)), x == a, x == b};
}

}  // namespace

BigReal density_eval(const DensityEstimate& d, const BigReal& x) {
  ScopedDigits guard(d.eval_digits());
  const Mapped m = map_to_canonical(d, x, "density_eval");
  return legendre_series(d.coefficients(), m.u);
}

BigReal cdf_eval(const DensityEstimate& d, const BigReal& x) {
  ScopedDigits guard(d.eval_digits());
  const Mapped m = map_to_canonical(d, x, "cdf_eval");
  // The integral telescopes to exactly 0 and 1 at the endpoints.
  if (m.at_lower) return BigReal(0);
  if (m.at_upper) return BigReal(1);
  const BigReal half_width = to_big_real(d.support().width() / 2);
  return half_width * legendre_series_integral(d.coefficients(), m.u);
}

BigReal y_intercept(const DensityEstimate& d) {
  if (!d.support().contains(ExactRational(0))) throw DomainError("y_intercept: 0 is outside the support");
  ScopedDigits guard(d.eval_digits());
  return density_eval(d, BigReal(0));
}

BigReal median(const DensityEstimate& d) {
  ScopedDigits guard(d.eval_digits());
  BigReal lo = to_big_real(d.support().lower);
  BigReal hi = to_big_real(d.support().upper);
  const BigReal target = BigReal(1) / 2;
  if (!(cdf_eval(d, lo) < target && cdf_eval(d, hi) > target)) {
    throw NumericError("median: CDF does not bracket 1/2 on the support");
  }
  const BigReal tolerance = pow(BigReal(10), -static_cast<int>(d.eval_digits() / 2));
  for (int iter = 0; iter < 100000 && hi - lo > tolerance; ++iter) {
    BigReal mid = (lo + hi) / 2;
    if (cdf_eval(d, mid) < target) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return BigReal((lo + hi) / 2);
}

BigReal separability_probability_from_density(const DensityEstimate& d) {
  if (!d.support().contains(ExactRational(0))) {
    throw DomainError("separability_probability_from_density: 0 is outside the support");
  }
  ScopedDigits guard(d.eval_digits());
  return BigReal(cdf_eval(d, to_big_real(d.support().upper)) - cdf_eval(d, BigReal(0)));
}

NegativityReport negativity_check(const DensityEstimate& d, unsigned grid) {
  if (grid < 2) throw DomainError("negativity_check: grid needs at least 2 points");
  ScopedDigits guard(d.eval_digits());
  const BigReal a = to_big_real(d.support().lower);
  const BigReal b = to_big_real(d.support().upper);
  NegativityReport report{density_eval(d, a), a, false};
  for (unsigned i = 1; i < grid; ++i) {
    BigReal x = i + 1 == grid ? b : BigReal(a + (b - a) * i / (grid - 1));
    BigReal v = density_eval(d, x);
    if (v < report.minimum) {
      report.minimum = std::move(v);
      report.location = std::move(x);
    }
  }
  report.warn = d.expansion().degree() >= 500 && report.minimum < BigReal(-1) / 100;
  return report;
}

std::vector<InterceptRow> intercept_sweep(MomentFamily family, const std::vector<HalfIntegerAlpha>& alphas,
                                          unsigned degree, unsigned digits, MomentCache* cache) {
  std::vector<InterceptRow> rows;
  rows.reserve(alphas.size());
  for (const auto& alpha : alphas) {
    InterceptRow row{alpha, std::nullopt, {}};
    try {
      const MomentSequence moments = moment_table(family, alpha, degree, cache);
      const DensityEstimate density(legendre_coefficients(moments, degree, digits), digits);
      row.intercept = y_intercept(density);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_intercepts_csv(std::ostream& os, const std::vector<InterceptRow>& rows, unsigned significant) {
  os << "alpha,intercept,error\n";
  for (const auto& row : rows) {
    os << row.alpha.str() << ',';
    if (row.intercept) {
      os << format_significant(*row.intercept, significant) << ",\n";
    } else {
      std::string msg = row.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      os << ",\"" << msg << "\"\n";
    }
  }
}

}  // namespace hsdet
