#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsdet/big_real.hpp"
#include "hsdet/moments.hpp"

namespace hsdet {

/// Degrees up to this bound get exact rational coefficients; above it the
/// coefficients are computed in BigReal at a precision raised with the degree.
inline constexpr unsigned kExactDegreeLimit = 600;

/// f_N(x) = sum_j lambda_j P_j(u(x)),  u(x) = (2x - a - b)/(b - a),
/// lambda_j = (2j+1)/(b-a) * E[P_j(u(X))].
struct LegendreExpansion {
  Interval support;
  std::vector<ExactRational> coefficients;  ///< exact path
  std::vector<BigReal> approx_coefficients;  ///< float path (degree > kExactDegreeLimit)
  unsigned approx_digits = 0;

  bool is_exact() const { return !coefficients.empty(); }
  unsigned degree() const;
};

/// Builds the degree-N shifted-Legendre expansion from raw moments 0..N.
/// `digits` is the target precision of the float path.
LegendreExpansion legendre_coefficients(const MomentSequence& moments, unsigned degree, unsigned digits = 300);

/// E[P_j(u(X))] for j = 0..N, exactly (integer three-term recurrence).
std::vector<ExactRational> legendre_expectations(const MomentSequence& moments, unsigned degree);

/// Exact evaluations (for properties that hold in rational arithmetic).
ExactRational density_eval_exact(const LegendreExpansion& e, const ExactRational& x);
ExactRational cdf_eval_exact(const LegendreExpansion& e, const ExactRational& x);

/// Expansion plus the precision used to evaluate it.
class DensityEstimate {
 public:
  DensityEstimate(LegendreExpansion expansion, unsigned eval_digits);

  const LegendreExpansion& expansion() const { return expansion_; }
  unsigned eval_digits() const { return eval_digits_; }
  const Interval& support() const { return expansion_.support; }
  const std::vector<BigReal>& coefficients() const { return coefficients_; }

 private:
  LegendreExpansion expansion_;
  unsigned eval_digits_;
  std::vector<BigReal> coefficients_;  // lambda_j at eval_digits
};

BigReal density_eval(const DensityEstimate& d, const BigReal& x);
BigReal cdf_eval(const DensityEstimate& d, const BigReal& x);
BigReal y_intercept(const DensityEstimate& d);
BigReal median(const DensityEstimate& d);
BigReal separability_probability_from_density(const DensityEstimate& d);

struct NegativityReport {
  BigReal minimum;
  BigReal location;
  bool warn = false;  ///< degree >= 500 and minimum < -1e-2
};

/// Scans `grid` equispaced points of the support for the most negative value.
NegativityReport negativity_check(const DensityEstimate& d, unsigned grid);

struct InterceptRow {
  HalfIntegerAlpha alpha;
  std::optional<BigReal> intercept;
  std::string error;
};

/// Per-alpha y-intercept of the degree-N reconstruction. Failures are
/// recorded in the row instead of aborting the sweep.
std::vector<InterceptRow> intercept_sweep(MomentFamily family, const std::vector<HalfIntegerAlpha>& alphas,
                                          unsigned degree, unsigned digits, MomentCache* cache = nullptr);

/// CSV with header "alpha,intercept,error"; failed rows leave the
/// intercept empty and quote the message in the error column.
void write_intercepts_csv(std::ostream& os, const std::vector<InterceptRow>& rows, unsigned significant = 30);

}  // namespace hsdet
