// Acceptance runner: one PASS/FAIL line per criterion.
//   hsdet_acceptance [--criterion K] [--cache-dir DIR]

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsdet/legendre.hpp"
#include "hsdet/mc_oracle.hpp"
#include "hsdet/moment_cache.hpp"
#include "hsdet/moments.hpp"
#include "hsdet/rebit_density.hpp"
#include "hsdet/sep_series.hpp"
#include "oracles.hpp"

using namespace hsdet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Context {
  MomentCache* cache = nullptr;
};

constexpr unsigned kDigits = 300;
constexpr std::uint64_t kSamples = 1000000;
constexpr std::uint64_t kSeed = 20240601;

std::string sci(const BigReal& x, unsigned sig = 8) { return format_significant(x, sig); }
std::string sci(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(8);
  os << x;
  return os.str();
}

DensityEstimate reconstruct(const Context& ctx, MomentFamily family, HalfIntegerAlpha alpha, unsigned n,
                            unsigned digits = kDigits) {
  const MomentSequence seq = moment_table(family, alpha, n, ctx.cache);
  return DensityEstimate(legendre_coefficients(seq, n, digits), digits);
}

Outcome series_convergence(const Context&) {
  const ExactRational eps = pow(ExactRational(10), -30);
  const std::pair<int, ExactRational> cases[] = {
      {1, ExactRational(29, 64)}, {2, ExactRational(8, 33)}, {4, ExactRational(26, 323)}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& [t, exact] : cases) {
    const SeriesState s = separability_probability(HalfIntegerAlpha(t), eps);
    const ExactRational gap = abs(s.partial_sum - exact);
    ok = ok && gap < eps;
    d << "P(" << HalfIntegerAlpha(t).str() << "): " << s.terms_used << " terms, |gap| = " << format_decimal(gap, 3)
      << "; ";
  }
  return {ok, d.str()};
}

Outcome telescoping(const Context&) {
  const ExactRational f1 = f_term(HalfIntegerAlpha(2));
  const ExactRational want = ExactRational(8, 33) - ExactRational(26, 323);
  return {f1 == want && want == ExactRational(1726, 10659), "f(1) = " + f1.str()};
}

Outcome normalization(const Context&) {
  int checked = 0;
  for (int t = 1; t <= 70; ++t) {
    for (MomentFamily family : {MomentFamily::Balanced, MomentFamily::Unbalanced}) {
      if (family_moment(family, HalfIntegerAlpha(t), 0) != ExactRational(1)) {
        return {false, std::string(to_string(family)) + " at alpha " + HalfIntegerAlpha(t).str()};
      }
      ++checked;
    }
  }
  // The determinant family exists only for two-rebit states.
  if (rho_det_moment(0) != ExactRational(1)) return {false, "rhodet at alpha 0.5"};
  ++checked;
  return {true, std::to_string(checked) + " (family, alpha) pairs with values[0] = 1"};
}

Outcome unbalanced_cross_check(const Context&) {
  bool ok = true;
  std::ostringstream d;
  for (Field field : {Field::Complex, Field::Real}) {
    const HalfIntegerAlpha alpha = field_alpha(field);
    const MCEstimate est = estimate_moment(MomentFamily::Unbalanced, field, 1, kSamples, kSeed);
    const ExactRational exact = unbalanced_moment(alpha, 1);
    const double z = (est.mean - exact.raw().get_d()) / est.standard_error;
    ok = ok && std::abs(z) < 3;
    d << "alpha " << alpha.str() << ": exact " << exact.str() << ", MC " << sci(est.mean) << " +- "
      << sci(est.standard_error) << " (z = " << sci(z) << "); ";
  }
  return {ok, d.str()};
}

Outcome empirical_separability(const Context&) {
  const MCEstimate est = separability_fraction(Field::Complex, kSamples, kSeed);
  const double z = (est.mean - 8.0 / 33.0) / est.standard_error;
  return {std::abs(z) < 3, "fraction " + sci(est.mean) + " +- " + sci(est.standard_error) + " vs 8/33 (z = " +
                               sci(z) + ")"};
}

Outcome moment_reproduction(const Context& ctx) {
  int checked = 0;
  auto check = [&](const MomentSequence& seq, const std::string& label) -> std::optional<std::string> {
    for (unsigned n : {1u, 10u, 25u, 50u}) {
      const LegendreExpansion e = legendre_coefficients(seq, n);
      for (unsigned k = 0; k <= n; ++k) {
        if (oracle::expansion_raw_moment(e.coefficients, seq.support, k) != seq.values[k]) {
          return label + " N=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        ++checked;
      }
    }
    return std::nullopt;
  };
  for (int t : {1, 2, 4, 11}) {
    for (MomentFamily family : {MomentFamily::Balanced, MomentFamily::Unbalanced}) {
      const auto bad = check(moment_table(family, HalfIntegerAlpha(t), 50, ctx.cache),
                             std::string(to_string(family)) + " alpha " + HalfIntegerAlpha(t).str());
      if (bad) return {false, "mismatch at " + *bad};
    }
  }
  if (auto bad = check(moment_table(MomentFamily::RhoDet, HalfIntegerAlpha(1), 50, ctx.cache), "rhodet")) {
    return {false, "mismatch at " + *bad};
  }
  return {true, std::to_string(checked) + " raw moments reproduced exactly"};
}

Outcome median_reproduction(const Context& ctx) {
  struct Case {
    int two_alpha;
    const char* target;
    const char* tol;
  };
  bool ok = true;
  std::ostringstream d;
  for (const Case& c : {Case{2, "-0.00691863", "1e-5"}, Case{1, "-0.00562687", "1e-5"}, Case{4, "-0.0121435", "1e-4"}}) {
    const DensityEstimate density = reconstruct(ctx, MomentFamily::Unbalanced, HalfIntegerAlpha(c.two_alpha), 500);
    ScopedDigits guard(kDigits);
    const BigReal m = median(density);
    const BigReal target(c.target);
    const bool hit = abs(m - target) <= BigReal(c.tol);
    ok = ok && hit;
    d << "alpha " << HalfIntegerAlpha(c.two_alpha).str() << ": median " << sci(m, 10) << " vs " << c.target
      << " (cdf at that point " << sci(cdf_eval(density, target), 4) << "); ";
  }
  return {ok, d.str()};
}

Outcome density_vs_closed_form(const Context& ctx) {
  constexpr unsigned digits = 60;
  const MomentSequence seq =
      affine_transform_moments(moment_table(MomentFamily::RhoDet, HalfIntegerAlpha(1), 50, ctx.cache), rebit_support());
  const DensityEstimate density(legendre_coefficients(seq, 50, digits), digits);
  ScopedDigits guard(digits);
  const BigReal a = to_big_real(seq.support.lower);
  const BigReal w = to_big_real(seq.support.width());
  BigReal worst = 0, worst_at = 0;
  for (int i = 1; i <= 20; ++i) {
    const BigReal y = a + w * i / 21;
    const BigReal diff = abs(density_eval(density, y) - rebit_density(y, digits));
    if (diff > worst) {
      worst = diff;
      worst_at = y;
    }
  }
  const bool grid_ok = worst <= BigReal("1e-4");

  BigReal worst_rel = 0;
  for (unsigned k = 0; k <= 6; ++k) {
    const BigReal got = rebit_density_moment(k, 50);
    ScopedDigits inner(50);
    const BigReal want = to_big_real(seq.values[k]);
    worst_rel = max(worst_rel, BigReal(abs(got - want) / abs(want)));
  }
  const bool moments_ok = worst_rel <= BigReal("1e-8");
  return {grid_ok && moments_ok, "grid max |f_50 - f| = " + sci(worst, 4) + " at y = " + sci(worst_at, 6) +
                                     (grid_ok ? " (ok)" : " (exceeds 1e-4)") + "; quadrature moments k<=6 max rel err " +
                                     sci(worst_rel, 3) + (moments_ok ? " (ok)" : " (exceeds 1e-8)")};
}

Outcome separability_from_density(const Context& ctx) {
  bool ok = true;
  std::ostringstream d;
  for (int t : {1, 2, 4}) {
    const DensityEstimate density = reconstruct(ctx, MomentFamily::Unbalanced, HalfIntegerAlpha(t), 500);
    const ExactRational series = separability_probability(HalfIntegerAlpha(t), pow(ExactRational(10), -30)).partial_sum;
    ScopedDigits guard(kDigits);
    const BigReal p = separability_probability_from_density(density);
    const BigReal gap = abs(p - to_big_real(series));
    ok = ok && gap <= BigReal("5e-3");
    d << "alpha " << HalfIntegerAlpha(t).str() << ": " << sci(p, 8) << " vs " << format_decimal(series, 8) << "; ";
  }
  return {ok, d.str()};
}

Outcome intercept_stability(const Context& ctx) {
  bool ok = true;
  std::ostringstream d;
  for (int t : {1, 2, 4}) {
    const auto r500 = intercept_sweep(MomentFamily::Unbalanced, {HalfIntegerAlpha(t)}, 500, kDigits, ctx.cache);
    const auto r600 = intercept_sweep(MomentFamily::Unbalanced, {HalfIntegerAlpha(t)}, 600, kDigits, ctx.cache);
    if (!r500[0].intercept || !r600[0].intercept) {
      return {false, "alpha " + HalfIntegerAlpha(t).str() + ": " + r500[0].error + r600[0].error};
    }
    ScopedDigits guard(kDigits);
    const BigReal& y500 = *r500[0].intercept;
    const BigReal& y600 = *r600[0].intercept;
    // Three significant digits: relative change below half a unit in the third digit.
    const BigReal rel = abs(y600 - y500) / abs(y600);
    const bool stable = isfinite(y500) && y500 > 0 && rel < BigReal("5e-3");
    ok = ok && stable;
    d << "alpha " << HalfIntegerAlpha(t).str() << ": " << sci(y500, 6) << " -> " << sci(y600, 6) << " (rel "
      << sci(rel, 2) << "); ";
  }
  std::vector<HalfIntegerAlpha> alphas;
  for (int t = 1; t <= 70; ++t) alphas.emplace_back(t);
  const auto rows = intercept_sweep(MomentFamily::Unbalanced, alphas, 100, 100, ctx.cache);
  int finite = 0;
  for (const auto& row : rows) {
    ScopedDigits guard(100);
    if (row.intercept && isfinite(*row.intercept)) ++finite;
  }
  ok = ok && rows.size() == 70 && finite == 70;
  d << "N=100 sweep: " << finite << "/70 finite intercepts";
  return {ok, d.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(const Context&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "exact series convergence", series_convergence},
      {2, "telescoping identity", telescoping},
      {3, "moment normalization", normalization},
      {4, "unbalanced n=1 Monte Carlo cross-check", unbalanced_cross_check},
      {5, "empirical separability fraction", empirical_separability},
      {6, "moment reproduction by the Legendre expansion", moment_reproduction},
      {7, "median reproduction from 500 moments", median_reproduction},
      {8, "N=50 rebit reconstruction vs closed form", density_vs_closed_form},
      {9, "separability probability from the reconstructed density", separability_from_density},
      {10, "intercept stability N=500 vs N=600 and 70-alpha sweep", intercept_stability},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  int only = 0;
  std::string cache_dir;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--cache-dir", cache_dir, "Moment cache shared between criteria");
  CLI11_PARSE(app, argc, argv);

  std::optional<MomentCache> cache;
  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir);
    cache.emplace(cache_dir);
  }
  const Context ctx{cache ? &*cache : nullptr};

  int failures = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run(ctx);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | "
              << outcome.detail << " [" << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
    std::cout.unsetf(std::ios::fixed);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
