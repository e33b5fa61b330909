#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>

#include <CLI11.hpp>

#include "hsdet/error.hpp"
#include "hsdet/legendre.hpp"
#include "hsdet/mc_oracle.hpp"
#include "hsdet/moment_cache.hpp"
#include "hsdet/moments.hpp"
#include "hsdet/rebit_density.hpp"
#include "hsdet/sep_series.hpp"

namespace hsdet::cli {

namespace fs = std::filesystem;

namespace {

constexpr unsigned kCsvDigits = 30;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

Interval parse_interval(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw DomainError("expected an interval 'a,b', got '" + text + "'");
  Interval iv{ExactRational::parse(parts[0]), ExactRational::parse(parts[1])};
  if (!(iv.lower < iv.upper)) throw DomainError("interval '" + text + "' must satisfy a < b");
  return iv;
}

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return "hsdet-cache";
}

// CSV destination: the --out file or the caller's stream. The stream is
// imbued with the classic locale so '.' is always the decimal separator.
class Sink {
 public:
  Sink(const std::optional<fs::path>& path, std::ostream& fallback) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw FormatError("cannot open output file " + path->string());
      file_.imbue(std::locale::classic());
      os_ = &file_;
    } else {
      os_ = &fallback;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

MomentSequence load_moments(MomentFamily family, HalfIntegerAlpha alpha, unsigned n, const RunConfig& cfg) {
  if (!cfg.use_cache) return moment_table(family, alpha, n);
  std::error_code ec;
  fs::create_directories(cfg.cache_dir, ec);
  if (ec || !fs::is_directory(cfg.cache_dir)) {
    throw FormatError("cache directory " + cfg.cache_dir.string() + " is missing and could not be created");
  }
  MomentCache cache(cfg.cache_dir);
  return moment_table(family, alpha, n, &cache);
}

void check_config(const RunConfig& cfg) {
  if (cfg.digits < 30) throw DomainError("--digits must be at least 30");
  if (cfg.n_moments < 1) throw DomainError("--n-moments must be at least 1");
}

}  // namespace

std::vector<HalfIntegerAlpha> parse_alpha_list(const std::string& text) {
  std::vector<HalfIntegerAlpha> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("alpha range must be start:stop:step, got '" + text + "'");
    const HalfIntegerAlpha start = HalfIntegerAlpha::parse(parts[0]);
    const HalfIntegerAlpha stop = HalfIntegerAlpha::parse(parts[1]);
    const HalfIntegerAlpha step = HalfIntegerAlpha::parse(parts[2]);
    for (int t = start.two_alpha(); t <= stop.two_alpha(); t += step.two_alpha()) out.emplace_back(t);
    return out;
  }
  for (const auto& p : split(text, ',')) {
    if (!p.empty()) out.push_back(HalfIntegerAlpha::parse(p));
  }
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Schmidt determinantal moments, density reconstruction and separability probabilities",
               "hsdet"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string cache_flag;
  std::string out_flag;
  app.add_option("--cache-dir", cache_flag, std::string("Moment cache directory (env ") + kCacheDirEnv + ")");
  app.add_flag("!--no-cache", cfg.use_cache, "Do not read or write the moment cache");

  // moments
  std::string family_text, alpha_text, map_to;
  unsigned single_n = 0, upto = 0;
  auto* moments = app.add_subcommand("moments", "Print exact moments as CSV: n, moment, decimal");
  moments->add_option("--family", family_text, "balanced|unbalanced|rhodet")->required();
  moments->add_option("--alpha", alpha_text, "Dyson-index-like parameter (0.5, 1, 1.5, ...)")->required();
  auto* n_opt = moments->add_option("--n", single_n, "Single moment order");
  auto* upto_opt = moments->add_option("--upto", upto, "All orders 0..N")->excludes(n_opt);
  moments->add_option("--map-to", map_to, "Affinely map the support onto 'a,b' first");
  moments->add_option("--out", out_flag, "Output CSV path");

  // reconstruct
  unsigned grid = 1001;
  auto* reconstruct = app.add_subcommand("reconstruct", "Legendre reconstruction on a grid: x, density, cdf");
  reconstruct->add_option("--family", family_text)->required();
  reconstruct->add_option("--alpha", alpha_text)->required();
  reconstruct->add_option("--n-moments", cfg.n_moments);
  reconstruct->add_option("--grid", grid);
  reconstruct->add_option("--digits", cfg.digits);
  reconstruct->add_option("--map-to", map_to);
  reconstruct->add_option("--out", out_flag);

  // intercepts
  std::string alphas_text;
  auto* intercepts = app.add_subcommand("intercepts", "y-intercepts over an alpha sweep: alpha, intercept, error");
  intercepts->add_option("--family", family_text)->required();
  intercepts->add_option("--alphas", alphas_text, "start:stop:step or comma list")->required();
  intercepts->add_option("--n-moments", cfg.n_moments);
  intercepts->add_option("--digits", cfg.digits);
  intercepts->add_option("--out", out_flag);

  // median
  auto* median_cmd = app.add_subcommand("median", "Median of the reconstructed density");
  median_cmd->add_option("--family", family_text)->required();
  median_cmd->add_option("--alpha", alpha_text)->required();
  median_cmd->add_option("--n-moments", cfg.n_moments);
  median_cmd->add_option("--digits", cfg.digits);

  // sepprob
  std::string epsilon_text = "1e-30";
  auto* sepprob = app.add_subcommand("sepprob", "Separability probability by the exact series");
  sepprob->add_option("--alpha", alpha_text)->required();
  sepprob->add_option("--epsilon", epsilon_text, "Certified truncation bound");

  // rebit-density
  unsigned rebit_digits = 50;
  auto* rebit = app.add_subcommand("rebit-density", "Closed-form two-rebit density: y, f");
  rebit->add_option("--grid", grid);
  rebit->add_option("--digits", rebit_digits);
  rebit->add_option("--out", out_flag);

  // mc
  std::string field_text;
  unsigned mc_n = 1;
  std::uint64_t samples = 1000000, seed = 42;
  unsigned workers = 1;
  bool separable = false;
  auto* mc = app.add_subcommand("mc", "Monte Carlo check against the exact moments");
  mc->add_option("--family", family_text);
  mc->add_option("--field", field_text, "real|complex")->required();
  mc->add_option("--n", mc_n);
  mc->add_option("--samples", samples);
  mc->add_option("--seed", seed);
  mc->add_option("--workers", workers);
  mc->add_flag("--separable", separable, "Estimate the separable fraction instead of a moment");

  // cache
  std::string action;
  auto* cache_cmd = app.add_subcommand("cache", "Inspect the moment cache");
  cache_cmd->add_option("action", action, "list|clear|verify")->required()->check(CLI::IsMember({"list", "clear", "verify"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::ostringstream buffer;
  buffer.imbue(std::locale::classic());
  try {
    cfg.cache_dir = resolve_cache_dir(cache_flag);
    if (!out_flag.empty()) cfg.output_path = fs::path(out_flag);
    check_config(cfg);

    if (moments->parsed()) {
      const MomentFamily family = parse_family(family_text);
      const HalfIntegerAlpha alpha = HalfIntegerAlpha::parse(alpha_text);
      require_family_alpha(family, alpha);
      const unsigned last = upto_opt->count() ? upto : single_n;
      const unsigned first = upto_opt->count() ? 0 : single_n;
      (void)n_opt;
      MomentSequence seq = load_moments(family, alpha, last, cfg);
      if (!map_to.empty()) seq = affine_transform_moments(seq, parse_interval(map_to));
      Sink sink(cfg.output_path, out);
      *sink << "n,moment,decimal\n";
      for (unsigned n = first; n <= last; ++n) {
        *sink << n << ',' << seq.values[n].str() << ',' << format_decimal(seq.values[n], kCsvDigits) << '\n';
      }
    } else if (reconstruct->parsed()) {
      const MomentFamily family = parse_family(family_text);
      const HalfIntegerAlpha alpha = HalfIntegerAlpha::parse(alpha_text);
      if (grid < 2) throw DomainError("--grid must be at least 2");
      MomentSequence seq = load_moments(family, alpha, cfg.n_moments, cfg);
      if (!map_to.empty()) seq = affine_transform_moments(seq, parse_interval(map_to));
      const DensityEstimate density(legendre_coefficients(seq, cfg.n_moments, cfg.digits), cfg.digits);
      const NegativityReport neg = negativity_check(density, grid);
      if (neg.warn) {
        err << "warning: reconstructed density reaches " << format_significant(neg.minimum, 6) << " at x = "
            << format_significant(neg.location, 10) << '\n';
      }
      ScopedDigits guard(cfg.digits);
      const BigReal a = to_big_real(seq.support.lower);
      const BigReal b = to_big_real(seq.support.upper);
      Sink sink(cfg.output_path, out);
      *sink << "x,density,cdf\n";
      for (unsigned i = 0; i < grid; ++i) {
        const BigReal x = i + 1 == grid ? b : BigReal(a + (b - a) * i / (grid - 1));
        *sink << format_significant(x, kCsvDigits) << ',' << format_significant(density_eval(density, x), kCsvDigits)
              << ',' << format_significant(cdf_eval(density, x), kCsvDigits) << '\n';
      }
    } else if (intercepts->parsed()) {
      const MomentFamily family = parse_family(family_text);
      const auto alphas = parse_alpha_list(alphas_text);
      std::optional<MomentCache> cache;
      if (cfg.use_cache) {
        fs::create_directories(cfg.cache_dir);
        cache.emplace(cfg.cache_dir);
      }
      const auto rows = intercept_sweep(family, alphas, cfg.n_moments, cfg.digits, cache ? &*cache : nullptr);
      Sink sink(cfg.output_path, out);
      write_intercepts_csv(*sink, rows, kCsvDigits);
    } else if (median_cmd->parsed()) {
      const MomentFamily family = parse_family(family_text);
      const HalfIntegerAlpha alpha = HalfIntegerAlpha::parse(alpha_text);
      const MomentSequence seq = load_moments(family, alpha, cfg.n_moments, cfg);
      const DensityEstimate density(legendre_coefficients(seq, cfg.n_moments, cfg.digits), cfg.digits);
      out << format_significant(median(density), kCsvDigits) << '\n';
    } else if (sepprob->parsed()) {
      const HalfIntegerAlpha alpha = HalfIntegerAlpha::parse(alpha_text);
      const ExactRational epsilon = ExactRational::parse(epsilon_text);
      const SeriesState s = separability_probability(alpha, epsilon);
      out << "alpha,partial_sum,decimal,terms_used,tail_bound\n";
      out << alpha.str() << ',' << s.partial_sum.str() << ',' << format_decimal(s.partial_sum, 50) << ','
          << s.terms_used << ',' << format_decimal(s.tail_bound, 10) << '\n';
    } else if (rebit->parsed()) {
      if (grid < 2) throw DomainError("--grid must be at least 2");
      if (rebit_digits < 30) throw DomainError("--digits must be at least 30");
      ScopedDigits guard(rebit_digits);
      const BigReal a = BigReal(-1) / 16;
      const BigReal b = BigReal(1) / 256;
      Sink sink(cfg.output_path, out);
      *sink << "y,f\n";
      for (unsigned i = 0; i < grid; ++i) {
        const BigReal y = i + 1 == grid ? b : BigReal(a + (b - a) * i / (grid - 1));
        *sink << format_significant(y, kCsvDigits) << ',' << format_significant(rebit_density(y, rebit_digits), kCsvDigits)
              << '\n';
      }
    } else if (mc->parsed()) {
      const Field field = parse_field(field_text);
      const HalfIntegerAlpha alpha = field_alpha(field);
      MCEstimate est;
      ExactRational reference;
      if (separable) {
        est = separability_fraction(field, samples, seed, workers);
        reference = separability_probability(alpha, ExactRational(1, 1000000)).partial_sum;
      } else {
        const MomentFamily family = parse_family(family_text.empty() ? "unbalanced" : family_text);
        est = estimate_moment(family, field, mc_n, samples, seed, workers);
        reference = family_moment(family, alpha, mc_n);
      }
      ScopedDigits guard(40);
      const double exact = to_big_real(reference).convert_to<double>();
      const double z = est.standard_error > 0 ? (est.mean - exact) / est.standard_error : 0.0;
      buffer << std::setprecision(17);
      buffer << "mean,standard_error,exact,z_score,samples\n"
             << est.mean << ',' << est.standard_error << ',' << exact << ',' << std::setprecision(6) << z << ','
             << est.samples << '\n';
      out << buffer.str();
    } else if (cache_cmd->parsed()) {
      if (!fs::is_directory(cfg.cache_dir)) throw FormatError("cache directory does not exist: " + cfg.cache_dir.string());
      const MomentCache cache(cfg.cache_dir);
      if (action == "list") {
        for (const auto& e : cache.list()) {
          out << to_string(e.family) << ',' << HalfIntegerAlpha(e.two_alpha).str() << ',' << e.max_order << ','
              << e.file.filename().string() << '\n';
        }
      } else if (action == "clear") {
        out << "removed " << cache.clear() << " table(s)\n";
      } else {
        bool ok = true;
        for (const auto& r : cache.verify()) {
          out << (r.ok ? "ok   " : "FAIL ") << r.file.filename().string();
          if (!r.ok) out << ": " << r.detail;
          out << '\n';
          ok = ok && r.ok;
        }
        if (!ok) {
          err << "error: cache verification failed\n";
          return 1;
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hsdet::cli
