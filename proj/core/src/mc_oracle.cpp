#include "hsdet/mc_oracle.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include "hsdet/error.hpp"

namespace hsdet {

std::string_view to_string(Field field) { return field == Field::Real ? "real" : "complex"; }

Field parse_field(std::string_view text) {
  if (text == "real") return Field::Real;
  if (text == "complex") return Field::Complex;
  throw DomainError("unknown field '" + std::string(text) + "' (real|complex)");
}

HalfIntegerAlpha field_alpha(Field field) { return HalfIntegerAlpha(field == Field::Real ? 1 : 2); }

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
  return out;
}

namespace {

SampledDensityMatrix sample_with(Field field, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SampledDensityMatrix s;
  if (field == Field::Real) {
    Eigen::Matrix<double, 4, 5> g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 5; ++c) g(r, c) = normal(rng);
    Eigen::Matrix4d w = g * g.transpose();
    w /= w.trace();
    Eigen::Matrix4d pt;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) pt(2 * i + j, 2 * k + l) = w(2 * i + l, 2 * k + j);
    s.rho = w.cast<std::complex<double>>();
    s.det_rho = w.determinant();
    s.det_rho_pt = pt.determinant();
  } else {
    Eigen::Matrix4cd g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        g(r, c) = {re, im};
      }
    Eigen::Matrix4cd w = g * g.adjoint();
    w /= w.trace().real();
    s.rho = w;
    s.det_rho = w.determinant().real();
    s.det_rho_pt = partial_transpose(w).determinant().real();
  }
  return s;
}

std::mt19937_64 seeded(std::initializer_list<std::uint64_t> parts) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t p : parts) {
    words.push_back(static_cast<std::uint32_t>(p));
    words.push_back(static_cast<std::uint32_t>(p >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

struct Accumulator {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    const double n = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / n;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / n;
    count += o.count;
  }
};

constexpr std::uint64_t kChunk = 4096;

// Chunks are fixed by index and merged in order, so the result does not
// depend on the worker count.
MCEstimate run(Field field, std::uint64_t samples, std::uint64_t seed, unsigned workers,
               const std::function<double(const SampledDensityMatrix&)>& statistic) {
  if (samples < kMinMonteCarloSamples) {
    throw DomainError("Monte Carlo estimates need at least " + std::to_string(kMinMonteCarloSamples) + " samples");
  }
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Accumulator> partial(chunks);
  auto work = [&](unsigned worker, unsigned stride) {
    for (std::uint64_t c = worker; c < chunks; c += stride) {
      const std::uint64_t end = std::min(samples, (c + 1) * kChunk);
      for (std::uint64_t i = c * kChunk; i < end; ++i) partial[c].add(statistic(sample_hs_indexed(field, seed, i)));
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  Accumulator total;
  for (const auto& p : partial) total.merge(p);
  const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  return {total.mean, std::sqrt(variance / static_cast<double>(total.count)), total.count};
}

}  // namespace

SampledDensityMatrix sample_hs(Field field, std::uint64_t seed) {
  auto rng = seeded({seed});
  return sample_with(field, rng);
}

SampledDensityMatrix sample_hs_indexed(Field field, std::uint64_t seed, std::uint64_t index) {
  auto rng = seeded({seed, index});
  return sample_with(field, rng);
}

MCEstimate estimate_moment(MomentFamily family, Field field, unsigned n, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers) {
  if (family == MomentFamily::RhoDet) throw DomainError("estimate_moment: family must be balanced or unbalanced");
  if (n == 0) throw DomainError("estimate_moment: n must be positive");
  const bool balanced = family == MomentFamily::Balanced;
  return run(field, samples, seed, workers, [balanced, n](const SampledDensityMatrix& s) {
    const double base = balanced ? s.det_rho * s.det_rho_pt : s.det_rho_pt;
    return std::pow(base, static_cast<int>(n));
  });
}

MCEstimate separability_fraction(Field field, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  return run(field, samples, seed, workers,
             [](const SampledDensityMatrix& s) { return s.det_rho_pt >= 0 ? 1.0 : 0.0; });
}

}  // namespace hsdet
