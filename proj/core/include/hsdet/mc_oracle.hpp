#pragma once

#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "hsdet/exact_rational.hpp"
#include "hsdet/moments.hpp"

namespace hsdet {

enum class Field { Real, Complex };

std::string_view to_string(Field field);
Field parse_field(std::string_view text);

/// alpha = 1/2 for real entries, 1 for complex entries.
HalfIntegerAlpha field_alpha(Field field);

struct SampledDensityMatrix {
  Eigen::Matrix4cd rho;  ///< real field: imaginary parts are zero
  double det_rho = 0;
  double det_rho_pt = 0;
};

/// Transposes each 2x2 block (second tensor factor).
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho);

/// rho = G G^dagger / tr(G G^dagger) with G a Ginibre matrix over the field:
/// 4x4 complex, or 4x5 real (the extra column makes the induced measure on
/// real density matrices flat).
SampledDensityMatrix sample_hs(Field field, std::uint64_t seed);

/// The sample used for index `index` of a run with global seed `seed`;
/// independent of how a run is split across workers.
SampledDensityMatrix sample_hs_indexed(Field field, std::uint64_t seed, std::uint64_t index);

struct MCEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
};

inline constexpr std::uint64_t kMinMonteCarloSamples = 10000;

/// Sample mean of (det rho det rho^PT)^n (Balanced) or (det rho^PT)^n
/// (Unbalanced) with its standard error.
MCEstimate estimate_moment(MomentFamily family, Field field, unsigned n, std::uint64_t samples,
                           std::uint64_t seed, unsigned workers = 1);

/// Fraction of samples with det rho^PT >= 0.
MCEstimate separability_fraction(Field field, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace hsdet
