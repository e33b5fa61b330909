#pragma once

#include "hsdet/big_real.hpp"
#include "hsdet/exact_rational.hpp"

namespace hsdet {

/// Support of y = 17|rho| - 1/16 for two-rebit states.
Interval rebit_support();

/// Closed-form density of y = 17|rho| - 1/16 on [-1/16, 1/256]. At
/// y = -1/16 the arctanh terms (a vanishing factor times a logarithmic
/// divergence) contribute 0 and the finite limit 68544/289 is returned.
BigReal rebit_density(const BigReal& y, unsigned digits);

/// Integral of y^k f(y) over the support by adaptive quadrature at the
/// given precision; throws NumericError if the error estimate exceeds
/// 10^(-digits/2).
BigReal rebit_density_moment(unsigned k, unsigned digits);

}  // namespace hsdet
