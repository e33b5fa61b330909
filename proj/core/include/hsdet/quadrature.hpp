#pragma once

#include <functional>
#include <vector>

#include "hsdet/big_real.hpp"

namespace hsdet {

/// n-point Gauss-Legendre nodes and weights on [-1, 1] at a fixed precision.
class GaussLegendreRule {
 public:
  GaussLegendreRule(unsigned points, unsigned digits);

  unsigned points() const { return static_cast<unsigned>(nodes_.size()); }
  unsigned digits() const { return digits_; }
  const std::vector<BigReal>& nodes() const { return nodes_; }
  const std::vector<BigReal>& weights() const { return weights_; }

  BigReal integrate(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b) const;

 private:
  unsigned digits_;
  std::vector<BigReal> nodes_;
  std::vector<BigReal> weights_;
};

struct QuadratureResult {
  BigReal value;
  BigReal error_estimate;
  unsigned panels = 0;
};

/// Globally adaptive bisection: every panel carries |G(panel) - G(left) - G(right)|
/// as its error estimate and the worst panel is split until the summed
/// estimate is below `tolerance` or `max_panels` is reached. `breakpoints`
/// (sorted, at least two) define the initial panels.
QuadratureResult adaptive_integrate(const std::function<BigReal(const BigReal&)>& f,
                                    const std::vector<BigReal>& breakpoints, const BigReal& tolerance,
                                    unsigned digits, unsigned rule_points = 20, unsigned max_panels = 20000);

}  // namespace hsdet
