#include "hsdet/quadrature.hpp"

#include <queue>

#include <boost/math/constants/constants.hpp>

#include "hsdet/error.hpp"

namespace hsdet {

GaussLegendreRule::GaussLegendreRule(unsigned points, unsigned digits) : digits_(digits) {
  if (points < 2) throw DomainError("GaussLegendreRule: need at least 2 points");
  ScopedDigits guard(digits + 10);
  const BigReal pi = boost::math::constants::pi<BigReal>();
  const BigReal tolerance = pow(BigReal(10), -static_cast<int>(digits + 5));
  nodes_.resize(points);
  weights_.resize(points);
  for (unsigned i = 0; i < points; ++i) {
    BigReal x = cos(pi * (BigReal(i) + BigReal(3) / 4) / (BigReal(points) + BigReal(1) / 2));
    BigReal derivative;
    for (int iter = 0; iter < 200; ++iter) {
      BigReal p_prev(1), p_cur = x;
      for (unsigned j = 1; j < points; ++j) {
        BigReal p_next = ((2 * j + 1) * x * p_cur - j * p_prev) / (j + 1);
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
      }
      derivative = points * (x * p_cur - p_prev) / (x * x - 1);
      const BigReal step = p_cur / derivative;
      x -= step;
      if (abs(step) < tolerance) break;
    }
    nodes_[i] = x;
    weights_[i] = 2 / ((1 - x * x) * derivative * derivative);
  }
}

BigReal GaussLegendreRule::integrate(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                                     const BigReal& b) const {
  const BigReal mid = (a + b) / 2;
  const BigReal half = (b - a) / 2;
  BigReal total(0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) total += weights_[i] * f(BigReal(mid + half * nodes_[i]));
  return BigReal(total * half);
}

namespace {

struct Panel {
  BigReal a, b;
  BigReal left, right;  // rule on each half
  BigReal error;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

}  // namespace

QuadratureResult adaptive_integrate(const std::function<BigReal(const BigReal&)>& f,
                                    const std::vector<BigReal>& breakpoints, const BigReal& tolerance,
                                    unsigned digits, unsigned rule_points, unsigned max_panels) {
  if (breakpoints.size() < 2) throw DomainError("adaptive_integrate: need at least two breakpoints");
  ScopedDigits guard(digits);
  const GaussLegendreRule rule(rule_points, digits);

  auto make_panel = [&](const BigReal& a, const BigReal& b, const BigReal& whole) {
    const BigReal mid = (a + b) / 2;
    Panel p{a, b, rule.integrate(f, a, mid), rule.integrate(f, mid, b), BigReal(0)};
    p.error = abs(whole - p.left - p.right);
    return p;
  };

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> queue;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const BigReal& a = breakpoints[i];
    const BigReal& b = breakpoints[i + 1];
    if (!(a < b)) throw DomainError("adaptive_integrate: breakpoints must be strictly increasing");
    queue.push(make_panel(a, b, rule.integrate(f, a, b)));
  }

  auto total_error = [&queue]() {
    // Recomputed from scratch to avoid drift from repeated subtraction.
    auto copy = queue;
    BigReal sum(0);
    while (!copy.empty()) {
      sum += copy.top().error;
      copy.pop();
    }
    return sum;
  };

  BigReal error = total_error();
  while (error > tolerance && queue.size() < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const BigReal mid = (worst.a + worst.b) / 2;
    Panel lower = make_panel(worst.a, mid, worst.left);
    Panel upper = make_panel(mid, worst.b, worst.right);
    error += lower.error + upper.error - worst.error;
    queue.push(std::move(lower));
    queue.push(std::move(upper));
    if (queue.size() % 256 == 0) error = total_error();
  }

  QuadratureResult result{BigReal(0), BigReal(0), static_cast<unsigned>(queue.size())};
  while (!queue.empty()) {
    result.value += queue.top().left + queue.top().right;
    result.error_estimate += queue.top().error;
    queue.pop();
  }
  return result;
}

}  // namespace hsdet
