#include "grushin/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grushin/hermite.hpp"

namespace grushin {

HermiteRule gauss_hermite_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_hermite_rule: points < 1");
  HermiteRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  rule.absorbed_weights.resize(m);

  std::vector<double> h(m + 1);
  const int half = (m + 1) / 2;
  double x = 0.0, x_prev1 = 0.0, x_prev2 = 0.0;
  for (int i = 0; i < half; ++i) {
    // initial guesses for roots ordered from the largest down
    if (i == 0) {
      x = std::sqrt(2.0 * m + 1.0) -
          1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      x = x_prev1 - 1.14 * std::pow(m, 0.426) / x_prev1;
    } else if (i == 2) {
      x = 1.86 * x_prev1 - 0.86 * x_prev2;
    } else if (i == 3) {
      x = 1.91 * x_prev1 - 0.91 * x_prev2;
    } else {
      x = 2.0 * x_prev1 - x_prev2;
    }
    for (int it = 0; it < 100; ++it) {
      eval_hermite_upto(m, x, h);
      // h_m' = sqrt(2m) h_{m-1} - x h_m
      const double deriv = std::sqrt(2.0 * m) * h[m - 1] - x * h[m];
      const double dx = h[m] / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    eval_hermite_upto(m, x, h);
    const double wa = 1.0 / (m * h[m - 1] * h[m - 1]);
    rule.nodes[i] = x;
    rule.absorbed_weights[i] = wa;
    rule.weights[i] = wa * std::exp(-x * x);
    rule.nodes[m - 1 - i] = -x;
    rule.absorbed_weights[m - 1 - i] = wa;
    rule.weights[m - 1 - i] = rule.weights[i];
    x_prev2 = x_prev1;
    x_prev1 = x;
  }
  if (m % 2 == 1) rule.nodes[half - 1] = 0.0;  // exact center
  return rule;
}

Rule1d gauss_legendre_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre_rule: points < 1");
  Rule1d rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[m - 1 - i] = rule.weights[i];
  }
  return rule;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int points_per_panel) {
  const Rule1d rule = gauss_legendre_rule(points_per_panel);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * f(lo + 0.5 * h * (rule.nodes[i] + 1.0));
    }
    total += 0.5 * h * acc;
  }
  return total;
}

}  // namespace grushin
