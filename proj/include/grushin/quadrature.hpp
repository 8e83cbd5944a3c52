#pragma once

#include <functional>
#include <vector>

namespace grushin {

struct Rule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Hermite rule for the weight e^{-x^2}: sum w_i g(x_i) = int g e^{-x^2}.
// absorbed_weights are w_i e^{x_i^2} = 1/(m h_{m-1}(x_i)^2), computed without
// overflow, for integrating functions that already carry the Gaussian.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> absorbed_weights;
};

HermiteRule gauss_hermite_rule(int points);

// Gauss-Legendre rule on [-1, 1].
Rule1d gauss_legendre_rule(int points);

// Composite Gauss-Legendre integration of f over [a, b] with uniform panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int points_per_panel = 12);

}  // namespace grushin
