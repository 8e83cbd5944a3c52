#pragma once

// Heisenberg group points (z, t) with the twisted product, non-isotropic
// dilations, the Koranyi gauge and the Schrodinger representation.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace grushin {

struct HeisenbergPoint {
  std::vector<std::complex<double>> z;
  double t = 0.0;

  HeisenbergPoint() = default;
  HeisenbergPoint(std::vector<std::complex<double>> z_, double t_)
      : z(std::move(z_)), t(t_) {}

  int dim() const { return static_cast<int>(z.size()); }
  double x(int j) const { return z[j].real(); }
  double y(int j) const { return z[j].imag(); }
  double z_norm_squared() const {
    double s = 0.0;
    for (const auto& v : z) s += std::norm(v);
    return s;
  }
};

// (z,t)(w,s) = (z+w, t+s+Im(z . conj(w))/2)
HeisenbergPoint group_mul(const HeisenbergPoint& a, const HeisenbergPoint& b);
HeisenbergPoint group_inverse(const HeisenbergPoint& p);

// (|z|^4 + t^2)^{1/4}
double koranyi_norm(const HeisenbergPoint& p);

// delta_r(z,t) = (r z, r^2 t)
HeisenbergPoint dilate(const HeisenbergPoint& p, double r);

// pi_lambda(x+iy, t) phi(xi) = e^{i lambda t} e^{i lambda (x.xi + x.y/2)} phi(xi + y)
std::complex<double> schrodinger_apply(
    const HeisenbergPoint& p, double lambda,
    const std::function<std::complex<double>(std::span<const double>)>& phi,
    std::span<const double> xi);

}  // namespace grushin
