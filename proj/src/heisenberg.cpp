#include "grushin/heisenberg.hpp"

#include <cmath>
#include <stdexcept>

namespace grushin {

HeisenbergPoint group_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("group_mul: dimension mismatch");
  HeisenbergPoint out;
  out.z.resize(a.z.size());
  double twist = 0.0;
  for (int j = 0; j < a.dim(); ++j) {
    out.z[j] = a.z[j] + b.z[j];
    twist += (a.z[j] * std::conj(b.z[j])).imag();
  }
  out.t = a.t + b.t + 0.5 * twist;
  return out;
}

HeisenbergPoint group_inverse(const HeisenbergPoint& p) {
  HeisenbergPoint out;
  out.z.resize(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j) out.z[j] = -p.z[j];
  out.t = -p.t;
  return out;
}

double koranyi_norm(const HeisenbergPoint& p) {
  const double zz = p.z_norm_squared();
  return std::pow(zz * zz + p.t * p.t, 0.25);
}

HeisenbergPoint dilate(const HeisenbergPoint& p, double r) {
  HeisenbergPoint out;
  out.z.resize(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j) out.z[j] = r * p.z[j];
  out.t = r * r * p.t;
  return out;
}

std::complex<double> schrodinger_apply(
    const HeisenbergPoint& p, double lambda,
    const std::function<std::complex<double>(std::span<const double>)>& phi,
    std::span<const double> xi) {
  const int n = p.dim();
  if (static_cast<int>(xi.size()) != n)
    throw std::invalid_argument("schrodinger_apply: point dimension mismatch");
  double x_dot_xi = 0.0, x_dot_y = 0.0;
  std::vector<double> shifted(n);
  for (int j = 0; j < n; ++j) {
    x_dot_xi += p.x(j) * xi[j];
    x_dot_y += p.x(j) * p.y(j);
    shifted[j] = xi[j] + p.y(j);
  }
  const double phase = lambda * (p.t + x_dot_xi + 0.5 * x_dot_y);
  return std::polar(1.0, phase) * phi(shifted);
}

}  // namespace grushin
