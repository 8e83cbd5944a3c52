#include "grushin/riesz.hpp"

#include <cmath>

namespace grushin {

double riesz_multiplier(const MultiIndex& alpha, int axis, int dim, bool star) {
  if (axis < 0 || axis >= dim)
    throw std::invalid_argument("riesz_multiplier: invalid axis");
  const double denom = 2.0 * alpha.order() + dim;
  const double numer = star ? 2.0 * alpha[axis] : 2.0 * alpha[axis] + 2.0;
  return std::sqrt(numer / denom);
}

double truncated_factor(Eigenvalue ev, const TruncationWindow& window) {
  if (!(ev.nu > 0.0)) throw std::invalid_argument("truncated_factor: nu <= 0");
  const double root = std::sqrt(ev.nu);
  return std::erf(root / window.epsilon) - std::erf(root * window.epsilon);
}

namespace {

SpectralField transport(const SpectralField& field, int axis, bool star,
                        const TruncationWindow* window) {
  const BasisSpec& spec = field.spec();
  if (axis < 0 || axis >= spec.dim)
    throw std::invalid_argument("apply_riesz: invalid axis");
  const int out_degree = spec.max_degree + (star ? 0 : 1);
  SpectralField out(BasisSpec(spec.dim, spec.lambda, out_degree));
  for (const auto& [a, c] : field.coeffs()) {
    if (star && a[axis] == 0) continue;
    double m = riesz_multiplier(a, axis, spec.dim, star);
    if (window)
      m *= truncated_factor(eigenvalue(a, spec.dim, spec.lambda), *window);
    out.add_coeff(star ? a.lowered(axis) : a.raised(axis), m * c);
  }
  return out;
}

}  // namespace

SpectralField apply_riesz(const SpectralField& field, int axis, bool star) {
  return transport(field, axis, star, nullptr);
}

SpectralField apply_truncated_riesz(const SpectralField& field, int axis,
                                    bool star, const TruncationWindow& window) {
  return transport(field, axis, star, &window);
}

double truncation_error(const SpectralField& field, int axis, bool star,
                        const TruncationWindow& window) {
  const BasisSpec& spec = field.spec();
  double acc = 0.0;
  for (const auto& [a, c] : field.coeffs()) {
    if (star && a[axis] == 0) continue;
    const double m = riesz_multiplier(a, axis, spec.dim, star);
    const double tf =
        truncated_factor(eigenvalue(a, spec.dim, spec.lambda), window);
    acc += m * m * (1.0 - tf) * (1.0 - tf) * std::norm(c);
  }
  return std::sqrt(acc);
}

}  // namespace grushin
