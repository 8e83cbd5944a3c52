#pragma once

// Hermite-Riesz multipliers: the exact transforms R_j = A_j H^{-1/2} and
// their adjoint-side companions act on spectral coefficients by index
// transport, and the truncated versions pick up a closed-form erf factor
// from the clipped semigroup integral.

#include <stdexcept>

#include "grushin/spectral_field.hpp"

namespace grushin {

// nu = (2|alpha| + n)|lambda|, the Hermite eigenvalue of the slice.
struct Eigenvalue {
  double nu;
};

inline Eigenvalue eigenvalue(const MultiIndex& alpha, int dim, double lambda) {
  return {(2.0 * alpha.order() + dim) * std::abs(lambda)};
}

// Integration window r in (epsilon^2, 1/epsilon^2); empty at epsilon = 1.
struct TruncationWindow {
  double epsilon;
  explicit TruncationWindow(double eps) : epsilon(eps) {
    if (!(eps > 0.0 && eps <= 1.0))
      throw std::invalid_argument("TruncationWindow: epsilon outside (0,1]");
  }
};

// sqrt((2 alpha_j + 2)/(2|alpha| + n)) for the index-raising transform,
// sqrt((2 alpha_j)/(2|alpha| + n)) for the star (index-lowering) one.
double riesz_multiplier(const MultiIndex& alpha, int axis, int dim, bool star);

// (1/sqrt(pi)) int_{eps^2 nu}^{nu/eps^2} e^{-u} u^{-1/2} du
//   = erf(sqrt(nu)/eps) - erf(eps sqrt(nu)),  in [0, 1].
double truncated_factor(Eigenvalue nu, const TruncationWindow& window);

SpectralField apply_riesz(const SpectralField& field, int axis, bool star);

SpectralField apply_truncated_riesz(const SpectralField& field, int axis,
                                    bool star, const TruncationWindow& window);

// || R_j^eps f - R_j f ||_2, always <= 2 ||f||_2.
double truncation_error(const SpectralField& field, int axis, bool star,
                        const TruncationWindow& window);

}  // namespace grushin
