#pragma once

// Heat kernels on the Heisenberg group: the closed hyperbolic form q_s in
// the partial-transform variable, the kernel p_s recovered by quadrature in
// that variable, analytic first-derivative fields of p_1, the semigroup
// written as a group integral against q_1, and Monte-Carlo moments of the
// kernel-derivative densities.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "grushin/heisenberg.hpp"
#include "grushin/spectral_field.hpp"

namespace grushin {

struct KernelParams {
  int dim = 1;
  double s = 1.0;
  KernelParams(int n, double s_) : dim(n), s(s_) {
    if (n < 1) throw std::invalid_argument("KernelParams: dim < 1");
    if (!(s > 0.0)) throw std::invalid_argument("KernelParams: s <= 0");
  }
};

struct QuadratureError : std::runtime_error {
  double achieved;
  QuadratureError(const std::string& msg, double err)
      : std::runtime_error(msg), achieved(err) {}
};

// q_s(z, lambda) = (4 pi)^{-n} (lambda/sinh(lambda s))^n
//                  e^{-lambda coth(s lambda) |z|^2 / 4},
// with the removable point lambda = 0 evaluated by series.
double q_kernel(std::span<const std::complex<double>> z, double lambda,
                const KernelParams& params);

// p_s(z, t) = (1/2pi) int q_s(z, lambda) e^{-i lambda t} d lambda, real and
// even in t.  Throws QuadratureError if refinement does not confirm the
// value to ~1e-9 relative.
double p_kernel(const HeisenbergPoint& p, const KernelParams& params);

// p_1 together with (1/r) dp_1/dr (r = |z|) and dp_1/dt, all from one pass
// of the lambda quadrature (fast fixed-rule path used by Monte-Carlo loops).
struct KernelDerivatives {
  double p;
  double radial;  // (1/r) dp/dr = (1/x_j) dp/dx_j for every j
  double dt;
};
KernelDerivatives p1_derivatives(const HeisenbergPoint& p, int dim);

// (Z_j p_1, Z*_j p_1) for the left-invariant complex fields
//   Z_j = i X_j + Y_j,  Z*_j = i X_j - Y_j,
//   X_j = d/dx_j - (y_j/2) d/dt,  Y_j = d/dy_j + (x_j/2) d/dt,
// via differentiation under the integral sign.
std::pair<std::complex<double>, std::complex<double>> zbar_grad_p1(
    const HeisenbergPoint& p, int axis, int dim);

// Evaluates e^{-r^2 H(lambda)} f through the group-side identity
//   e^{-r^2 H(lambda)} = int pi_lambda(r z) q_1(z, -lambda r^2) dz
// by tensor quadrature over z, re-analyzed in the same basis.
SpectralField semigroup_via_kernel(const SpectralField& field, double r);

// Importance-sampled estimate of int |x_1|^p |density| dz dt over the group,
// density = |(1/r) dp_1/dr| or |dp_1/dt|.  Proposal: Gaussian in z matched
// to the kernel width, Cauchy in t with scale 1 + |z|^2.
enum class MomentDensity { radial, time };

struct MomentEstimate {
  double estimate;
  double std_error;
  long samples;
  double effective_samples;
};

MomentEstimate kernel_moment(double p_exp, int dim, MomentDensity which,
                             long samples, std::uint64_t seed);

// Proposal draw shared by kernel_moment and the Monte-Carlo representation
// path: returns the point and its proposal density.
struct ProposalDraw {
  HeisenbergPoint point;
  double density;
};
ProposalDraw heat_proposal_draw(int dim, std::uint64_t seed,
                                std::uint64_t index);

}  // namespace grushin
