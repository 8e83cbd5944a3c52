#pragma once

// Truncated Hilbert transforms along parabola-type curves, the group action
// that transfers them to R^{n+1}, and the rotation/dilation/shear changes of
// variables that reduce the curve transform to the plain parabola one.
//
// All r-integrals use log-spaced nodes over [eps, 1/eps], trapezoid in
// log r, with +r and -r paired node by node so an odd kernel cancels
// exactly at the node level.

#include <complex>
#include <functional>
#include <span>

#include "grushin/grid_function.hpp"
#include "grushin/heisenberg.hpp"

namespace grushin {

struct CurveSpec {
  HeisenbergPoint base;
  double epsilon;
  CurveSpec(HeisenbergPoint p, double eps) : base(std::move(p)), epsilon(eps) {
    if (!(eps > 0.0 && eps <= 1.0))
      throw std::invalid_argument("CurveSpec: epsilon outside (0,1]");
  }
};

inline constexpr int kDefaultCurveNodes = 512;

// H^eps f(u,s) = int_{eps<|r|<1/eps} f(u-r, s-r^2) dr/r on a 2-d grid.
GridFunction hilbert_parabola_trunc(const GridFunction& f, double epsilon,
                                    int nodes = kDefaultCurveNodes);

// T_{(x,t,v)}^eps f(u,s) = int f(u - r x, s - r^2 t - r v x) dr/r; the
// parabola transform is the (x,t,v) = (1,1,0) member.
GridFunction sheared_parabola_trunc(const GridFunction& f, double x, double t,
                                    double v, double epsilon,
                                    int nodes = kDefaultCurveNodes);

// U(x+iy, t)(xi, eta) = (xi - y, eta - t + x.y/2 - x.xi).  Measure
// preserving; composes as a left action: U(a) U(b) = U(ab).
std::vector<double> u_action(const HeisenbergPoint& p,
                             std::span<const double> xi_eta);

// T_eps^{(z,t)} f(xi,eta) =
//   int_{eps<|r|<1/eps} f(xi + r y, eta + r x.xi + r^2 (t + x.y/2)) dr/r
// evaluated on f's own grid.
GridFunction t_epsilon_apply(const GridFunction& f, const CurveSpec& curve,
                             int nodes = kDefaultCurveNodes);

// Truncated Hilbert transform along r -> (r z, r^2 t) of a callback on the
// group, at a single point:
//   int_{eps<|r|<1/eps} F(w - r z, s - r^2 t - r Im(w . conj z)) dr/r.
std::complex<double> hilbert_curve_trunc(
    const std::function<std::complex<double>(const HeisenbergPoint&)>& F,
    const CurveSpec& curve, const HeisenbergPoint& at,
    int nodes = kDefaultCurveNodes);

enum class Reduction { rotation, dilation, shear };

struct ReductionSpec {
  Reduction kind;
  double theta = 0.0;    // rotation angle (first complex coordinate)
  double lambda1 = 1.0;  // dilation factors, both > 0
  double lambda2 = 1.0;
  double a = 0.0;        // shear amount
};

// rotation: f(sigma w, s) on a 3-d (x, y, s) grid with sigma = e^{i theta};
// dilation: f(lambda1 u, lambda2 s) on a 2-d grid;
// shear:    f(u, s + a u) on a 2-d grid.
// Output sits on the input axes; off-grid reads are cubic, zero outside.
GridFunction reduction_conjugate(const ReductionSpec& spec,
                                 const GridFunction& f);

}  // namespace grushin
