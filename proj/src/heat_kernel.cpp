#include "grushin/heat_kernel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "grushin/hermite.hpp"
#include "grushin/parallel.hpp"
#include "grushin/quadrature.hpp"
#include "grushin/rng.hpp"

namespace grushin {

namespace {

constexpr double kPi = std::numbers::pi;

// (lambda/sinh(lambda s), lambda coth(lambda s)); both even in lambda and
// smooth through lambda = 0 (series below |lambda s| = 1e-4).
inline void hyperbolic_factors(double lambda, double s, double& ratio,
                               double& lcoth) {
  const double w = lambda * s;
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    ratio = (1.0 - w2 / 6.0 + 7.0 * w2 * w2 / 360.0) / s;
    lcoth = (1.0 + w2 / 3.0 - w2 * w2 / 45.0) / s;
  } else {
    const double sh = std::sinh(w);
    ratio = lambda / sh;
    lcoth = lambda * std::cosh(w) / sh;
  }
}

inline double q_value(int n, double s, double z2, double lambda) {
  double ratio, lcoth;
  hyperbolic_factors(lambda, s, ratio, lcoth);
  double pw = 1.0;
  for (int j = 0; j < n; ++j) pw *= ratio / (4.0 * kPi);
  return pw * std::exp(-0.25 * lcoth * z2);
}

double lambda_cutoff(int n, double s) {
  double cut = 46.0 / (n * s);
  for (int it = 0; it < 3; ++it)
    cut = (46.0 + n * std::log1p(2.0 * cut * s)) / (n * s);
  return std::max(cut, 8.0 / s);
}

double panel_width(int n, double s, double z2, double t) {
  double w = 1.2 / (n * s);
  w = std::min(w, 2.0 / std::sqrt(1.0 + 0.3 * s * z2));
  if (t != 0.0) w = std::min(w, 2.5 / std::abs(t));
  return w;
}

struct LambdaIntegrals {
  double p;       // (1/pi) int q cos(lambda t)
  double radial;  // -(1/2pi) int q lcoth cos(lambda t) * 2
  double dt;      // -(1/pi) int q lambda sin(lambda t)
};

LambdaIntegrals integrate_lambda(int n, double s, double z2, double t,
                                 double width_scale = 1.0) {
  static const Rule1d gl = gauss_legendre_rule(16);
  const double cut = lambda_cutoff(n, s);
  const double width = panel_width(n, s, z2, t) * width_scale;
  const int panels = std::max(4, static_cast<int>(std::ceil(cut / width)));
  const double h = cut / panels;
  double acc_p = 0.0, acc_r = 0.0, acc_t = 0.0;
  for (int pan = 0; pan < panels; ++pan) {
    const double lo = pan * h;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double lam = lo + 0.5 * h * (gl.nodes[i] + 1.0);
      const double w = 0.5 * h * gl.weights[i];
      double ratio, lcoth;
      hyperbolic_factors(lam, s, ratio, lcoth);
      double q = std::exp(-0.25 * lcoth * z2);
      for (int j = 0; j < n; ++j) q *= ratio / (4.0 * kPi);
      const double c = std::cos(lam * t);
      acc_p += w * q * c;
      acc_r += w * q * lcoth * c;
      acc_t += w * q * lam * std::sin(lam * t);
    }
  }
  return {acc_p / kPi, -0.5 * acc_r / kPi, -acc_t / kPi};
}

}  // namespace

double q_kernel(std::span<const std::complex<double>> z, double lambda,
                const KernelParams& params) {
  if (static_cast<int>(z.size()) != params.dim)
    throw std::invalid_argument("q_kernel: dimension mismatch");
  double z2 = 0.0;
  for (const auto& v : z) z2 += std::norm(v);
  return q_value(params.dim, params.s, z2, lambda);
}

double p_kernel(const HeisenbergPoint& p, const KernelParams& params) {
  if (p.dim() != params.dim)
    throw std::invalid_argument("p_kernel: dimension mismatch");
  const double z2 = p.z_norm_squared();
  if (std::abs(p.t) / params.s > 240.0) return 0.0;  // below double range
  const LambdaIntegrals coarse =
      integrate_lambda(params.dim, params.s, z2, p.t, 1.0);
  const LambdaIntegrals fine =
      integrate_lambda(params.dim, params.s, z2, p.t, 0.5);
  const double err = std::abs(fine.p - coarse.p);
  const double scale =
      std::max(std::abs(fine.p), q_value(params.dim, params.s, z2, 0.0));
  if (err > 1e-9 * scale)
    throw QuadratureError("p_kernel: quadrature did not converge", err);
  return fine.p;
}

KernelDerivatives p1_derivatives(const HeisenbergPoint& p, int dim) {
  if (p.dim() != dim)
    throw std::invalid_argument("p1_derivatives: dimension mismatch");
  if (std::abs(p.t) > 240.0) return {0.0, 0.0, 0.0};
  const LambdaIntegrals v = integrate_lambda(dim, 1.0, p.z_norm_squared(), p.t);
  return {v.p, v.radial, v.dt};
}

std::pair<std::complex<double>, std::complex<double>> zbar_grad_p1(
    const HeisenbergPoint& p, int axis, int dim) {
  if (axis < 0 || axis >= dim)
    throw std::invalid_argument("zbar_grad_p1: invalid axis");
  const KernelDerivatives d = p1_derivatives(p, dim);
  const double xj = p.x(axis), yj = p.y(axis);
  const double xfield = xj * d.radial - 0.5 * yj * d.dt;  // X_j p1
  const double yfield = yj * d.radial + 0.5 * xj * d.dt;  // Y_j p1
  return {std::complex<double>(yfield, xfield),
          std::complex<double>(-yfield, xfield)};
}

SpectralField semigroup_via_kernel(const SpectralField& field, double r) {
  if (!(r > 0.0))
    throw std::invalid_argument("semigroup_via_kernel: r must be positive");
  const BasisSpec& spec = field.spec();
  const int n = spec.dim;
  const double lambda = spec.lambda;
  const double mu = lambda * r * r;

  double ratio, lcoth;
  hyperbolic_factors(mu, 1.0, ratio, lcoth);
  const double gauss_rate = 0.25 * lcoth;  // z-decay rate of q_1(., -mu)
  const double extent = 13.0 / std::sqrt(gauss_rate);

  // quadrature nodes for the xi re-analysis
  const QuadratureGrid xi_grid =
      QuadratureGrid::gauss_hermite(spec, 2 * spec.max_degree + 4);
  const std::size_t xi_count = xi_grid.total_points();
  std::vector<double> xi_pts(xi_count * n);
  double xi_max = 0.0;
  for (std::size_t i = 0; i < xi_count; ++i) {
    xi_grid.point(i, std::span<double>(xi_pts).subspan(i * n, n));
    for (int j = 0; j < n; ++j)
      xi_max = std::max(xi_max, std::abs(xi_pts[i * n + j]));
  }

  // z-panel width limited by the oscillation of the representation phase
  const double phase_rate = std::abs(lambda) * r * xi_max +
                            0.5 * std::abs(lambda) * r * r * 4.0 /
                                std::sqrt(gauss_rate);
  const double width = std::min(1.0, 2.5 / std::max(phase_rate, 1e-9));
  const int panels = static_cast<int>(std::ceil(2.0 * extent / width));
  static const Rule1d gl = gauss_legendre_rule(12);
  const int per_axis = panels * static_cast<int>(gl.nodes.size());

  std::vector<double> zn(per_axis), zw(per_axis);
  for (int pan = 0; pan < panels; ++pan) {
    const double lo = -extent + pan * (2.0 * extent / panels);
    const double h = 2.0 * extent / panels;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      zn[pan * gl.nodes.size() + i] = lo + 0.5 * h * (gl.nodes[i] + 1.0);
      zw[pan * gl.nodes.size() + i] = 0.5 * h * gl.weights[i];
    }
  }

  // accumulate g(xi_i) = int q_1(z, -mu) [pi_lambda(r z) f](xi_i) dz over the
  // 2n-dimensional tensor grid in z = (x, y)
  const int zdim = 2 * n;
  std::vector<Complex> g(xi_count, Complex{0.0, 0.0});
  std::vector<std::vector<Complex>> partial(
      static_cast<std::size_t>(per_axis),
      std::vector<Complex>(xi_count, Complex{0.0, 0.0}));

  double qnorm = 1.0;
  for (int j = 0; j < n; ++j) qnorm *= ratio / (4.0 * kPi);

  parallel_chunks(per_axis, [&](std::size_t first) {
    // iterate the remaining zdim-1 axes for fixed leading x_0 node
    std::vector<int> idx(zdim, 0);
    std::vector<double> x(n), y(n), shifted(n);
    auto& acc = partial[first];
    for (;;) {
      x[0] = zn[first];
      double wz = zw[first];
      for (int a = 1; a < zdim; ++a) {
        const double c = zn[idx[a]];
        if (a < n)
          x[a] = c;
        else
          y[a - n] = c;
        wz *= zw[idx[a]];
      }

      double z2 = 0.0, x_dot_y = 0.0;
      for (int j = 0; j < n; ++j) {
        z2 += x[j] * x[j] + y[j] * y[j];
        x_dot_y += x[j] * y[j];
      }
      const double q = qnorm * std::exp(-0.25 * lcoth * z2);
      if (std::abs(q * wz) > 1e-24) {
        const Complex common =
            wz * q * std::polar(1.0, 0.5 * lambda * r * r * x_dot_y);
        for (std::size_t i = 0; i < xi_count; ++i) {
          double x_dot_xi = 0.0;
          for (int j = 0; j < n; ++j) {
            shifted[j] = xi_pts[i * n + j] + r * y[j];
            x_dot_xi += x[j] * xi_pts[i * n + j];
          }
          const Complex val = synthesize_at(field, shifted);
          acc[i] += common * std::polar(1.0, lambda * r * x_dot_xi) * val;
        }
      }
      // advance trailing axes
      int a = zdim - 1;
      for (; a >= 1; --a) {
        if (++idx[a] < per_axis) break;
        idx[a] = 0;
      }
      if (a == 0) break;
    }
  });
  for (const auto& part : partial)
    for (std::size_t i = 0; i < xi_count; ++i) g[i] += part[i];

  return analyze(g, xi_grid, spec);
}

ProposalDraw heat_proposal_draw(int dim, std::uint64_t seed,
                                std::uint64_t index) {
  const CounterRng rng(seed, 0x6b9d);
  ProposalDraw draw;
  draw.point.z.resize(dim);
  double z2 = 0.0;
  double log_gauss = 0.0;
  for (int j = 0; j < dim; ++j) {
    // coordinates ~ N(0, 2), density prod (4 pi)^{-1/2} e^{-v^2/4}
    const double xj = 2.0 * rng.normal(index, 4 * j);
    const double yj = 2.0 * rng.normal(index, 4 * j + 2);
    draw.point.z[j] = {xj, yj};
    z2 += xj * xj + yj * yj;
  }
  log_gauss = -0.25 * z2 - dim * std::log(4.0 * kPi);
  const double scale = 1.0 + z2;
  draw.point.t = scale * rng.cauchy(index, 4 * dim);
  const double cauchy =
      scale / (kPi * (scale * scale + draw.point.t * draw.point.t));
  draw.density = std::exp(log_gauss) * cauchy;
  return draw;
}

MomentEstimate kernel_moment(double p_exp, int dim, MomentDensity which,
                             long samples, std::uint64_t seed) {
  if (p_exp < 0.0) throw std::invalid_argument("kernel_moment: p_exp < 0");
  if (samples < 1) throw std::invalid_argument("kernel_moment: samples < 1");

  const long chunk = 8192;
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  struct Partial {
    double sum = 0.0, sumsq = 0.0, abs_sum = 0.0;
  };
  std::vector<Partial> partials(chunks);

  parallel_chunks(chunks, [&](std::size_t c) {
    Partial acc;
    const long lo = static_cast<long>(c) * chunk;
    const long hi = std::min(samples, lo + chunk);
    for (long i = lo; i < hi; ++i) {
      const ProposalDraw draw = heat_proposal_draw(dim, seed, i);
      double w = 0.0;
      if (std::abs(draw.point.t) <= 240.0) {
        const KernelDerivatives d = p1_derivatives(draw.point, dim);
        const double dens =
            which == MomentDensity::radial ? d.radial : d.dt;
        const double x1 = std::abs(draw.point.x(0));
        w = (p_exp == 0.0 ? 1.0 : std::pow(x1, p_exp)) * std::abs(dens) /
            draw.density;
      }
      acc.sum += w;
      acc.sumsq += w * w;
      acc.abs_sum += std::abs(w);
    }
    partials[c] = acc;
  });

  double sum = 0.0, sumsq = 0.0, abs_sum = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sumsq += p.sumsq;
    abs_sum += p.abs_sum;
  }
  if (abs_sum == 0.0)
    throw std::runtime_error(
        "kernel_moment: degenerate proposal (zero effective sample size)");
  const double mean = sum / samples;
  const double var = std::max(0.0, sumsq / samples - mean * mean);
  const double ess = sumsq > 0.0 ? abs_sum * abs_sum / sumsq : 0.0;
  return {mean, std::sqrt(var / samples), samples, ess};
}

}  // namespace grushin
