#include "grushin/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grushin/detail/tensor.hpp"
#include "grushin/quadrature.hpp"

namespace grushin {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^{-1/4}

// Recurrence on the polynomial part p_k = h_k e^{x^2/2}:
//   p_{k+1} = x sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1},  p_0 = pi^{-1/4}.
// p_k can overflow in the classically forbidden region, so carry a running
// log-scale and fold the Gaussian back in only when emitting values.
void hermite_scan(int kmax, double x,
                  const std::function<void(int, double)>& emit) {
  const double log_gauss = -0.5 * x * x;
  double scale_log = 0.0;
  double factor = std::exp(log_gauss);  // e^{log_gauss + scale_log}

  auto value = [&](double p) -> double {
    if (factor > 0.0) return p * factor;
    if (p == 0.0) return 0.0;
    const double lg = log_gauss + scale_log + std::log(std::abs(p));
    return lg < -745.0 ? 0.0 : std::copysign(std::exp(lg), p);
  };

  double pm1 = 0.0;
  double p = kPiQuarterInv;
  emit(0, value(p));
  for (int k = 1; k <= kmax; ++k) {
    const double pk = x * std::sqrt(2.0 / k) * p - std::sqrt((k - 1.0) / k) * pm1;
    pm1 = p;
    p = pk;
    if (std::abs(p) > 1e250 || std::abs(pm1) > 1e250) {
      p *= 1e-250;
      pm1 *= 1e-250;
      scale_log += 250.0 * std::numbers::ln10;
      factor = (log_gauss + scale_log < 709.0)
                   ? std::exp(log_gauss + scale_log)
                   : 0.0;  // forces the log path in value()
    }
    emit(k, value(p));
  }
}

}  // namespace

double eval_hermite_1d(int k, double x) {
  if (k < 0) throw std::invalid_argument("eval_hermite_1d: negative degree");
  double result = 0.0;
  hermite_scan(k, x, [&](int j, double v) {
    if (j == k) result = v;
  });
  return result;
}

void eval_hermite_upto(int kmax, double x, std::span<double> out) {
  if (kmax < 0) throw std::invalid_argument("eval_hermite_upto: negative degree");
  if (out.size() < static_cast<std::size_t>(kmax) + 1)
    throw std::invalid_argument("eval_hermite_upto: output too small");
  hermite_scan(kmax, x, [&](int j, double v) { out[j] = v; });
}

double eval_phi(const MultiIndex& alpha, double lambda,
                std::span<const double> xi) {
  if (lambda == 0.0) throw std::invalid_argument("eval_phi: lambda = 0");
  if (static_cast<int>(xi.size()) != alpha.dim())
    throw std::invalid_argument("eval_phi: point dimension mismatch");
  const double root = std::sqrt(std::abs(lambda));
  double prod = 1.0;
  for (int j = 0; j < alpha.dim(); ++j) {
    prod *= std::sqrt(root) * eval_hermite_1d(alpha[j], root * xi[j]);
  }
  return prod;
}

QuadratureGrid QuadratureGrid::gauss_hermite(const BasisSpec& spec,
                                             int points_per_axis) {
  const int m = points_per_axis > 0 ? points_per_axis : 2 * spec.max_degree + 2;
  if (m < spec.max_degree + 1)
    throw std::invalid_argument("QuadratureGrid: too few points for exactness");
  const HermiteRule rule = gauss_hermite_rule(m);
  const double root = std::sqrt(std::abs(spec.lambda));
  QuadratureGrid grid;
  grid.lambda_scale = root;
  grid.nodes.assign(spec.dim, {});
  grid.weights.assign(spec.dim, {});
  for (int axis = 0; axis < spec.dim; ++axis) {
    auto& ns = grid.nodes[axis];
    auto& ws = grid.weights[axis];
    ns.resize(m);
    ws.resize(m);
    for (int i = 0; i < m; ++i) {
      ns[i] = rule.nodes[i] / root;
      ws[i] = rule.absorbed_weights[i] / root;
    }
  }
  return grid;
}

std::size_t QuadratureGrid::total_points() const {
  std::size_t n = 1;
  for (const auto& ax : nodes) n *= ax.size();
  return n;
}

void QuadratureGrid::point(std::size_t flat, std::span<double> out) const {
  for (int axis = dim() - 1; axis >= 0; --axis) {
    const std::size_t m = nodes[axis].size();
    out[axis] = nodes[axis][flat % m];
    flat /= m;
  }
}

std::vector<Complex> sample_on_grid(
    const QuadratureGrid& grid,
    const std::function<Complex(std::span<const double>)>& f) {
  std::vector<Complex> out(grid.total_points());
  std::vector<double> pt(grid.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    grid.point(i, pt);
    out[i] = f(pt);
  }
  return out;
}

detail::AxisMatrix hermite_axis_matrix(std::span<const double> xi_nodes,
                                       double lambda, int kmax,
                                       std::span<const double> weights) {
  const double root = std::sqrt(std::abs(lambda));
  const double amp = std::sqrt(root);
  const std::size_t m = xi_nodes.size();
  detail::AxisMatrix b;
  b.rows = static_cast<std::size_t>(kmax) + 1;
  b.cols = m;
  b.m.resize(b.rows * b.cols);
  std::vector<double> h(kmax + 1);
  for (std::size_t i = 0; i < m; ++i) {
    eval_hermite_upto(kmax, root * xi_nodes[i], h);
    const double w = weights.empty() ? 1.0 : weights[i];
    for (int k = 0; k <= kmax; ++k) b.m[k * m + i] = amp * h[k] * w;
  }
  return b;
}

SpectralField analyze(std::span<const Complex> samples,
                      const QuadratureGrid& grid, const BasisSpec& spec) {
  if (grid.dim() != spec.dim)
    throw std::invalid_argument("analyze: grid/spec dimension mismatch");
  if (samples.size() != grid.total_points())
    throw std::invalid_argument("analyze: sample count mismatch");
  const int kmax = spec.max_degree;
  std::vector<detail::AxisMatrix> mats(spec.dim);
  for (int axis = 0; axis < spec.dim; ++axis)
    mats[axis] = hermite_axis_matrix(grid.nodes[axis], spec.lambda, kmax,
                                     grid.weights[axis]);
  std::vector<Complex> box = detail::tensor_contract(
      std::vector<Complex>(samples.begin(), samples.end()), mats);
  return detail::box_to_field(box, spec, static_cast<std::size_t>(kmax) + 1);
}

Complex synthesize_at(const SpectralField& field, std::span<const double> xi) {
  const BasisSpec& spec = field.spec();
  if (static_cast<int>(xi.size()) != spec.dim)
    throw std::invalid_argument("synthesize_at: point dimension mismatch");
  if (field.empty()) return {0.0, 0.0};
  const double root = std::sqrt(std::abs(spec.lambda));
  const double amp = std::sqrt(root);
  const int kmax = spec.max_degree;
  std::vector<double> h((kmax + 1) * spec.dim);
  std::vector<double> tmp(kmax + 1);
  for (int axis = 0; axis < spec.dim; ++axis) {
    eval_hermite_upto(kmax, root * xi[axis], tmp);
    for (int k = 0; k <= kmax; ++k) h[axis * (kmax + 1) + k] = amp * tmp[k];
  }
  Complex acc{0.0, 0.0};
  for (const auto& [a, c] : field.coeffs()) {
    double prod = 1.0;
    for (int axis = 0; axis < spec.dim; ++axis)
      prod *= h[axis * (kmax + 1) + a[axis]];
    acc += c * prod;
  }
  return acc;
}

std::vector<Complex> synthesize(const SpectralField& field,
                                std::span<const double> points) {
  const int n = field.spec().dim;
  if (points.size() % n != 0)
    throw std::invalid_argument("synthesize: flat point array size mismatch");
  const std::size_t count = points.size() / n;
  std::vector<Complex> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = synthesize_at(field, points.subspan(i * n, n));
  return out;
}

SpectralField apply_ladder(const SpectralField& field, int axis, Ladder kind) {
  const BasisSpec& spec = field.spec();
  if (axis < 0 || axis >= spec.dim)
    throw std::invalid_argument("apply_ladder: invalid axis");
  const double root = std::sqrt(std::abs(spec.lambda));
  const int out_degree = spec.max_degree + (kind == Ladder::creation ? 1 : 0);
  SpectralField out(BasisSpec(spec.dim, spec.lambda, out_degree));
  for (const auto& [a, c] : field.coeffs()) {
    if (kind == Ladder::creation) {
      out.add_coeff(a.raised(axis), std::sqrt(2.0 * a[axis] + 2.0) * root * c);
    } else if (a[axis] >= 1) {
      out.add_coeff(a.lowered(axis), std::sqrt(2.0 * a[axis]) * root * c);
    }
  }
  return out;
}

SpectralField apply_semigroup(const SpectralField& field, double r) {
  if (r < 0.0) throw std::invalid_argument("apply_semigroup: negative time");
  const BasisSpec& spec = field.spec();
  const double al = std::abs(spec.lambda);
  SpectralField out(spec);
  for (const auto& [a, c] : field.coeffs()) {
    const double ev = (2.0 * a.order() + spec.dim) * al;
    out.set_coeff(a, c * std::exp(-ev * r));
  }
  return out;
}

}  // namespace grushin
