#include "grushin/curve_transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "grushin/parallel.hpp"

namespace grushin {

namespace {

struct RNodes {
  std::vector<double> r;
  std::vector<double> w;  // trapezoid weights in log r
};

RNodes log_nodes(double epsilon, int nodes) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("log_nodes: epsilon outside (0,1]");
  RNodes out;
  if (epsilon == 1.0 || nodes < 2) return out;  // empty window
  const double lo = std::log(epsilon);
  const double hi = -lo;
  const double h = (hi - lo) / (nodes - 1);
  out.r.resize(nodes);
  out.w.resize(nodes);
  for (int k = 0; k < nodes; ++k) {
    out.r[k] = std::exp(lo + k * h);
    out.w[k] = (k == 0 || k == nodes - 1) ? 0.5 * h : h;
  }
  return out;
}

}  // namespace

GridFunction sheared_parabola_trunc(const GridFunction& f, double x, double t,
                                    double v, double epsilon, int nodes) {
  if (f.rank() != 2)
    throw std::invalid_argument("sheared_parabola_trunc: needs a 2-d grid");
  const RNodes rq = log_nodes(epsilon, nodes);
  GridFunction out(f.axes());
  auto dst = out.values();
  const std::size_t su = f.axis(1).count;
  parallel_chunks(f.axis(0).count, [&](std::size_t i) {
    double pos[2];
    const double u = f.axis(0).coord(i);
    for (std::size_t j = 0; j < su; ++j) {
      const double s = f.axis(1).coord(j);
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t k = 0; k < rq.r.size(); ++k) {
        const double r = rq.r[k];
        pos[0] = u - r * x;
        pos[1] = s - r * r * t - r * v * x;
        const std::complex<double> plus = f.sample(pos);
        pos[0] = u + r * x;
        pos[1] = s - r * r * t + r * v * x;
        acc += rq.w[k] * (plus - f.sample(pos));
      }
      dst[i * su + j] = acc;
    }
  });
  return out;
}

GridFunction hilbert_parabola_trunc(const GridFunction& f, double epsilon,
                                    int nodes) {
  return sheared_parabola_trunc(f, 1.0, 1.0, 0.0, epsilon, nodes);
}

std::vector<double> u_action(const HeisenbergPoint& p,
                             std::span<const double> xi_eta) {
  const int n = p.dim();
  if (static_cast<int>(xi_eta.size()) != n + 1)
    throw std::invalid_argument("u_action: point dimension mismatch");
  std::vector<double> out(n + 1);
  double x_dot_xi = 0.0, x_dot_y = 0.0;
  for (int j = 0; j < n; ++j) {
    out[j] = xi_eta[j] - p.y(j);
    x_dot_xi += p.x(j) * xi_eta[j];
    x_dot_y += p.x(j) * p.y(j);
  }
  out[n] = xi_eta[n] - p.t + 0.5 * x_dot_y - x_dot_xi;
  return out;
}

GridFunction t_epsilon_apply(const GridFunction& f, const CurveSpec& curve,
                             int nodes) {
  const int n = f.spatial_dim();
  if (curve.base.dim() != n)
    throw std::invalid_argument("t_epsilon_apply: curve dimension mismatch");
  const RNodes rq = log_nodes(curve.epsilon, nodes);
  const double tau =
      curve.base.t + 0.5 * [&] {
        double xy = 0.0;
        for (int j = 0; j < n; ++j) xy += curve.base.x(j) * curve.base.y(j);
        return xy;
      }();
  GridFunction out(f.axes());
  auto dst = out.values();
  const std::size_t count = f.size();
  const std::size_t chunk = 1024;
  const std::size_t chunks = (count + chunk - 1) / chunk;
  parallel_chunks(chunks, [&](std::size_t c) {
    std::vector<double> pt(n + 1), pos(n + 1);
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      f.coordinates(idx, pt);
      double x_dot_xi = 0.0;
      for (int j = 0; j < n; ++j) x_dot_xi += curve.base.x(j) * pt[j];
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t k = 0; k < rq.r.size(); ++k) {
        const double r = rq.r[k];
        const double shift_eta = r * r * tau;
        for (int j = 0; j < n; ++j) pos[j] = pt[j] + r * curve.base.y(j);
        pos[n] = pt[n] + r * x_dot_xi + shift_eta;
        const std::complex<double> plus = f.sample(pos);
        for (int j = 0; j < n; ++j) pos[j] = pt[j] - r * curve.base.y(j);
        pos[n] = pt[n] - r * x_dot_xi + shift_eta;
        acc += rq.w[k] * (plus - f.sample(pos));
      }
      dst[idx] = acc;
    }
  });
  return out;
}

std::complex<double> hilbert_curve_trunc(
    const std::function<std::complex<double>(const HeisenbergPoint&)>& F,
    const CurveSpec& curve, const HeisenbergPoint& at, int nodes) {
  const int n = curve.base.dim();
  if (at.dim() != n)
    throw std::invalid_argument("hilbert_curve_trunc: dimension mismatch");
  const RNodes rq = log_nodes(curve.epsilon, nodes);
  double twist = 0.0;  // Im(w . conj z)
  for (int j = 0; j < n; ++j)
    twist += (at.z[j] * std::conj(curve.base.z[j])).imag();
  HeisenbergPoint arg;
  arg.z.resize(n);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < rq.r.size(); ++k) {
    const double r = rq.r[k];
    const double s_shift = r * r * curve.base.t;
    for (int j = 0; j < n; ++j) arg.z[j] = at.z[j] - r * curve.base.z[j];
    arg.t = at.t - s_shift - r * twist;
    const std::complex<double> plus = F(arg);
    for (int j = 0; j < n; ++j) arg.z[j] = at.z[j] + r * curve.base.z[j];
    arg.t = at.t - s_shift + r * twist;
    acc += rq.w[k] * (plus - F(arg));
  }
  return acc;
}

GridFunction reduction_conjugate(const ReductionSpec& spec,
                                 const GridFunction& f) {
  switch (spec.kind) {
    case Reduction::rotation: {
      if (f.rank() != 3)
        throw std::invalid_argument("reduction_conjugate: rotation needs (x,y,s)");
      GridFunction out(f.axes());
      auto dst = out.values();
      const double c = std::cos(spec.theta), s = std::sin(spec.theta);
      parallel_chunks(f.axis(0).count, [&](std::size_t i) {
        const double x = f.axis(0).coord(i);
        double pos[3];
        for (std::size_t j = 0; j < f.axis(1).count; ++j) {
          const double y = f.axis(1).coord(j);
          pos[0] = c * x - s * y;
          pos[1] = s * x + c * y;
          for (std::size_t k = 0; k < f.axis(2).count; ++k) {
            pos[2] = f.axis(2).coord(k);
            dst[(i * f.axis(1).count + j) * f.axis(2).count + k] =
                f.sample(pos);
          }
        }
      });
      return out;
    }
    case Reduction::dilation: {
      if (!(spec.lambda1 > 0.0 && spec.lambda2 > 0.0))
        throw std::invalid_argument("reduction_conjugate: dilation factors <= 0");
      if (f.rank() != 2)
        throw std::invalid_argument("reduction_conjugate: dilation needs 2-d");
      GridFunction out(f.axes());
      auto dst = out.values();
      const std::size_t su = f.axis(1).count;
      for (std::size_t i = 0; i < f.axis(0).count; ++i) {
        double pos[2];
        pos[0] = spec.lambda1 * f.axis(0).coord(i);
        for (std::size_t j = 0; j < su; ++j) {
          pos[1] = spec.lambda2 * f.axis(1).coord(j);
          dst[i * su + j] = f.sample(pos);
        }
      }
      return out;
    }
    case Reduction::shear: {
      if (f.rank() != 2)
        throw std::invalid_argument("reduction_conjugate: shear needs 2-d");
      GridFunction out(f.axes());
      auto dst = out.values();
      const std::size_t su = f.axis(1).count;
      for (std::size_t i = 0; i < f.axis(0).count; ++i) {
        double pos[2];
        const double u = f.axis(0).coord(i);
        pos[0] = u;
        for (std::size_t j = 0; j < su; ++j) {
          pos[1] = f.axis(1).coord(j) + spec.a * u;
          dst[i * su + j] = f.sample(pos);
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("reduction_conjugate: unknown kind");
}

}  // namespace grushin
