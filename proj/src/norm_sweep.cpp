#include "grushin/norm_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "grushin/detail/tensor.hpp"
#include "grushin/hermite.hpp"
#include "grushin/parallel.hpp"
#include "grushin/riesz.hpp"
#include "grushin/rng.hpp"

namespace grushin {

namespace {

constexpr double kPi = std::numbers::pi;

// The sweep family lives on a fixed frequency comb: half-offset bins of the
// 2 pi-periodic final axis, populated at |lambda| in {0.5, 1.5} under a
// Gaussian profile.  With only these bins, |f|^2 and |f|^4 are trig
// polynomials below the grid Nyquist, so the final-axis quadrature is exact:
// the axis carries M+1 points over the closed period and the trapezoid rule
// there is the periodic sum.
struct FamilyParams {
  std::vector<double> lambdas{0.5, 1.5};  // positive bins
  std::vector<double> weights{std::exp(-0.125), std::exp(-1.125)};
  int degree = 2;
  std::size_t m_eta = 8;
  double eta0 = -kPi;
  double d_eta() const { return 2.0 * kPi / static_cast<double>(m_eta); }
};

struct GridPolicy {
  double half;
  std::size_t points;
};

GridPolicy xi_policy(int n) {
  switch (n) {
    case 1: return {4.5, 47};
    case 2: return {4.8, 53};
    case 3: return {5.0, 58};
    case 4: return {5.2, 40};
    default:
      throw std::invalid_argument("sweep_axes: dimension outside 1..4");
  }
}

double int_pow(double x, double p) {
  if (p == 2.0) return x * x;
  if (p == 4.0) return (x * x) * (x * x);
  return std::pow(x, p);
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string grid_hash_string(int n, TestFamily family,
                             const std::vector<Axis>& axes,
                             const FamilyParams& fam) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, &n, sizeof(n));
  const int fam_id = static_cast<int>(family);
  h = fnv1a(h, &fam_id, sizeof(fam_id));
  for (const auto& ax : axes) {
    h = fnv1a(h, &ax.lo, sizeof(ax.lo));
    h = fnv1a(h, &ax.hi, sizeof(ax.hi));
    h = fnv1a(h, &ax.count, sizeof(ax.count));
  }
  h = fnv1a(h, &fam.degree, sizeof(fam.degree));
  for (double l : fam.lambdas) h = fnv1a(h, &l, sizeof(l));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

// ---- streamed trial engine ------------------------------------------------

// Everything below works per leading-axis row so no full grid is ever
// materialized; trials run serially inside and in parallel across.

struct BinBasis {
  double lambda;
  // synthesis matrices, (points x degrees), axes 1..n-1 then the axis-0
  // matrix kept as full (degrees x points) for column access
  std::vector<detail::AxisMatrix> synth_rest;
  detail::AxisMatrix synth0;
  // analysis matrices (degrees x points, with dx), axis 0 separate
  std::vector<detail::AxisMatrix> ana_rest;
  detail::AxisMatrix ana0;
  std::size_t edge;  // degrees + 1 of the analysis/constructed boxes
};

struct EngineSetup {
  int n;
  std::vector<Axis> axes;
  FamilyParams fam;
  std::vector<std::vector<double>> coords;  // spatial axes
  std::vector<BinBasis> bins;
  std::size_t rest = 1;        // spatial points per row (axes 1..n-1)
  std::size_t rows = 1;        // axis-0 points
  std::vector<double> rest_w;  // trapezoid factors for axes 1..n-1
  std::vector<Complex> phase;  // e^{-i lambda_k eta_m}, bins x M
  double cell = 1.0;           // product of spatial steps times d eta
};

EngineSetup make_setup(int n, double grid_scale, int degree_cap) {
  EngineSetup s;
  s.n = n;
  s.axes = sweep_axes(n, grid_scale);
  s.fam = FamilyParams{};
  s.rows = s.axes[0].count;
  s.coords.resize(n);
  for (int a = 0; a < n; ++a) {
    s.coords[a].resize(s.axes[a].count);
    for (std::size_t i = 0; i < s.axes[a].count; ++i)
      s.coords[a][i] = s.axes[a].coord(i);
    if (a > 0) s.rest *= s.axes[a].count;
  }
  s.cell = s.fam.d_eta();
  for (int a = 0; a < n; ++a) s.cell *= s.axes[a].step();

  s.rest_w.assign(s.rest, 1.0);
  {
    std::size_t stride = s.rest;
    for (int a = 1; a < n; ++a) {
      stride /= s.axes[a].count;
      for (std::size_t p = 0; p < s.rest; ++p) {
        const std::size_t idx = (p / stride) % s.axes[a].count;
        if (idx == 0 || idx + 1 == s.axes[a].count) s.rest_w[p] *= 0.5;
      }
    }
  }

  s.bins.resize(s.fam.lambdas.size());
  for (std::size_t b = 0; b < s.bins.size(); ++b) {
    BinBasis& bin = s.bins[b];
    bin.lambda = s.fam.lambdas[b];
    bin.edge = static_cast<std::size_t>(degree_cap) + 1;
    const int kmax = degree_cap;
    bin.synth0 = hermite_axis_matrix(s.coords[0], bin.lambda, kmax);
    bin.ana0 = bin.synth0;
    for (auto& v : bin.ana0.m) v *= s.axes[0].step();
    for (int a = 1; a < n; ++a) {
      detail::AxisMatrix syn = hermite_axis_matrix(s.coords[a], bin.lambda, kmax);
      detail::AxisMatrix ana = syn;
      for (auto& v : ana.m) v *= s.axes[a].step();
      // synthesis wants (points x degrees)
      detail::AxisMatrix t;
      t.rows = syn.cols;
      t.cols = syn.rows;
      t.m.resize(t.rows * t.cols);
      for (std::size_t r = 0; r < syn.rows; ++r)
        for (std::size_t c = 0; c < syn.cols; ++c)
          t.m[c * syn.rows + r] = syn.m[r * syn.cols + c];
      bin.synth_rest.push_back(std::move(t));
      bin.ana_rest.push_back(std::move(ana));
    }
  }

  const std::size_t m = s.fam.m_eta;
  s.phase.resize(s.bins.size() * m);
  for (std::size_t b = 0; b < s.bins.size(); ++b)
    for (std::size_t j = 0; j < m; ++j)
      s.phase[b * m + j] = std::polar(
          1.0, -s.fam.lambdas[b] * (s.fam.eta0 + s.fam.d_eta() * j));
  return s;
}

// row synthesis: dense box -> rest values for one axis-0 index
std::vector<Complex> synth_row(const EngineSetup& s, const BinBasis& bin,
                               std::span<const Complex> box, std::size_t row) {
  std::vector<detail::AxisMatrix> mats;
  detail::AxisMatrix col;
  col.rows = 1;
  col.cols = bin.edge;
  col.m.resize(bin.edge);
  for (std::size_t k = 0; k < bin.edge; ++k)
    col.m[k] = bin.synth0.at(k, row);
  mats.push_back(std::move(col));
  for (const auto& t : bin.synth_rest) mats.push_back(t);
  return detail::tensor_contract(std::vector<Complex>(box.begin(), box.end()),
                                 mats);
}

// hermitian inverse transform: slice values -> real samples over eta
// f(p, m) = (2/(M d eta)) sum_bins Re(S_b[p] phase[b][m])
void rows_to_samples(const EngineSetup& s,
                     const std::vector<std::vector<Complex>>& slice_rows,
                     std::span<double> out /* rest x (M+1) */) {
  const std::size_t m = s.fam.m_eta;
  const double scale = 2.0 / (static_cast<double>(m) * s.fam.d_eta());
  for (std::size_t p = 0; p < s.rest; ++p) {
    double* dst = out.data() + p * (m + 1);
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t b = 0; b < slice_rows.size(); ++b) {
        const Complex v = slice_rows[b][p] * s.phase[b * m + j];
        acc += v.real();
      }
      dst[j] = scale * acc;
    }
    dst[m] = dst[0];  // closed period
  }
}

// forward transform of one row of samples back into the positive bins
// S_b[p] = d eta sum_m f(p,m) conj(phase[b][m])
void samples_to_rows(const EngineSetup& s, std::span<const double> samples,
                     std::vector<std::vector<Complex>>& slice_rows) {
  const std::size_t m = s.fam.m_eta;
  for (std::size_t p = 0; p < s.rest; ++p) {
    const double* src = samples.data() + p * (m + 1);
    for (std::size_t b = 0; b < slice_rows.size(); ++b) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j)
        acc += src[j] * std::conj(s.phase[b * m + j]);
      slice_rows[b][p] = s.fam.d_eta() * acc;
    }
  }
}

// accumulate Galerkin analysis of one row into the per-bin boxes
void accumulate_analysis(const EngineSetup& s, const BinBasis& bin,
                         std::span<const Complex> slice_row, std::size_t row,
                         std::span<Complex> box) {
  std::vector<detail::AxisMatrix> mats(bin.ana_rest.begin(),
                                       bin.ana_rest.end());
  std::vector<Complex> inner = detail::tensor_contract(
      std::vector<Complex>(slice_row.begin(), slice_row.end()), mats);
  for (std::size_t k = 0; k < bin.edge; ++k) {
    const double w = bin.ana0.at(k, row);
    if (w == 0.0) continue;
    Complex* dst = box.data() + k * inner.size();
    for (std::size_t t = 0; t < inner.size(); ++t) dst[t] += w * inner[t];
  }
}

// random family coefficients for the positive bins, dense boxes
std::vector<std::vector<Complex>> gh_coefficients(const EngineSetup& s,
                                                  std::uint64_t seed,
                                                  long trial) {
  const CounterRng rng(seed, mix64(0x9aull ^ static_cast<std::uint64_t>(s.n)));
  const std::size_t edge =
      static_cast<std::size_t>(s.fam.degree) + 1;
  std::vector<std::vector<Complex>> boxes(s.bins.size());
  for (std::size_t b = 0; b < s.bins.size(); ++b) {
    std::size_t total = 1;
    for (int a = 0; a < s.n; ++a) total *= edge;
    boxes[b].assign(total, Complex{0.0, 0.0});
    std::uint32_t slot = static_cast<std::uint32_t>(b) * 4096;
    for_each_multi_index(s.n, s.fam.degree, [&](const MultiIndex& idx) {
      const double damp = std::pow(0.5, idx.order());
      const double re = rng.normal(static_cast<std::uint64_t>(trial), slot);
      const double im = rng.normal(static_cast<std::uint64_t>(trial), slot + 2);
      slot += 4;
      boxes[b][detail::box_index(idx, edge)] =
          s.fam.weights[b] * damp * Complex{re, im};
    });
  }
  return boxes;
}

struct BumpSpec {
  std::vector<double> center;  // n spatial + eta
  std::vector<double> inv2sig;
  double amp;
};

std::vector<BumpSpec> bump_specs(const EngineSetup& s, std::uint64_t seed,
                                 long trial) {
  const CounterRng rng(seed, mix64(0xb3ull ^ static_cast<std::uint64_t>(s.n)));
  std::vector<BumpSpec> out(5);
  std::uint32_t slot = 0;
  const double half = 0.5 * (s.axes[0].hi - s.axes[0].lo);
  for (auto& b : out) {
    b.center.resize(s.n + 1);
    b.inv2sig.resize(s.n + 1);
    for (int a = 0; a < s.n; ++a) {
      b.center[a] =
          0.45 * half * (2.0 * rng.uniform(trial, slot++) - 1.0);
      const double sig = 0.5 + 0.6 * rng.uniform(trial, slot++);
      b.inv2sig[a] = 1.0 / (2.0 * sig * sig);
    }
    b.center[s.n] = 1.2 * (2.0 * rng.uniform(trial, slot++) - 1.0);
    const double sig_eta = 0.35 + 0.25 * rng.uniform(trial, slot++);
    b.inv2sig[s.n] = 1.0 / (2.0 * sig_eta * sig_eta);
    b.amp = (rng.uniform(trial, slot) < 0.5 ? -1.0 : 1.0) *
            (0.3 + 0.7 * rng.uniform(trial, slot + 1));
    slot += 2;
  }
  return out;
}

void bump_row_samples(const EngineSetup& s, const std::vector<BumpSpec>& bumps,
                      std::size_t row, std::span<double> out) {
  const std::size_t m = s.fam.m_eta;
  std::vector<double> pos(s.n + 1);
  pos[0] = s.coords[0][row];
  for (std::size_t p = 0; p < s.rest; ++p) {
    std::size_t q = p;
    for (int a = s.n - 1; a >= 1; --a) {
      pos[a] = s.coords[a][q % s.axes[a].count];
      q /= s.axes[a].count;
    }
    for (std::size_t j = 0; j <= m; ++j) {
      pos[s.n] = s.fam.eta0 + s.fam.d_eta() * static_cast<double>(j % m);
      double acc = 0.0;
      for (const auto& b : bumps) {
        double e = 0.0;
        for (int a = 0; a <= s.n; ++a) {
          const double d = pos[a] - b.center[a];
          e += d * d * b.inv2sig[a];
        }
        acc += b.amp * std::exp(-e);
      }
      out[p * (m + 1) + j] = acc;
    }
  }
}

struct TransformPlan {
  std::vector<std::pair<int, bool>> components;  // (axis, star)
  std::optional<TruncationWindow> window;
};

TransformPlan make_plan(const SweepTag& tag, int n) {
  TransformPlan plan;
  if (tag.epsilon) plan.window.emplace(*tag.epsilon);
  switch (tag.op) {
    case TransformOp::identity:
      break;
    case TransformOp::riesz:
      plan.components.emplace_back(tag.axis, false);
      break;
    case TransformOp::riesz_star:
      plan.components.emplace_back(tag.axis, true);
      break;
    case TransformOp::vector_riesz:
      for (int a = 0; a < n; ++a) {
        plan.components.emplace_back(a, false);
        plan.components.emplace_back(a, true);
      }
      break;
  }
  return plan;
}

double trial_ratio_impl(const SweepTag& tag, int n, double p,
                        std::uint64_t seed, long trial, TestFamily family,
                        double grid_scale, GridFunction* keep_field) {
  const int degree_cap = family == TestFamily::gaussian_hermite
                             ? FamilyParams{}.degree
                             : 10;
  EngineSetup s = make_setup(n, grid_scale, degree_cap);
  const std::size_t m = s.fam.m_eta;
  const std::size_t bin_count = s.bins.size();

  std::vector<std::vector<Complex>> constructed;
  std::vector<BumpSpec> bumps;
  if (family == TestFamily::gaussian_hermite)
    constructed = gh_coefficients(s, seed, trial);
  else
    bumps = bump_specs(s, seed, trial);

  const std::size_t edge = static_cast<std::size_t>(degree_cap) + 1;
  std::size_t box_total = 1;
  for (int a = 0; a < n; ++a) box_total *= edge;

  // pass A: ||f||_p and measured coefficients
  std::vector<std::vector<Complex>> measured(
      bin_count, std::vector<Complex>(box_total, Complex{0.0, 0.0}));
  std::vector<double> samples(s.rest * (m + 1));
  std::vector<std::vector<Complex>> slice_rows(
      bin_count, std::vector<Complex>(s.rest));
  double den_sum = 0.0;

  GridFunction field = keep_field ? GridFunction(s.axes) : GridFunction();
  for (std::size_t row = 0; row < s.rows; ++row) {
    if (family == TestFamily::gaussian_hermite) {
      for (std::size_t b = 0; b < bin_count; ++b)
        slice_rows[b] = synth_row(s, s.bins[b], constructed[b], row);
      rows_to_samples(s, slice_rows, samples);
    } else {
      bump_row_samples(s, bumps, row, samples);
      samples_to_rows(s, samples, slice_rows);
    }
    if (family == TestFamily::gaussian_hermite)
      samples_to_rows(s, samples, slice_rows);  // measured, not constructed
    for (std::size_t b = 0; b < bin_count; ++b)
      accumulate_analysis(s, s.bins[b], slice_rows[b], row, measured[b]);

    const double w0 = (row == 0 || row + 1 == s.rows) ? 0.5 : 1.0;
    for (std::size_t q = 0; q < s.rest; ++q) {
      const double wq = w0 * s.rest_w[q];
      const double* src = samples.data() + q * (m + 1);
      double acc = 0.5 * (int_pow(std::abs(src[0]), p) +
                          int_pow(std::abs(src[m]), p));
      for (std::size_t j = 1; j < m; ++j) acc += int_pow(std::abs(src[j]), p);
      den_sum += wq * acc;
    }
    if (keep_field) {
      auto dst = keep_field ? field.values() : std::span<Complex>{};
      for (std::size_t q = 0; q < s.rest; ++q)
        for (std::size_t j = 0; j <= m; ++j)
          dst[(row * s.rest + q) * (m + 1) + j] =
              Complex{samples[q * (m + 1) + j], 0.0};
    }
  }
  den_sum *= s.cell;
  const double den = std::pow(den_sum, 1.0 / p);
  if (keep_field) *keep_field = std::move(field);
  if (den == 0.0 || !std::isfinite(den)) return std::nan("");

  const TransformPlan plan = make_plan(tag, n);
  if (plan.components.empty()) return 1.0;  // identity

  // transform measured coefficients per bin and component
  const std::size_t out_edge = edge + 1;  // creation raises the degree
  std::size_t out_total = 1;
  for (int a = 0; a < n; ++a) out_total *= out_edge;
  std::vector<std::vector<std::vector<Complex>>> comp_boxes(
      plan.components.size(),
      std::vector<std::vector<Complex>>(bin_count));
  for (std::size_t b = 0; b < bin_count; ++b) {
    SpectralField base(BasisSpec(n, s.bins[b].lambda, degree_cap));
    for_each_multi_index(n, degree_cap, [&](const MultiIndex& idx) {
      const Complex v = measured[b][detail::box_index(idx, edge)];
      if (v != Complex{0.0, 0.0}) base.set_coeff(idx, v);
    });
    for (std::size_t c = 0; c < plan.components.size(); ++c) {
      const auto [axis, star] = plan.components[c];
      const SpectralField g =
          plan.window ? apply_truncated_riesz(base, axis, star, *plan.window)
                      : apply_riesz(base, axis, star);
      std::vector<Complex> box(out_total, Complex{0.0, 0.0});
      for (const auto& [idx, v] : g.coeffs())
        box[detail::box_index(idx, out_edge)] = v;
      comp_boxes[c][b] = std::move(box);
    }
  }

  // shared bases at the raised degree
  EngineSetup s_out = make_setup(n, grid_scale, degree_cap + 1);

  // pass B: ||op f||_p
  std::vector<double> mag2(s.rest * (m + 1));
  double num_sum = 0.0;
  for (std::size_t row = 0; row < s.rows; ++row) {
    std::fill(mag2.begin(), mag2.end(), 0.0);
    for (std::size_t c = 0; c < plan.components.size(); ++c) {
      for (std::size_t b = 0; b < bin_count; ++b)
        slice_rows[b] = synth_row(s_out, s_out.bins[b], comp_boxes[c][b], row);
      rows_to_samples(s_out, slice_rows, samples);
      for (std::size_t i = 0; i < mag2.size(); ++i)
        mag2[i] += samples[i] * samples[i];
    }
    const double w0 = (row == 0 || row + 1 == s.rows) ? 0.5 : 1.0;
    for (std::size_t q = 0; q < s.rest; ++q) {
      const double wq = w0 * s.rest_w[q];
      const double* src = mag2.data() + q * (m + 1);
      double acc = 0.5 * (int_pow(std::sqrt(src[0]), p) +
                          int_pow(std::sqrt(src[m]), p));
      for (std::size_t j = 1; j < m; ++j)
        acc += int_pow(std::sqrt(src[j]), p);
      num_sum += wq * acc;
    }
  }
  num_sum *= s.cell;
  return std::pow(num_sum, 1.0 / p) / den;
}

}  // namespace

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p < 1");
  double acc = 0.0;
  const auto vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i)
    acc += f.trapezoid_weight(i) * int_pow(std::abs(vals[i]), p);
  return std::pow(acc, 1.0 / p);
}

std::vector<Axis> sweep_axes(int n, double grid_scale) {
  if (!(grid_scale > 0.0))
    throw std::invalid_argument("sweep_axes: grid_scale <= 0");
  const GridPolicy pol = xi_policy(n);
  const FamilyParams fam;
  std::vector<Axis> axes(n + 1);
  const auto points = std::max<std::size_t>(
      8, static_cast<std::size_t>(std::lround(pol.points * grid_scale)));
  for (int a = 0; a < n; ++a) axes[a] = Axis{-pol.half, pol.half, points};
  axes[n] = Axis{fam.eta0, fam.eta0 + 2.0 * kPi, fam.m_eta + 1};
  return axes;
}

GridFunction random_test_function(int n, std::uint64_t seed, TestFamily family,
                                  double grid_scale) {
  SweepTag identity{TransformOp::identity, 0, {}};
  GridFunction field;
  trial_ratio_impl(identity, n, 2.0, seed, 0, family, grid_scale, &field);
  const double nrm = lp_norm(field, 2.0);
  if (nrm > 0.0)
    for (auto& v : field.values()) v /= nrm;
  return field;
}

double sweep_trial_ratio(const SweepTag& tag, int n, double p,
                         std::uint64_t seed, long trial, TestFamily family,
                         double grid_scale) {
  return trial_ratio_impl(tag, n, p, seed, trial, family, grid_scale, nullptr);
}

SweepRecord estimate_norm_lower_bound(const SweepTag& tag, int n, double p,
                                      int trials, std::uint64_t seed,
                                      TestFamily family, double grid_scale) {
  if (trials < 1)
    throw std::invalid_argument("estimate_norm_lower_bound: trials < 1");
  std::vector<double> ratios(trials, std::nan(""));
  parallel_chunks(trials, [&](std::size_t t) {
    ratios[t] = trial_ratio_impl(tag, n, p, seed, static_cast<long>(t), family,
                                 grid_scale, nullptr);
  });

  SweepRecord rec;
  rec.n = n;
  rec.p = p;
  rec.epsilon = tag.epsilon.value_or(0.0);
  rec.seed = seed;
  {
    const FamilyParams fam;
    rec.grid_hash = grid_hash_string(n, family, sweep_axes(n, grid_scale), fam);
  }
  std::vector<double> valid;
  for (int t = 0; t < trials; ++t) {
    if (!std::isfinite(ratios[t])) continue;
    valid.push_back(ratios[t]);
    if (ratios[t] > rec.estimate) {
      rec.estimate = ratios[t];
      rec.argmax_trial = t;
    }
  }
  if (valid.empty())
    throw std::runtime_error("estimate_norm_lower_bound: no valid trials");

  // bootstrap spread of the max
  const int boots = 64;
  const CounterRng rng(seed, 0xb001);
  double bsum = 0.0, bsq = 0.0;
  for (int b = 0; b < boots; ++b) {
    double mx = 0.0;
    for (std::size_t t = 0; t < valid.size(); ++t) {
      const std::size_t pick = static_cast<std::size_t>(
          rng.uniform(b, static_cast<std::uint32_t>(t)) * valid.size());
      mx = std::max(mx, valid[std::min(pick, valid.size() - 1)]);
    }
    bsum += mx;
    bsq += mx * mx;
  }
  const double bmean = bsum / boots;
  rec.std_error = std::sqrt(std::max(0.0, bsq / boots - bmean * bmean));
  return rec;
}

std::vector<SweepRecord> dimension_sweep(const SweepConfig& config,
                                         std::ostream* log) {
  std::vector<SweepRecord> records;
  for (int n : config.dims) {
    for (double p : config.exponents) {
      try {
        records.push_back(estimate_norm_lower_bound(
            config.tag, n, p, config.trials, config.seed, config.family,
            config.grid_scale));
      } catch (const std::exception& e) {
        if (log)
          (*log) << "sweep cell n=" << n << " p=" << p
                 << " failed: " << e.what() << '\n';
      }
    }
  }
  return records;
}

}  // namespace grushin
