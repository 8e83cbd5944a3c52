#pragma once

// Scaled Hermite functions Phi_alpha^lambda: stable pointwise evaluation,
// Gauss-Hermite analysis/synthesis between samples and coefficients, and the
// ladder and semigroup actions on coefficients.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "grushin/detail/tensor.hpp"
#include "grushin/spectral_field.hpp"

namespace grushin {

// Normalized 1-d Hermite function
//   h_k(x) = (2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2},
// evaluated by the three-term recurrence on h_k itself with a rescaling
// guard, so it neither overflows nor loses the far tail up to k ~ 200,
// |x| <= 30.
double eval_hermite_1d(int k, double x);

// All of h_0..h_kmax at x into out (out.size() >= kmax+1).
void eval_hermite_upto(int kmax, double x, std::span<double> out);

// Phi_alpha^lambda(xi) = |lambda|^{n/4} prod_j h_{alpha_j}(sqrt|lambda| xi_j).
double eval_phi(const MultiIndex& alpha, double lambda,
                std::span<const double> xi);

// Tensor Gauss-Hermite rule in lambda-scaled coordinates.  weights already
// absorb the Gaussian of the rule and the 1/sqrt|lambda| substitution, so
//   int f(xi) Phi(xi) dxi  ~=  sum_i weights_i * f(nodes_i) Phi(nodes_i)
// and the rule is exact when f Phi is (poly of degree <= 2N+...) x Gaussian.
struct QuadratureGrid {
  std::vector<std::vector<double>> nodes;    // per axis, xi coordinates
  std::vector<std::vector<double>> weights;  // per axis
  double lambda_scale = 1.0;                 // sqrt|lambda|

  // points_per_axis = 0 picks the default 2*max_degree + 2.
  static QuadratureGrid gauss_hermite(const BasisSpec& spec,
                                      int points_per_axis = 0);

  int dim() const { return static_cast<int>(nodes.size()); }
  std::size_t total_points() const;
  // Coordinates of the flat tensor point (row-major, last axis fastest).
  void point(std::size_t flat, std::span<double> out) const;
};

// Samples a callback on the tensor grid (row-major).
std::vector<Complex> sample_on_grid(
    const QuadratureGrid& grid,
    const std::function<Complex(std::span<const double>)>& f);

// coeffs[alpha] = int f(xi) Phi_alpha^lambda(xi) dxi by the tensor rule.
SpectralField analyze(std::span<const Complex> samples,
                      const QuadratureGrid& grid, const BasisSpec& spec);

// Pointwise sum of coeff[alpha] Phi_alpha^lambda at one point.
Complex synthesize_at(const SpectralField& field, std::span<const double> xi);

// points holds flat coordinates [p0_0..p0_{n-1}, p1_0, ...].
std::vector<Complex> synthesize(const SpectralField& field,
                                std::span<const double> points);

// Per-axis basis matrix B[k][i] = |lambda|^{1/4} h_k(sqrt|lambda| xi_i),
// optionally times per-node quadrature weights (analysis form).
detail::AxisMatrix hermite_axis_matrix(std::span<const double> xi_nodes,
                                       double lambda, int kmax,
                                       std::span<const double> weights = {});

enum class Ladder { creation, annihilation };

// Creation moves alpha -> alpha+e_j with factor sqrt(2 alpha_j + 2) sqrt|lambda|
// (the result's max_degree grows to N+1); annihilation moves alpha -> alpha-e_j
// with factor sqrt(2 alpha_j) sqrt|lambda|, dropping alpha_j = 0 terms.
SpectralField apply_ladder(const SpectralField& field, int axis, Ladder kind);

// Multiplies the coefficient at alpha by e^{-(2|alpha|+n)|lambda| r}, r >= 0.
SpectralField apply_semigroup(const SpectralField& field, double r);

}  // namespace grushin
