#pragma once

// End-to-end transforms on R^n x R: discrete Fourier slicing along the last
// axis at half-offset frequencies (so no slice sits at lambda = 0), per-slice
// Hermite analysis on the native spatial grid, spectral multiplier action,
// and the Monte-Carlo evaluation of the group representation formula.

#include <cstdint>
#include <optional>
#include <vector>

#include "grushin/grid_function.hpp"
#include "grushin/riesz.hpp"
#include "grushin/spectral_field.hpp"

namespace grushin {

struct SliceOptions {
  double tail_tol = 1e-10;    // adaptive-degree tail energy target
  int max_degree_cap = 60;
  double resolve_limit = 2.4;  // max sqrt(|lambda|(2N+n)) * dx per axis
  double extent_frac = 0.95;   // max turning width / grid half extent
};

struct Slice {
  double lambda = 0.0;
  SpectralField field;
  double tail_energy = 0.0;  // grid-slice energy not captured by the basis
};

struct SlicedField {
  std::vector<Slice> slices;  // DFT bin order k = 0..M-1
  std::vector<Axis> axes;     // originating grid axes, eta last

  // d lambda / (2 pi) = 1/(M d eta); slice-space Parseval weight.
  double freq_weight() const;
  // freq_weight * sum (|coeffs|^2 + tail) ~ ||f||_2^2.
  double energy() const;
};

// Half-offset frequencies lambda_k = 2 pi (k - M/2 + 1/2) / (M d eta).
std::vector<double> slice_frequencies(const Axis& eta);

// Largest usable total degree for a slice at this frequency on this grid.
int slice_degree_cap(double lambda, std::span<const Axis> spatial,
                     const SliceOptions& opt = {});

SlicedField eta_fourier_slices(const GridFunction& f,
                               const SliceOptions& opt = {});

GridFunction slices_to_grid(const SlicedField& sliced);

// R_j f (or the star / truncated versions) through the slice pipeline.
GridFunction apply_grushin_riesz(const GridFunction& f, int axis, bool star,
                                 std::optional<TruncationWindow> window = {},
                                 const SliceOptions& opt = {});

// Pointwise Euclidean magnitude over all 2n component transforms.
GridFunction vector_riesz_magnitude(const GridFunction& f,
                                    const SliceOptions& opt = {});

struct McOptions {
  int r_nodes = 96;                // nodes per side of the r-quadrature
  std::size_t output_stride = 1;   // evaluate every k-th grid line per axis
  std::size_t chunk = 2048;        // samples per deterministic chunk
};

struct McGridResult {
  GridFunction estimate;
  GridFunction std_error;  // real-valued, per output point
  long samples = 0;
};

// Importance-sampled evaluation of the representation formula
//   R_j^eps f = (1/sqrt(pi)) int T_eps^{(z,t)} f . Z_j p_1(z,t) dz dt
// over the output grid, with per-point standard errors.
McGridResult apply_grushin_riesz_mc(const GridFunction& f, int axis, bool star,
                                    double epsilon, long samples,
                                    std::uint64_t seed,
                                    const McOptions& opt = {});

}  // namespace grushin
