#pragma once

// Empirical operator-norm lower bounds: reproducible random test fields,
// grid L^p norms, and max-over-trials ratio estimates swept across the
// dimension and the exponent.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grushin/grid_function.hpp"

namespace grushin {

// Trapezoid quadrature of |f|^p over the grid, p-th root.
double lp_norm(const GridFunction& f, double p);

enum class TestFamily { gaussian_hermite, bump_mix };

// Axes used by random_test_function and the sweep for dimension n.
std::vector<Axis> sweep_axes(int n, double grid_scale = 1.0);

// Reproducible random field on the sweep grid, normalized to unit L2 norm.
// gaussian-hermite: random low-degree Hermite coefficients per frequency
// slice under a Gaussian profile (band-limited by construction);
// bump-mix: a sum of random anisotropic Gaussian bumps.
GridFunction random_test_function(int n, std::uint64_t seed, TestFamily family,
                                  double grid_scale = 1.0);

enum class TransformOp { identity, riesz, riesz_star, vector_riesz };

struct SweepTag {
  TransformOp op = TransformOp::vector_riesz;
  int axis = 0;
  std::optional<double> epsilon;  // truncated transforms when set
};

struct SweepRecord {
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;  // 0 = untruncated
  double estimate = 0.0;
  double std_error = 0.0;  // bootstrap spread of the max over trials
  std::uint64_t seed = 0;
  long argmax_trial = -1;
  std::string grid_hash;
};

// ||op f||_p / ||f||_p for one reproducible trial.
double sweep_trial_ratio(const SweepTag& tag, int n, double p,
                         std::uint64_t seed, long trial,
                         TestFamily family = TestFamily::gaussian_hermite,
                         double grid_scale = 1.0);

// Max of sweep_trial_ratio over trials; a certified lower bound for the
// operator norm on the discretized space.
SweepRecord estimate_norm_lower_bound(
    const SweepTag& tag, int n, double p, int trials, std::uint64_t seed,
    TestFamily family = TestFamily::gaussian_hermite, double grid_scale = 1.0);

struct SweepConfig {
  std::vector<int> dims{1};
  std::vector<double> exponents{2.0};
  int trials = 1;
  std::uint64_t seed = 1;
  SweepTag tag;
  TestFamily family = TestFamily::gaussian_hermite;
  double grid_scale = 1.0;
};

// Full factorial sweep; per-cell failures are reported to log and skipped.
std::vector<SweepRecord> dimension_sweep(const SweepConfig& config,
                                         std::ostream* log = nullptr);

}  // namespace grushin
