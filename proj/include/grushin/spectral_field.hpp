#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "grushin/multi_index.hpp"

namespace grushin {

using Complex = std::complex<double>;

// Finite scaled-Hermite basis: dimension n, frequency lambda != 0 and a cap
// N on the total degree |alpha|.  The basis size is C(N+n, n).
struct BasisSpec {
  int dim = 1;
  double lambda = 1.0;
  int max_degree = 0;

  BasisSpec() = default;
  BasisSpec(int n, double lambda_, int n_max)
      : dim(n), lambda(lambda_), max_degree(n_max) {
    if (n < 1) throw std::invalid_argument("BasisSpec: dim < 1");
    if (lambda == 0.0 || !std::isfinite(lambda))
      throw std::invalid_argument("BasisSpec: lambda must be nonzero finite");
    if (n_max < 0) throw std::invalid_argument("BasisSpec: max_degree < 0");
  }

  std::uint64_t basis_size() const {
    std::uint64_t r = 1;
    for (int k = 1; k <= dim; ++k)
      r = r * static_cast<std::uint64_t>(max_degree + k) / k;
    return r;
  }

  bool operator==(const BasisSpec&) const = default;
};

// One lambda-slice in coefficient form: a sparse map alpha -> coefficient
// over the orthonormal basis, so the L2 norm is the Euclidean norm of the
// coefficient vector.
class SpectralField {
 public:
  using Coeffs = std::map<MultiIndex, Complex>;

  SpectralField() = default;
  explicit SpectralField(BasisSpec spec) : spec_(spec) {}

  const BasisSpec& spec() const { return spec_; }
  const Coeffs& coeffs() const { return c_; }
  bool empty() const { return c_.empty(); }

  Complex coeff(const MultiIndex& a) const {
    auto it = c_.find(a);
    return it == c_.end() ? Complex{0.0, 0.0} : it->second;
  }

  void set_coeff(const MultiIndex& a, Complex v) {
    if (a.dim() != spec_.dim)
      throw std::invalid_argument("SpectralField: index dimension mismatch");
    if (a.order() > spec_.max_degree)
      throw std::invalid_argument("SpectralField: |alpha| exceeds max_degree");
    c_[a] = v;
  }

  void add_coeff(const MultiIndex& a, Complex v) {
    if (v == Complex{0.0, 0.0}) return;
    auto it = c_.find(a);
    if (it == c_.end())
      set_coeff(a, v);
    else
      it->second += v;
  }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& [a, v] : c_) s += std::norm(v);
    return s;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  SpectralField& operator*=(Complex s) {
    for (auto& [a, v] : c_) v *= s;
    return *this;
  }
  SpectralField& operator-=(const SpectralField& o) {
    for (const auto& [a, v] : o.c_) add_coeff(a, -v);
    return *this;
  }
  SpectralField& operator+=(const SpectralField& o) {
    for (const auto& [a, v] : o.c_) add_coeff(a, v);
    return *this;
  }

 private:
  BasisSpec spec_;
  Coeffs c_;
};

}  // namespace grushin
