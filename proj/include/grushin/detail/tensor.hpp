#pragma once

// Small dense tensor helpers shared by the spectral layers: mode-by-mode
// contraction of a row-major complex tensor against per-axis real matrices,
// and packing between simplex-truncated coefficient maps and dense boxes.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "grushin/spectral_field.hpp"

namespace grushin::detail {

struct AxisMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> m;  // row-major rows x cols

  double at(std::size_t r, std::size_t c) const { return m[r * cols + c]; }
};

// cur is row-major over axes [a0, a1, ..., a_{k-1}, trailing...] with
// a_i = mats[i].cols; each step maps axis i through mats[i].  The trailing
// block (cur.size() / prod cols) is carried through untouched.
inline std::vector<std::complex<double>> tensor_contract(
    std::vector<std::complex<double>> cur, std::span<const AxisMatrix> mats) {
  using C = std::complex<double>;
  std::size_t trailing = cur.size();
  for (const auto& mat : mats) trailing /= mat.cols;
  std::size_t leading = 1;
  for (const auto& mat : mats) {
    const std::size_t in = mat.cols, out = mat.rows;
    std::vector<C> next(leading * out * trailing, C{0.0, 0.0});
    for (std::size_t l = 0; l < leading; ++l) {
      const C* src = cur.data() + l * in * trailing;
      C* dst = next.data() + l * out * trailing;
      for (std::size_t k = 0; k < out; ++k) {
        const double* row = mat.m.data() + k * in;
        C* out_row = dst + k * trailing;
        for (std::size_t i = 0; i < in; ++i) {
          const double w = row[i];
          if (w == 0.0) continue;
          const C* in_row = src + i * trailing;
          for (std::size_t t = 0; t < trailing; ++t) out_row[t] += w * in_row[t];
        }
      }
    }
    cur = std::move(next);
    leading *= out;
  }
  return cur;
}

inline std::size_t box_index(const MultiIndex& a, std::size_t edge) {
  std::size_t flat = 0;
  for (int j = 0; j < a.dim(); ++j) flat = flat * edge + a[j];
  return flat;
}

// Keeps |alpha| <= spec.max_degree entries of a dense [edge]^n box.
inline SpectralField box_to_field(std::span<const std::complex<double>> box,
                                  const BasisSpec& spec, std::size_t edge) {
  SpectralField out(spec);
  for_each_multi_index(spec.dim, spec.max_degree, [&](const MultiIndex& a) {
    const std::complex<double> v = box[box_index(a, edge)];
    if (v != std::complex<double>{0.0, 0.0}) out.set_coeff(a, v);
  });
  return out;
}

inline std::vector<std::complex<double>> field_to_box(const SpectralField& f,
                                                      std::size_t edge) {
  std::size_t total = 1;
  for (int j = 0; j < f.spec().dim; ++j) total *= edge;
  std::vector<std::complex<double>> box(total, {0.0, 0.0});
  for (const auto& [a, v] : f.coeffs()) box[box_index(a, edge)] = v;
  return box;
}

}  // namespace grushin::detail
