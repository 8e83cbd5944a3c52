#pragma once

// Complex samples on a uniform tensor grid with axis metadata, cubic
// off-grid reads with zero extension, and a little-endian binary container
// (axis header + row-major float64 re/im pairs).

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace grushin {

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  double step() const { return (hi - lo) / static_cast<double>(count - 1); }
  double coord(std::size_t i) const { return lo + step() * static_cast<double>(i); }
};

class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::vector<Axis> axes);

  std::size_t rank() const { return axes_.size(); }
  int spatial_dim() const { return static_cast<int>(axes_.size()) - 1; }
  const std::vector<Axis>& axes() const { return axes_; }
  const Axis& axis(std::size_t a) const { return axes_[a]; }
  std::size_t size() const { return values_.size(); }

  std::span<std::complex<double>> values() { return values_; }
  std::span<const std::complex<double>> values() const { return values_; }

  // Row-major flat index, last axis fastest.
  std::size_t flat_index(std::span<const std::size_t> idx) const;
  void unflatten(std::size_t flat, std::span<std::size_t> idx) const;
  std::complex<double>& at(std::span<const std::size_t> idx);
  const std::complex<double>& at(std::span<const std::size_t> idx) const;

  // Coordinates of a flat point.
  void coordinates(std::size_t flat, std::span<double> out) const;

  // Separable 4-point cubic interpolation; zero outside the grid.
  std::complex<double> sample(std::span<const double> pos) const;

  // Trapezoid weight (product of per-axis 1 or 1/2 endpoint factors times
  // the cell volume) for the flat point.
  double trapezoid_weight(std::size_t flat) const;
  double cell_volume() const;

  // L2 norm under the trapezoid rule.
  double l2_norm() const;

  void write(std::ostream& os, const std::string& meta_json = "{}") const;
  void write_file(const std::string& path,
                  const std::string& meta_json = "{}") const;
  static GridFunction read(std::istream& is, std::string* meta_json = nullptr);
  static GridFunction read_file(const std::string& path,
                                std::string* meta_json = nullptr);

 private:
  std::vector<Axis> axes_;
  std::vector<std::complex<double>> values_;
  std::vector<std::size_t> strides_;
};

}  // namespace grushin
