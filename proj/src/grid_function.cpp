#include "grushin/grid_function.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace grushin {

namespace {

constexpr char kMagic[8] = {'G', 'R', 'U', 'S', 'H', 'G', 'R', 'D'};
constexpr std::uint32_t kFormatVersion = 1;

// 4-point Lagrange weights for fractional offset s in [0,1] relative to the
// stencil {-1, 0, 1, 2}; exact on cubics.
inline std::array<double, 4> cubic_weights(double s) {
  const double s1 = s - 1.0, s2 = s - 2.0, sp = s + 1.0;
  return {-s * s1 * s2 / 6.0, sp * s1 * s2 / 2.0, -sp * s * s2 / 2.0,
          sp * s * s1 / 6.0};
}

template <typename T>
void write_raw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("GridFunction: truncated stream");
  return v;
}

}  // namespace

GridFunction::GridFunction(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.size() < 2)
    throw std::invalid_argument("GridFunction: needs spatial axes plus one");
  std::size_t total = 1;
  for (const auto& ax : axes_) {
    if (ax.count < 2) throw std::invalid_argument("GridFunction: count < 2");
    if (!(ax.hi > ax.lo)) throw std::invalid_argument("GridFunction: bad axis");
    total *= ax.count;
  }
  values_.assign(total, {0.0, 0.0});
  strides_.resize(axes_.size());
  std::size_t s = 1;
  for (std::size_t a = axes_.size(); a-- > 0;) {
    strides_[a] = s;
    s *= axes_[a].count;
  }
}

std::size_t GridFunction::flat_index(std::span<const std::size_t> idx) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < axes_.size(); ++a) flat += idx[a] * strides_[a];
  return flat;
}

void GridFunction::unflatten(std::size_t flat,
                             std::span<std::size_t> idx) const {
  for (std::size_t a = axes_.size(); a-- > 0;) {
    idx[a] = flat % axes_[a].count;
    flat /= axes_[a].count;
  }
}

std::complex<double>& GridFunction::at(std::span<const std::size_t> idx) {
  return values_[flat_index(idx)];
}
const std::complex<double>& GridFunction::at(
    std::span<const std::size_t> idx) const {
  return values_[flat_index(idx)];
}

void GridFunction::coordinates(std::size_t flat, std::span<double> out) const {
  for (std::size_t a = axes_.size(); a-- > 0;) {
    out[a] = axes_[a].coord(flat % axes_[a].count);
    flat /= axes_[a].count;
  }
}

std::complex<double> GridFunction::sample(std::span<const double> pos) const {
  const std::size_t rank = axes_.size();
  std::array<std::ptrdiff_t, 8> base;
  std::array<std::array<double, 4>, 8> w;
  if (rank > 8) throw std::invalid_argument("GridFunction: rank > 8");
  for (std::size_t a = 0; a < rank; ++a) {
    const Axis& ax = axes_[a];
    const double u = (pos[a] - ax.lo) / ax.step();
    if (u < -1.0 || u > static_cast<double>(ax.count)) return {0.0, 0.0};
    const double fl = std::floor(u);
    base[a] = static_cast<std::ptrdiff_t>(fl) - 1;
    w[a] = cubic_weights(u - fl);
  }
  // separable accumulation over the 4^rank stencil, zero outside
  std::array<std::size_t, 8> it{};
  std::complex<double> acc{0.0, 0.0};
  for (;;) {
    double weight = 1.0;
    std::size_t flat = 0;
    bool inside = true;
    for (std::size_t a = 0; a < rank; ++a) {
      const std::ptrdiff_t i = base[a] + static_cast<std::ptrdiff_t>(it[a]);
      if (i < 0 || i >= static_cast<std::ptrdiff_t>(axes_[a].count)) {
        inside = false;
        break;
      }
      weight *= w[a][it[a]];
      flat += static_cast<std::size_t>(i) * strides_[a];
    }
    if (inside && weight != 0.0) acc += weight * values_[flat];
    std::size_t a = rank;
    for (; a-- > 0;) {
      if (++it[a] < 4) break;
      it[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return acc;
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (const auto& ax : axes_) v *= ax.step();
  return v;
}

double GridFunction::trapezoid_weight(std::size_t flat) const {
  double w = cell_volume();
  for (std::size_t a = axes_.size(); a-- > 0;) {
    const std::size_t i = flat % axes_[a].count;
    if (i == 0 || i + 1 == axes_[a].count) w *= 0.5;
    flat /= axes_[a].count;
  }
  return w;
}

double GridFunction::l2_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    acc += trapezoid_weight(i) * std::norm(values_[i]);
  return std::sqrt(acc);
}

void GridFunction::write(std::ostream& os, const std::string& meta_json) const {
  os.write(kMagic, sizeof(kMagic));
  write_raw(os, kFormatVersion);
  write_raw(os, static_cast<std::uint32_t>(axes_.size()));
  write_raw(os, static_cast<std::uint64_t>(meta_json.size()));
  os.write(meta_json.data(), static_cast<std::streamsize>(meta_json.size()));
  for (const auto& ax : axes_) {
    write_raw(os, ax.lo);
    write_raw(os, ax.hi);
    write_raw(os, static_cast<std::uint64_t>(ax.count));
  }
  for (const auto& v : values_) {
    write_raw(os, v.real());
    write_raw(os, v.imag());
  }
  if (!os) throw std::runtime_error("GridFunction: write failed");
}

void GridFunction::write_file(const std::string& path,
                              const std::string& meta_json) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("GridFunction: cannot open " + path);
  write(os, meta_json);
}

GridFunction GridFunction::read(std::istream& is, std::string* meta_json) {
  char magic[8];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("GridFunction: bad magic");
  const auto version = read_raw<std::uint32_t>(is);
  if (version != kFormatVersion)
    throw std::runtime_error("GridFunction: unsupported format version");
  const auto rank = read_raw<std::uint32_t>(is);
  const auto meta_len = read_raw<std::uint64_t>(is);
  std::string meta(meta_len, '\0');
  is.read(meta.data(), static_cast<std::streamsize>(meta_len));
  if (!is) throw std::runtime_error("GridFunction: truncated meta");
  if (meta_json) *meta_json = meta;
  std::vector<Axis> axes(rank);
  for (auto& ax : axes) {
    ax.lo = read_raw<double>(is);
    ax.hi = read_raw<double>(is);
    ax.count = static_cast<std::size_t>(read_raw<std::uint64_t>(is));
  }
  GridFunction f(std::move(axes));
  for (auto& v : f.values_) {
    const double re = read_raw<double>(is);
    const double im = read_raw<double>(is);
    v = {re, im};
  }
  return f;
}

GridFunction GridFunction::read_file(const std::string& path,
                                     std::string* meta_json) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("GridFunction: cannot open " + path);
  return read(is, meta_json);
}

}  // namespace grushin
