#pragma once

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, index, slot), so Monte-Carlo loops can be partitioned
// across threads in any order and still reproduce bit-identical results.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace grushin {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(seed ^ mix64(stream + 0x517cc1b727220a95ULL))) {}

  std::uint64_t bits(std::uint64_t index, std::uint32_t slot = 0) const {
    return mix64(key_ ^ mix64(index * 0xd1342543de82ef95ULL + slot));
  }

  // uniform on (0,1)
  double uniform(std::uint64_t index, std::uint32_t slot = 0) const {
    return static_cast<double>(bits(index, slot) >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  // standard normal via Box-Muller; consumes slots (slot, slot+1)
  double normal(std::uint64_t index, std::uint32_t slot = 0) const {
    const double u1 = uniform(index, slot);
    const double u2 = uniform(index, slot + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // standard Cauchy
  double cauchy(std::uint64_t index, std::uint32_t slot = 0) const {
    return std::tan(std::numbers::pi * (uniform(index, slot) - 0.5));
  }

 private:
  std::uint64_t key_;
};

}  // namespace grushin
