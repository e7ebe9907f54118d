#pragma once

#include <cstdint>

namespace jamopt {

/// splitmix64 stream. Tiny and platform-stable, which the byte-identical CSV
/// contract needs; std:: distributions are implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1), 53-bit resolution, exactly one draw.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  /// Scrambled per-index seed of a master seed; feeding it back into
  /// RngStream reproduces the derived stream.
  static std::uint64_t derive_seed(std::uint64_t master_seed,
                                   std::uint64_t index) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static RngStream derive(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(derive_seed(master_seed, index));
  }

 private:
  std::uint64_t state_;
};

}  // namespace jamopt
