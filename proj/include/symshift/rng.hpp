#ifndef SYMSHIFT_RNG_HPP
#define SYMSHIFT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace symshift {

// Counter-based pseudo-random stream (SplitMix64): the state is a counter
// advanced by the 64-bit golden ratio, each output is a bijective mix of it.
// Bit-reproducible on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in (0,1], 53-bit resolution; never zero, so log() is safe
  double uniform_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
  // uniform in [0,1)
  double uniform_halfopen() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed of substream `index` under a master seed. Each (master, index) pair
// yields the same stream no matter how work is partitioned across threads.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Standard Gaussian stream: Box-Muller on SplitMix64 uniforms. Each pair
// consumes exactly two uniforms; the cosine branch is returned first.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : u_(seed) {}

  static GaussianStream substream(std::uint64_t master, std::uint64_t index) {
    return GaussianStream(split_seed(master, index));
  }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = u_.uniform_open();
    const double u2 = u_.uniform_halfopen();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  SplitMix64 u_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace symshift

#endif  // SYMSHIFT_RNG_HPP
