#pragma once

#include <cmath>
#include <cstdint>

namespace pcsr {

// splitmix64 finalizer. Full 64-bit avalanche, good enough for simulation noise.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derive an independent substream seed from (seed, stream index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

// Counter-based generator: the value at counter c is a pure function of
// (seed, c), so draws can be evaluated in any order or in parallel and the
// results stay identical.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(splitmix64(seed)) {}

  std::uint64_t word(std::uint64_t counter) const {
    return splitmix64(key_ ^ (counter * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  // Standard normal via Box-Muller; consumes words 2c and 2c+1.
  double gaussian(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1], no log(0)
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::uint32_t index(std::uint64_t counter, std::uint32_t n) const {
    // unbiased enough at n << 2^64
    return static_cast<std::uint32_t>(word(counter) % n);
  }

 private:
  std::uint64_t key_;
};

}  // namespace pcsr
