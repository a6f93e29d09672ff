#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace persuade {

/// Deterministic splitmix64 stream. All randomness in the project flows
/// through this class so that identical seeds give identical results on
/// every platform (std:: distributions are not portable across libstdc++
/// versions).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : origin_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Rejection sampling, unbiased. n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return next_unit() < p; }

  /// Standard normal via Box-Muller (two uniforms per call, no caching, so
  /// the stream position stays deterministic).
  double next_gaussian() {
    const double u1 = 1.0 - next_unit();  // (0, 1]
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  /// Independent substream keyed on the original seed and `stream_id`.
  /// Does not depend on how much of this stream was consumed.
  RandomSource fork(std::uint64_t stream_id) const {
    std::uint64_t z = origin_ ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return RandomSource(z ^ (z >> 31));
  }

 private:
  std::uint64_t origin_;
  std::uint64_t state_;
};

}  // namespace persuade
