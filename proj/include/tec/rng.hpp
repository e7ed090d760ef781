#pragma once

#include <cmath>
#include <cstdint>

namespace tec {

// Counter-based generator built on the SplitMix64 finalizer. The i-th output
// is a pure function of (seed, i), so a stream can be reproduced on any
// platform and is independent of how work is scheduled across threads.
//
// Output i:  mix64(seed + (i+1) * 0x9E3779B97F4A7C15)
// where mix64 is the SplitMix64 finalizer (Steele, Lea & Flood 2014).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix64(seed_ + counter_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double next_uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_uniform();
  }

  // Standard normal via Box-Muller; consumes two uniforms per pair and
  // caches the second deviate.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform_pos();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  double next_exponential() { return -std::log(next_uniform_pos()); }

  // Gamma with integer shape as a sum of exponentials; every model in the
  // generator suite uses integer shapes, so no rejection sampling is needed.
  double next_gamma_int(int shape, double rate) {
    double sum = 0.0;
    for (int i = 0; i < shape; ++i) sum += next_exponential();
    return sum / rate;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Derives an independent child seed for a named substream. Used to give each
// ensemble member, data sample, and shuffle its own stream so results do not
// depend on execution order.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  return CounterRng::mix64(CounterRng::mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                           CounterRng::mix64(stream * 0xBF58476D1CE4E5B9ULL +
                                             0x94D049BB133111EBULL));
}

}  // namespace tec
