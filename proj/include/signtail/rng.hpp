#pragma once

#include <cmath>
#include <cstdint>

namespace signtail {

/**
 * Counter-based splittable random stream. A stream is fully determined by
 * (seed, stream_id): the integer sequence is a SplitMix64 walk whose initial
 * state mixes both keys, so distinct stream ids give statistically
 * independent streams and parallel consumers never need coordination.
 *
 * The raw 64-bit sequence is platform-independent. Real-valued draws
 * (gaussian, exponential, ...) additionally go through libm transcendentals
 * and are deterministic for a given build environment; all reproducibility
 * tests compare like with like.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : s_(mix(mix(seed ^ 0x8BADF00DDEADBEEFULL) ^
               mix(stream_id ^ 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() {
    s_ += 0x9E3779B97F4A7C15ULL;
    return mix(s_);
  }

  /** Uniform draw strictly inside (0, 1). */
  double uniform01() {
    // 53-bit mantissa, shifted off zero: ((k + 0.5) / 2^53) in (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /** Standard normal via Box-Muller. Each call consumes exactly two
   *  uniforms (no caching), so draw parity never depends on call history. */
  double gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /** Exponential(1) draw. */
  double exponential() { return -std::log(uniform01()); }

  /** Fair sign in {-1.0, +1.0}. */
  double rademacher() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_;
};

}  // namespace signtail
