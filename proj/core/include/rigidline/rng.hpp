#pragma once

#include <cstdint>

#include "rigidline/rational.hpp"

namespace rigidline {

/// Counter-based deterministic generator (splitmix64). Every seeded search in
/// the library derives one independent stream per trial index, so trials can
/// be evaluated in any order (or concurrently) and merged by lowest index.
/// Never platform-dependent: no std:: distributions involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    Rng r(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    r.next_u64();
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive. Ranges here are tiny; modulo bias is
  /// irrelevant at 2^64.
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_u64() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform k/denominator with |k| <= max_num.
  Rational next_rational(long long max_num, long long denominator) {
    return Rational(BigInt(next_int(-max_num, max_num)), BigInt(denominator));
  }

 private:
  std::uint64_t state_;
};

}  // namespace rigidline
