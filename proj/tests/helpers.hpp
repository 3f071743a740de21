#pragma once

#include <cstdint>

#include "nilgeo/gauss.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo::testing {

/// Deterministic splitmix64; identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 5, long max_den = 4) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

  GaussRational gauss(long max_num = 5, long max_den = 4) {
    return GaussRational(rational(max_num, max_den), rational(max_num, max_den));
  }

 private:
  uint64_t state_;
};

}  // namespace nilgeo::testing
