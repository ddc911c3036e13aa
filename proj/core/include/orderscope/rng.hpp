#pragma once

#include <cstdint>
#include <vector>

#include "orderscope/rat.hpp"

namespace osc {

/// splitmix64 stream. Self-contained so that seeded runs produce identical
/// output on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n > 0. Rejection sampling, no modulo bias.
  uint64_t below(uint64_t n);

  /// Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi);

  /// True with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  /// Derive an independent stream for trial `id` (stable across reorderings).
  Rng fork(uint64_t id) const;

  /// Random permutation of {0,...,n-1}.
  std::vector<int> permutation(int n);

  /// Positive rationals summing to 1, each with denominator <= about den.
  std::vector<Rat> simplex_weights(int k, int den = 64);

 private:
  uint64_t state_;
};

}  // namespace osc
