#pragma once

#include <cstdint>

#include "pgcomp/arena.hpp"

namespace pgcomp {

/// Counter-based splittable pseudorandom generator. All arithmetic is on
/// fixed-width unsigned integers, so identical seeds give identical streams
/// on every platform; split() derives an independent substream.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ kPhi)) {}

  SplitRng split(std::uint64_t stream) const {
    SplitRng r(0);
    r.key_ = mix(key_ ^ mix(stream + kGamma));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next() { return mix(key_ + (++counter_) * kPhi); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return uniform01() < p; }

  /// Uniform in [0, bound); 0 when bound is 0. The modulo bias is
  /// irrelevant at the bounds used here.
  std::uint32_t below(std::uint32_t bound) {
    return bound == 0 ? 0 : static_cast<std::uint32_t>(next() % bound);
  }

  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

  Player player() { return (next() & 1) != 0 ? Player::Odd : Player::Even; }

 private:
  static constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kGamma = 0xbf58476d1ce4e5b9ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace pgcomp
