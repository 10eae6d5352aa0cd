#pragma once

#include <cstdint>

#include "qmink/matrix.hpp"

namespace qmink {

/// xoshiro256** seeded through splitmix64. Written out in full so the
/// random-state streams are reproducible from the README description alone:
///
///   splitmix64:  s += 0x9E3779B97F4A7C15;
///                z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///                z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31);
///   state[0..3] = four successive splitmix64 outputs from the seed.
///   next():      result = rotl(state[1] * 5, 7) * 9; then the xoshiro256 update.
///   uniform():   (next() >> 11) * 2^-53, in [0, 1).
///   complex_normal(): u1 = 1 - uniform(), u2 = uniform(),
///                rad = sqrt(-2 ln u1), ((rad cos 2πu2) + i (rad sin 2πu2)) / sqrt 2.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  /// E|z|² = 1.
  complex complex_normal() noexcept;

 private:
  std::uint64_t state_[4];
};

}  // namespace qmink
