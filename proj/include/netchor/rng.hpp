#pragma once

#include <cstdint>
#include <random>

namespace netchor {

/// Portable seeded random source.
///
/// The raw engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. The standard distributions are not (their algorithms are
/// implementation-defined), so bounded integers and unit reals are derived
/// here from raw 64-bit words. Every seeded result in the toolkit is
/// therefore byte-identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0. Rejection sampling
  /// removes modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netchor
