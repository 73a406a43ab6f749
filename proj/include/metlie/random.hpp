#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "metlie/rational.hpp"

namespace metlie {

/// Seeded source for sampled test vectors. Draws are mt19937_64 output
/// reduced modulo the range width, so a (seed, call sequence) pair yields the
/// same values on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the integers [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % width);
  }

  /// Integer entries uniform on [lo, hi], denominator 1.
  Vector vector(std::size_t n, std::int64_t lo = -9, std::int64_t hi = 9) {
    Vector v(n);
    for (auto& x : v) x = Rational(static_cast<long>(uniform(lo, hi)));
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace metlie
