#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace zal {

/// Seeded random source.  A (seed, stream) pair fully determines the draw
/// sequence, so any report row carrying seed and sample index can be
/// regenerated in isolation.  Doubles are produced from raw engine words
/// rather than std distributions to keep results identical across standard
/// library implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : SampleRng(seed, 0) {}

  SampleRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in (0, 1]; safe to normalize sums of these.
  double positive() { return 1.0 - uniform(); }

  /// Uniform angle in [0, 2*pi).
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  std::complex<double> unimodular() {
    const double t = angle();
    return {std::cos(t), std::sin(t)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zal
