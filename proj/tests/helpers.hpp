#pragma once

#include <complex>

#include "zal/rng.hpp"
#include "zal/series.hpp"

namespace zal::testing {

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Uniform complex draw from the square [-1, 1]^2.
inline Complex square_draw(SampleRng& rng) {
  return Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

inline TruncatedSeries random_truncated(SampleRng& rng, int order) {
  TruncatedSeries f = TruncatedSeries::zero(order);
  for (int k = 1; k <= order; ++k) f.set(k, square_draw(rng));
  return f;
}

inline PowerSeries random_power(SampleRng& rng, int degree) {
  PowerSeries f = PowerSeries::zero(degree);
  for (int k = 0; k <= degree; ++k) f.set(k, square_draw(rng));
  return f;
}

}  // namespace zal::testing
