#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "zal/rng.hpp"
#include "zal/series.hpp"

namespace zal {

/// One atom of a probability measure on the unit circle.
struct Atom {
  double weight = 0.0;
  Complex position{1.0, 0.0};  // unimodular
};

/// Finitely supported probability measure on the unit circle.  Every
/// function with positive real part handled by this library is represented
/// through such a measure: g(z) = sum_j w_j (1 + eta_j z) / (1 - eta_j z).
///
/// Construction validates weights (nonnegative, positive total) and
/// positions (unimodular within 1e-12), then renormalizes so that the
/// weights sum to exactly 1 and |eta_j| = 1 to machine precision.
class HerglotzMeasure {
 public:
  explicit HerglotzMeasure(std::vector<Atom> atoms);

  static HerglotzMeasure single_atom(Complex position);
  /// Equal weights 1/q on the q-th roots of unity.
  static HerglotzMeasure uniform_roots_of_unity(int q);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  std::span<const Atom> atoms() const { return atoms_; }

  /// Kernel average sum_j w_j (1 + eta_j z) / (1 - eta_j z), |z| < 1.
  Complex kernel_value(Complex z) const;

 private:
  std::vector<Atom> atoms_;
};

/// Moments p_n = 2 sum_j w_j eta_j^n for n = 1..order, returned on the
/// 1-based carrier.  These are the Taylor coefficients of the kernel
/// average about 0 (constant term 1 implicit), so |p_n| <= 2.
TruncatedSeries caratheodory_coefficients(const HerglotzMeasure& measure, int order);

/// J atoms with positions uniform on the circle and weights obtained by
/// normalizing J independent positive draws.
HerglotzMeasure sample_measure(int atom_count, SampleRng& rng);

/// Minimum of Re g over the polar grid {r e^{2 pi i k / angles}}, evaluated
/// through the closed-form kernel.  Positive for every valid measure.
double verify_positive_real_part(const HerglotzMeasure& measure,
                                 std::span<const double> radii, int angles);

/// Serialization: {"atoms": [{"w": weight, "theta": angle-in-radians}, ...]}.
/// Positions are stored as angles so unimodularity survives the round trip.
nlohmann::json measure_to_json(const HerglotzMeasure& measure);
HerglotzMeasure measure_from_json(const nlohmann::json& j);

}  // namespace zal
