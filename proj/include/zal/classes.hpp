#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zal/herglotz.hpp"
#include "zal/rng.hpp"
#include "zal/series.hpp"

namespace zal {

/// Function families with known sharp coefficient-functional bounds.
/// The hull_* tags denote closed convex hulls, whose members are exactly
/// the kernel averages against a probability measure on the circle.
enum class FunctionClass {
  hurwitz,               // sum_{n>=2} n |a_n| <= 1
  noshiro_warschawski,   // Re f' > 0; (n-1)st moment p_{n-1} = n a_n
  hull_convex,           // Re(f/z) > 1/2;  p_{n-1} = 2 a_n
  hull_convex_alpha,     // hull of convex functions of order alpha < 1
  hull_starlike,         // hull of starlike functions; p_{n-1} = 2 a_n / n
  koebe_family,          // rotations c -> conj(c) k(c z) of k(z) = z/(1-z)^2
};

struct ClassSpec {
  FunctionClass cls = FunctionClass::hurwitz;
  double alpha = 0.0;  // order parameter; meaningful only for hull_convex_alpha

  static ClassSpec hurwitz() { return {FunctionClass::hurwitz, 0.0}; }
  static ClassSpec noshiro_warschawski() { return {FunctionClass::noshiro_warschawski, 0.0}; }
  static ClassSpec hull_convex() { return {FunctionClass::hull_convex, 0.0}; }
  static ClassSpec hull_convex_alpha(double alpha) { return {FunctionClass::hull_convex_alpha, alpha}; }
  static ClassSpec hull_starlike() { return {FunctionClass::hull_starlike, 0.0}; }
  static ClassSpec koebe_family() { return {FunctionClass::koebe_family, 0.0}; }
};

/// Throws std::invalid_argument for parameter combinations the library
/// cannot handle (currently alpha >= 1 on hull_convex_alpha).
void validate_class_spec(const ClassSpec& spec);

/// Short stable names used in reports, JSON and on the command line:
/// hurwitz, nw, hull_convex, hull_convex_alpha, hull_starlike, koebe.
std::string class_name(const ClassSpec& spec);
std::optional<ClassSpec> class_from_name(std::string_view name, double alpha = 0.0);

/// {"class": "<name>"} plus {"alpha": <real>} for hull_convex_alpha.
nlohmann::json class_spec_to_json(const ClassSpec& spec);
ClassSpec class_spec_from_json(const nlohmann::json& j);

/// Coefficient A_n of the extremal convex function of order alpha,
/// computed by the finite product A_n = (1/n!) prod_{k=2..n} (k - 2 alpha).
/// A_1 = 1; alpha = 0 gives 1, alpha = 1/2 gives 1/n.
double coefficient_A(int n, double alpha);

/// Member of the class determined by a measure on the circle, truncated at
/// `order`.  The coefficient maps are the moment relations listed on the
/// FunctionClass tags; koebe_family requires a single atom (the rotation).
TruncatedSeries series_from_measure(const ClassSpec& spec,
                                    const HerglotzMeasure& measure, int order);

/// Member of the Hurwitz class from budgeted weights: a_n = phase_n w_n / n
/// for n = 2..order with sum w_n <= 1.  weights[i], phases[i] refer to
/// index n = i + 2.
TruncatedSeries hurwitz_series(std::span<const double> weights,
                               std::span<const double> phases, int order);

/// Random member of the class, truncated at `order`.  Kernel-based classes
/// draw `atoms` atoms; callers that know a functional pair (m, n) should
/// pass max(8, m + n - 2).  Hurwitz draws a weight vector with random
/// budget; koebe_family draws a single rotation.
TruncatedSeries sample(const ClassSpec& spec, int order, SampleRng& rng, int atoms = 8);

/// Distance-to-membership diagnostic, >= 0, zero (up to 1e-9) for members.
/// Hurwitz: max(0, sum n |a_n| - 1).  Kernel classes: negative part of the
/// real lower bound (Re f' for noshiro_warschawski, Re(f/z) - 1/2 for
/// hull_convex, Re of the recovered kernel average otherwise) over a polar
/// grid, radii {0.5, 0.9, 0.99} x 256 angles.  Radii where the truncation
/// tail could flip the sign for a genuine member (4 r^{N+1} > 1 - r for a
/// degree-N carrier) are skipped, so members never flag merely for being
/// truncated.
double membership_residual(const ClassSpec& spec, const TruncatedSeries& f);

enum class ExtremalBranch {
  generic,   // full-support extremal of the large-|lambda| regime
  resonant,  // extremal supported on indices k (m+n-2) + 1
};

/// Closed-form equality case for the class bound at the pair (m, n),
/// truncated at `order` (pass 0 for the default 2 max(m, n)).  The
/// unimodular phases alpha/beta select among the Hurwitz extremals; for the
/// kernel classes alpha is applied as a rotation and beta is unused.
TruncatedSeries extremal(const ClassSpec& spec, int m, int n, ExtremalBranch branch,
                         int order = 0, Complex phase_alpha = Complex{1.0, 0.0},
                         Complex phase_beta = Complex{1.0, 0.0});

}  // namespace zal
