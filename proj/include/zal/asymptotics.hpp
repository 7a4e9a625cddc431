#pragma once
// Asymptotic side of the toolkit: growth of the maximum modulus along dyadic
// radii (Hayman index), convergence of |Phi| against its index polynomial
// along paths of (m, n) pairs, the equivalence audit between four forms of
// the coefficient inequality for a single pair (a_n, a_{2n-1}), large random
// scans of those inequalities, and the classical square-root iteration that
// drives the Bieberbach constant toward 2.

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zal/series.hpp"

namespace zal {

/// Reference functions with closed-form values and coefficients.
///   identity    z              a_k = [k == 1]
///   koebe       z/(1-z)^2      a_k = k
///   half_plane  z/(1-z)        a_k = 1
///   two_slit    z/(1-z^2)      a_k = 1 for odd k, 0 for even k
/// A unimodular rotation c maps a_k to c^{k-1} a_k.
enum class ClosedFormKind { identity, koebe, half_plane, two_slit };

class ClosedFormFunction {
 public:
  explicit ClosedFormFunction(ClosedFormKind kind, Complex rotation = Complex{1.0, 0.0});

  /// Value at z, |z| < 1 (throws std::domain_error outside the open disc).
  Complex operator()(Complex z) const;

  /// Taylor coefficient a_k, k >= 1.
  Complex coefficient(int k) const;

  ClosedFormKind kind() const { return kind_; }

  /// Accepts "identity", "koebe", "half_plane", "two_slit".
  static ClosedFormFunction from_name(const std::string& name);

 private:
  ClosedFormKind kind_;
  Complex rotation_;
};

/// Maximum of |f| on the circle of radius r (0 <= r < 1): coarse scan over
/// angular_resolution equally spaced angles, then golden-section refinement
/// around the discrete argmax.
double max_modulus(const ClosedFormFunction& f, double r, int angular_resolution = 1024);
double max_modulus(const TruncatedSeries& f, double r, int angular_resolution = 1024);

/// Successive estimates (1-r_j)^2 M(r_j) at r_j = 1 - 2^{-j}, j = 1..radius_count.
/// alpha_hat is the final entry, the working estimate of the Hayman index.
struct HaymanEstimate {
  double alpha_hat = 0.0;
  std::vector<double> radii;
  std::vector<double> values;
};

HaymanEstimate hayman_index(const ClosedFormFunction& f, int radius_count,
                            int angular_resolution = 1024);

/// Ratio |lambda a_m a_n - a_{m+n-1}| / |lambda m n - (m + n - 1)| for each
/// requested pair.  The denominator uses the same arithmetic shape as the
/// numerator, so a coefficient stream with a_k = k yields exactly 1.0.
/// Throws std::invalid_argument, naming the pair, if a denominator vanishes.
struct RatioPoint {
  int m = 0;
  int n = 0;
  double ratio = 0.0;
};

std::vector<RatioPoint> ratio_convergence(const std::function<Complex(int)>& coefficient,
                                          Complex lambda,
                                          std::span<const std::pair<int, int>> pairs);

/// Index paths used when scanning ratios: (k, k), (k, 2k), (k, k + 5).
enum class ScanPath { diagonal, doubled, offset };

std::string scan_path_name(ScanPath path);
ScanPath scan_path_from_name(const std::string& name);
std::vector<std::pair<int, int>> scan_path_pairs(ScanPath path, int n_lo, int n_hi,
                                                 int stride = 1);

/// First pair in the sequence from which every later ratio stays at or below
/// 1 - delta; std::nullopt when no such tail exists.
std::optional<std::pair<int, int>> asymptotic_witness(
    const std::function<Complex(int)>& coefficient, Complex lambda, double delta,
    std::span<const std::pair<int, int>> pairs);

/// Grids for the four-statement audit.  Statement families, for a pair
/// (x, y) = (a_n, a_{2n-1}) with |y| <= 2n - 1:
///   base     |x^2 - y| <= (n-1)^2
///   segment  |x^2 - t y| <= n^2 - t(2n-1)            for all t in [0, 1]
///   ray      |x^2 - y| + r|y| <= (n-1)^2 + r(2n-1)   for all r >= 0
///   plane    |x^2 - w y| <= (n-1)^2 + |1-w|(2n-1)    for all complex w
/// The four are equivalent under the hypothesis on |y|; the audit checks the
/// families on grids.  t must include 1 and r must include 0 so the base
/// statement is embedded in each family; the plane grid is circles around
/// w = 1 plus extra probe points, and per grid r the aligned extremal
/// w = 1 - r e^{iA}, A = arg(x^2 - y) - arg(y), is added (together with its
/// reflected variant 1 + r e^{iA}) whenever y is nonzero.
struct AuditGrids {
  std::vector<double> t{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> r{0.0, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> w_circle_radii{0.0, 0.5, 1.0};
  int w_angles = 16;
  std::vector<Complex> w_extra{Complex{-1.0, 0.0}, Complex{-5.0, 0.0}};
};

AuditGrids default_audit_grids();

struct AuditVerdict {
  bool base = false;
  bool segment = false;
  bool ray = false;
  bool plane = false;

  bool agree() const { return base == segment && base == ray && base == plane; }
};

/// Evaluates all four statement families for one pair on the given grids.
/// Throws std::domain_error when |a_2n1| exceeds 2n - 1 (beyond roundoff),
/// since the equivalence argument needs that hypothesis.
AuditVerdict zalcman_equivalence_audit(Complex a_n, Complex a_2n1, int n,
                                       const AuditGrids& grids, double tol = 1e-9);

/// Scan predicates over sampled pairs (a_n, a_{2n-1}):
///   b_t  slack = n^2 - t(2n-1) - |a_n^2 - t a_{2n-1}|
///   c_r  slack = (n-1)^2 + r(2n-1) - |a_n^2 - a_{2n-1}| - r|a_{2n-1}|
///   d_r  slack = min over the circle |w-1| = r (32 angles plus the aligned
///        extremal w) of (n-1)^2 + |1-w|(2n-1) - |a_n^2 - w a_{2n-1}|
enum class ConjecturePredicate { b_t, c_r, d_r };

std::string predicate_name(ConjecturePredicate predicate);
ConjecturePredicate predicate_from_name(const std::string& name);

struct ConjectureParams {
  double t = 1.0;  // in [0, 1]
  double r = 0.0;  // >= 0
};

struct ScanRow {
  ConjecturePredicate predicate = ConjecturePredicate::b_t;
  double param = 0.0;
  int n = 0;
  long sample_index = 0;
  double slack = 0.0;
  bool violated = false;
};

struct ScanReport {
  double min_slack = 0.0;
  long rows = 0;
  long violations = 0;
  ScanRow worst;
};

using PairSampler = std::function<std::pair<Complex, Complex>(int n, long sample_index)>;
using ScanSink = std::function<void(const ScanRow&)>;

/// Runs the predicate over count samples for each n in [n_lo, n_hi].  A row
/// is violated when its slack drops below -tol.  Every row is passed to the
/// sink when one is given; the report keeps only aggregates plus the worst row.
ScanReport conjecture_scan(const PairSampler& sample_at, long count,
                           ConjecturePredicate predicate, const ConjectureParams& params,
                           int n_lo, int n_hi, double tol = 1e-9,
                           const ScanSink& sink = {});

/// Square-root iteration c_j = c0^{2^{-j}}, j = 0..steps, with the slack of
/// each halving step checked across n = 2..64: the step from C preserves the
/// coefficient inequality when C n^2 - n^2 - t(C-1)(2n-1) stays nonnegative.
struct BieberbachIteration {
  std::vector<double> constants;
  double min_step_slack = 0.0;
};

double bieberbach_step_slack(int n, double t, double C);
BieberbachIteration bieberbach_iterate(double c0, double t, int steps);

}  // namespace zal
