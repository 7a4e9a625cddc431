#include "zal/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zal {

namespace {

Complex unit_power(Complex c, int exponent) {
  Complex result{1.0, 0.0};
  for (int k = 0; k < exponent; ++k) result *= c;
  return result;
}

template <typename AbsF>
double max_on_circle(const AbsF& modulus_at, double r, int angular_resolution) {
  if (!(r >= 0.0) || r >= 1.0)
    throw std::domain_error("max_modulus needs a radius in [0, 1)");
  if (angular_resolution < 8)
    throw std::invalid_argument("angular resolution must be at least 8");

  const double two_pi = 2.0 * std::numbers::pi;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < angular_resolution; ++i) {
    const double value = modulus_at(two_pi * i / angular_resolution);
    if (value > best) {
      best = value;
      best_i = i;
    }
  }

  // Golden-section refinement on the bracket around the discrete argmax.
  const double width = two_pi / angular_resolution;
  double lo = two_pi * best_i / angular_resolution - width;
  double hi = two_pi * best_i / angular_resolution + width;
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = modulus_at(x1);
  double f2 = modulus_at(x2);
  for (int iter = 0; iter < 60; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = modulus_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = modulus_at(x1);
    }
  }
  return std::max({best, f1, f2});
}

const char* kPathNames[] = {"diagonal", "doubled", "offset"};
const char* kPredicateNames[] = {"b_t", "c_r", "d_r"};

/// Angles on |w - 1| = r, plus the aligned extremal w = 1 - r e^{iA} with
/// A = arg(x^2 - y) - arg(y) (and its reflection) when y is nonzero.
void append_probe_circle(std::vector<Complex>& out, double r, Complex x2, Complex y,
                         int angles) {
  if (r == 0.0) {
    out.emplace_back(1.0, 0.0);
    return;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < angles; ++i) {
    const double theta = two_pi * i / angles;
    out.emplace_back(1.0 + r * std::cos(theta), r * std::sin(theta));
  }
  if (std::abs(y) > 0.0) {
    const double a = std::arg(x2 - y) - std::arg(y);
    const Complex dir{std::cos(a), std::sin(a)};
    out.push_back(Complex{1.0, 0.0} - r * dir);
    out.push_back(Complex{1.0, 0.0} + r * dir);
  }
}

double plane_slack(Complex x2, Complex y, int n, Complex w) {
  const double base = static_cast<double>(n - 1) * static_cast<double>(n - 1);
  return base + std::abs(Complex{1.0, 0.0} - w) * (2.0 * n - 1.0) - std::abs(x2 - w * y);
}

}  // namespace

ClosedFormFunction::ClosedFormFunction(ClosedFormKind kind, Complex rotation)
    : kind_(kind), rotation_(rotation) {
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12)
    throw std::invalid_argument("rotation must be unimodular");
}

Complex ClosedFormFunction::operator()(Complex z) const {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("closed forms are defined on the open unit disc");
  const Complex w = rotation_ * z;
  Complex value;
  switch (kind_) {
    case ClosedFormKind::identity: value = w; break;
    case ClosedFormKind::koebe: value = w / ((1.0 - w) * (1.0 - w)); break;
    case ClosedFormKind::half_plane: value = w / (1.0 - w); break;
    case ClosedFormKind::two_slit: value = w / (1.0 - w * w); break;
    default: throw std::invalid_argument("unknown closed form");
  }
  return value / rotation_;
}

Complex ClosedFormFunction::coefficient(int k) const {
  if (k < 1) throw std::invalid_argument("coefficient index must be >= 1");
  const Complex twist = unit_power(rotation_, k - 1);
  switch (kind_) {
    case ClosedFormKind::identity: return k == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    case ClosedFormKind::koebe: return static_cast<double>(k) * twist;
    case ClosedFormKind::half_plane: return twist;
    case ClosedFormKind::two_slit: return k % 2 == 1 ? twist : Complex{0.0, 0.0};
  }
  throw std::invalid_argument("unknown closed form");
}

ClosedFormFunction ClosedFormFunction::from_name(const std::string& name) {
  if (name == "identity") return ClosedFormFunction(ClosedFormKind::identity);
  if (name == "koebe") return ClosedFormFunction(ClosedFormKind::koebe);
  if (name == "half_plane") return ClosedFormFunction(ClosedFormKind::half_plane);
  if (name == "two_slit") return ClosedFormFunction(ClosedFormKind::two_slit);
  throw std::invalid_argument("unknown closed form: " + name);
}

double max_modulus(const ClosedFormFunction& f, double r, int angular_resolution) {
  return max_on_circle(
      [&](double theta) { return std::abs(f(Complex{r * std::cos(theta), r * std::sin(theta)})); },
      r, angular_resolution);
}

double max_modulus(const TruncatedSeries& f, double r, int angular_resolution) {
  return max_on_circle(
      [&](double theta) {
        return std::abs(evaluate(f, Complex{r * std::cos(theta), r * std::sin(theta)}));
      },
      r, angular_resolution);
}

HaymanEstimate hayman_index(const ClosedFormFunction& f, int radius_count,
                            int angular_resolution) {
  if (radius_count < 1) throw std::invalid_argument("need at least one radius");
  HaymanEstimate estimate;
  estimate.radii.reserve(radius_count);
  estimate.values.reserve(radius_count);
  for (int j = 1; j <= radius_count; ++j) {
    const double gap = std::ldexp(1.0, -j);
    const double r = 1.0 - gap;
    estimate.radii.push_back(r);
    estimate.values.push_back(gap * gap * max_modulus(f, r, angular_resolution));
  }
  estimate.alpha_hat = estimate.values.back();
  return estimate;
}

std::vector<RatioPoint> ratio_convergence(const std::function<Complex(int)>& coefficient,
                                          Complex lambda,
                                          std::span<const std::pair<int, int>> pairs) {
  std::vector<RatioPoint> out;
  out.reserve(pairs.size());
  for (const auto& [m, n] : pairs) {
    if (m < 2 || n < 2) throw std::invalid_argument("ratio pairs need m, n >= 2");
    const Complex am = coefficient(m);
    const Complex an = coefficient(n);
    const Complex atail = coefficient(m + n - 1);
    const double numerator = std::abs(lambda * (am * an) - atail);
    const double denominator =
        std::abs(lambda * (Complex(static_cast<double>(m), 0.0) *
                           Complex(static_cast<double>(n), 0.0)) -
                 Complex(static_cast<double>(m + n - 1), 0.0));
    if (denominator == 0.0)
      throw std::invalid_argument("ratio denominator vanishes at (m, n) = (" +
                                  std::to_string(m) + ", " + std::to_string(n) + ")");
    out.push_back(RatioPoint{m, n, numerator / denominator});
  }
  return out;
}

std::string scan_path_name(ScanPath path) {
  return kPathNames[static_cast<int>(path)];
}

ScanPath scan_path_from_name(const std::string& name) {
  if (name == "diagonal") return ScanPath::diagonal;
  if (name == "doubled") return ScanPath::doubled;
  if (name == "offset") return ScanPath::offset;
  throw std::invalid_argument("unknown scan path: " + name);
}

std::vector<std::pair<int, int>> scan_path_pairs(ScanPath path, int n_lo, int n_hi,
                                                 int stride) {
  if (n_lo < 2) throw std::invalid_argument("path indices start at 2");
  if (n_hi < n_lo) throw std::invalid_argument("empty index range");
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  std::vector<std::pair<int, int>> pairs;
  for (int k = n_lo; k <= n_hi; k += stride) {
    switch (path) {
      case ScanPath::diagonal: pairs.emplace_back(k, k); break;
      case ScanPath::doubled: pairs.emplace_back(k, 2 * k); break;
      case ScanPath::offset: pairs.emplace_back(k, k + 5); break;
    }
  }
  return pairs;
}

std::optional<std::pair<int, int>> asymptotic_witness(
    const std::function<Complex(int)>& coefficient, Complex lambda, double delta,
    std::span<const std::pair<int, int>> pairs) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const std::vector<RatioPoint> ratios = ratio_convergence(coefficient, lambda, pairs);
  std::optional<std::pair<int, int>> witness;
  for (size_t i = ratios.size(); i-- > 0;) {
    if (ratios[i].ratio > 1.0 - delta) break;
    witness = pairs[i];
  }
  return witness;
}

AuditGrids default_audit_grids() { return AuditGrids{}; }

AuditVerdict zalcman_equivalence_audit(Complex a_n, Complex a_2n1, int n,
                                       const AuditGrids& grids, double tol) {
  if (n < 2) throw std::invalid_argument("the audit needs n >= 2");
  if (grids.t.empty() || grids.r.empty() || grids.w_angles < 1)
    throw std::invalid_argument("audit grids must be nonempty");
  const double cap = 2.0 * n - 1.0;
  if (std::abs(a_2n1) > cap + 1e-12)
    throw std::domain_error("|a_{2n-1}| exceeds 2n - 1: the pair is not admissible");

  const Complex x2 = a_n * a_n;
  const Complex y = a_2n1;
  const double base_rhs = static_cast<double>(n - 1) * static_cast<double>(n - 1);
  const double base_slack = base_rhs - std::abs(x2 - y);

  double segment_slack = std::numeric_limits<double>::infinity();
  for (double t : grids.t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("segment grid needs t in [0, 1]");
    segment_slack = std::min(
        segment_slack, static_cast<double>(n) * n - t * cap - std::abs(x2 - t * y));
  }

  double ray_slack = std::numeric_limits<double>::infinity();
  for (double r : grids.r) {
    if (r < 0.0) throw std::invalid_argument("ray grid needs r >= 0");
    ray_slack = std::min(ray_slack,
                         base_rhs + r * cap - std::abs(x2 - y) - r * std::abs(y));
  }

  std::vector<Complex> probes;
  for (double rho : grids.w_circle_radii) {
    if (rho < 0.0) throw std::invalid_argument("probe circle radii must be >= 0");
    append_probe_circle(probes, rho, x2, y, grids.w_angles);
  }
  for (double r : grids.r) append_probe_circle(probes, r, x2, y, grids.w_angles);
  probes.insert(probes.end(), grids.w_extra.begin(), grids.w_extra.end());
  probes.emplace_back(1.0, 0.0);
  double plane_min = std::numeric_limits<double>::infinity();
  for (Complex w : probes) plane_min = std::min(plane_min, plane_slack(x2, y, n, w));

  AuditVerdict verdict;
  verdict.base = base_slack >= -tol;
  verdict.segment = segment_slack >= -tol;
  verdict.ray = ray_slack >= -tol;
  verdict.plane = plane_min >= -tol;
  return verdict;
}

std::string predicate_name(ConjecturePredicate predicate) {
  return kPredicateNames[static_cast<int>(predicate)];
}

ConjecturePredicate predicate_from_name(const std::string& name) {
  if (name == "b_t") return ConjecturePredicate::b_t;
  if (name == "c_r") return ConjecturePredicate::c_r;
  if (name == "d_r") return ConjecturePredicate::d_r;
  throw std::invalid_argument("unknown predicate: " + name);
}

ScanReport conjecture_scan(const PairSampler& sample_at, long count,
                           ConjecturePredicate predicate, const ConjectureParams& params,
                           int n_lo, int n_hi, double tol, const ScanSink& sink) {
  if (!sample_at) throw std::invalid_argument("conjecture_scan needs a sampler");
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("bad index range");
  if (params.t < 0.0 || params.t > 1.0) throw std::invalid_argument("t must lie in [0, 1]");
  if (params.r < 0.0) throw std::invalid_argument("r must be >= 0");
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");

  ScanReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  const double param =
      predicate == ConjecturePredicate::b_t ? params.t : params.r;

  for (int n = n_lo; n <= n_hi; ++n) {
    const double cap = 2.0 * n - 1.0;
    const double base_rhs = static_cast<double>(n - 1) * static_cast<double>(n - 1);
    for (long i = 0; i < count; ++i) {
      const auto [x, y] = sample_at(n, i);
      const Complex x2 = x * x;
      double slack = 0.0;
      switch (predicate) {
        case ConjecturePredicate::b_t:
          slack = static_cast<double>(n) * n - params.t * cap -
                  std::abs(x2 - params.t * y);
          break;
        case ConjecturePredicate::c_r:
          slack = base_rhs + params.r * cap - std::abs(x2 - y) - params.r * std::abs(y);
          break;
        case ConjecturePredicate::d_r: {
          std::vector<Complex> probes;
          const double two_pi = 2.0 * std::numbers::pi;
          if (params.r == 0.0) {
            probes.emplace_back(1.0, 0.0);
          } else {
            for (int a = 0; a < 32; ++a) {
              const double theta = two_pi * a / 32;
              probes.emplace_back(1.0 + params.r * std::cos(theta),
                                  params.r * std::sin(theta));
            }
            if (std::abs(y) > 0.0) {
              const double angle = std::arg(x2 - y) - std::arg(y);
              const Complex dir{std::cos(angle), std::sin(angle)};
              probes.push_back(Complex{1.0, 0.0} - params.r * dir);
              probes.push_back(Complex{1.0, 0.0} + params.r * dir);
            }
          }
          slack = std::numeric_limits<double>::infinity();
          for (Complex w : probes) slack = std::min(slack, plane_slack(x2, y, n, w));
          break;
        }
      }
      ScanRow row{predicate, param, n, i, slack, slack < -tol};
      ++report.rows;
      if (row.violated) ++report.violations;
      if (slack < report.min_slack) {
        report.min_slack = slack;
        report.worst = row;
      }
      if (sink) sink(row);
    }
  }
  return report;
}

double bieberbach_step_slack(int n, double t, double C) {
  const double nn = static_cast<double>(n) * n;
  return C * nn - nn - t * (C - 1.0) * (2.0 * n - 1.0);
}

BieberbachIteration bieberbach_iterate(double c0, double t, int steps) {
  if (!(c0 > 1.0)) throw std::invalid_argument("the starting constant must exceed 1");
  if (!(t > 0.0) || t > 1.0) throw std::invalid_argument("t must lie in (0, 1]");
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  BieberbachIteration iteration;
  iteration.constants.reserve(steps + 1);
  iteration.constants.push_back(c0);
  iteration.min_step_slack = std::numeric_limits<double>::infinity();
  double c = c0;
  for (int j = 0; j < steps; ++j) {
    for (int n = 2; n <= 64; ++n)
      iteration.min_step_slack =
          std::min(iteration.min_step_slack, bieberbach_step_slack(n, t, c));
    c = std::sqrt(c);
    iteration.constants.push_back(c);
  }
  return iteration;
}

}  // namespace zal
