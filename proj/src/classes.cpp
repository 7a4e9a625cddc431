#include "zal/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zal {

namespace {

constexpr double kGridRadii[] = {0.5, 0.9, 0.99};
constexpr int kGridAngles = 256;
constexpr double kUnimodularTolerance = 1e-12;

void require_unimodular(Complex c, const char* what) {
  if (std::abs(std::abs(c) - 1.0) > kUnimodularTolerance)
    throw std::invalid_argument(std::string(what) + " must be unimodular");
}

void require_pair(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("functional indices must satisfy m, n >= 2");
}

/// Minimum real part of a truncated series with constant term over the
/// membership grid.  Radii whose worst-case truncation tail 2 r^{D+1} could
/// reach half the per-kernel floor (1 - r) are skipped: below that level a
/// truncated member cannot dip under the exact function's positive margin.
double min_real_on_grid(const PowerSeries& g) {
  const int degree = g.degree();
  double min_re = std::numeric_limits<double>::infinity();
  bool any = false;
  for (double r : kGridRadii) {
    if (4.0 * std::pow(r, degree + 1) > 1.0 - r) continue;
    any = true;
    for (int k = 0; k < kGridAngles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kGridAngles;
      const Complex z = r * Complex{std::cos(theta), std::sin(theta)};
      min_re = std::min(min_re, evaluate(g, z).real());
    }
  }
  // Degree 0 keeps at least the innermost radius, so this is unreachable for
  // well-formed carriers; guard anyway.
  if (!any) return g.c(0).real();
  return min_re;
}

/// Kernel average recovered from coefficients via p_{n-1} = 2 a_n / A_n-type
/// relations; divisor(n) is the factor with a_n = divisor(n) * p_{n-1} / 2.
template <typename Divisor>
PowerSeries recovered_kernel(const TruncatedSeries& f, Divisor&& scale) {
  PowerSeries g = PowerSeries::zero(f.order() - 1);
  g.set(0, Complex{1.0, 0.0});
  for (int n = 2; n <= f.order(); ++n)
    g.set(n - 1, 2.0 * f.a(n) / scale(n));
  return g;
}

}  // namespace

void validate_class_spec(const ClassSpec& spec) {
  if (spec.cls == FunctionClass::hull_convex_alpha && !(spec.alpha < 1.0))
    throw std::invalid_argument("order parameter must satisfy alpha < 1");
}

std::string class_name(const ClassSpec& spec) {
  switch (spec.cls) {
    case FunctionClass::hurwitz: return "hurwitz";
    case FunctionClass::noshiro_warschawski: return "nw";
    case FunctionClass::hull_convex: return "hull_convex";
    case FunctionClass::hull_convex_alpha: return "hull_convex_alpha";
    case FunctionClass::hull_starlike: return "hull_starlike";
    case FunctionClass::koebe_family: return "koebe";
  }
  return "unknown";
}

std::optional<ClassSpec> class_from_name(std::string_view name, double alpha) {
  if (name == "hurwitz") return ClassSpec::hurwitz();
  if (name == "nw") return ClassSpec::noshiro_warschawski();
  if (name == "hull_convex") return ClassSpec::hull_convex();
  if (name == "hull_convex_alpha") return ClassSpec::hull_convex_alpha(alpha);
  if (name == "hull_starlike") return ClassSpec::hull_starlike();
  if (name == "koebe") return ClassSpec::koebe_family();
  return std::nullopt;
}

nlohmann::json class_spec_to_json(const ClassSpec& spec) {
  nlohmann::json j{{"class", class_name(spec)}};
  if (spec.cls == FunctionClass::hull_convex_alpha) j["alpha"] = spec.alpha;
  return j;
}

ClassSpec class_spec_from_json(const nlohmann::json& j) {
  const std::string name = j.at("class").get<std::string>();
  const double alpha = j.value("alpha", 0.0);
  const auto spec = class_from_name(name, alpha);
  if (!spec) throw std::invalid_argument("unknown class name: " + name);
  validate_class_spec(*spec);
  return *spec;
}

double coefficient_A(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
  if (!(alpha < 1.0)) throw std::invalid_argument("order parameter must satisfy alpha < 1");
  double value = 1.0;
  for (int k = 2; k <= n; ++k) value *= (k - 2.0 * alpha) / k;
  return value;
}

TruncatedSeries series_from_measure(const ClassSpec& spec,
                                    const HerglotzMeasure& measure, int order) {
  validate_class_spec(spec);
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (spec.cls == FunctionClass::hurwitz)
    throw std::invalid_argument("the hurwitz class is not parametrized by a measure");
  if (spec.cls == FunctionClass::koebe_family && measure.atom_count() != 1)
    throw std::invalid_argument("koebe family members come from a single atom");

  const TruncatedSeries p = caratheodory_coefficients(measure, order - 1);
  TruncatedSeries f = TruncatedSeries::identity(order);
  for (int n = 2; n <= order; ++n) {
    const Complex moment = p.a(n - 1);
    switch (spec.cls) {
      case FunctionClass::noshiro_warschawski: f.set(n, moment / static_cast<double>(n)); break;
      case FunctionClass::hull_convex: f.set(n, 0.5 * moment); break;
      case FunctionClass::hull_convex_alpha: f.set(n, 0.5 * coefficient_A(n, spec.alpha) * moment); break;
      case FunctionClass::hull_starlike:
      case FunctionClass::koebe_family: f.set(n, 0.5 * static_cast<double>(n) * moment); break;
      case FunctionClass::hurwitz: break;  // rejected above
    }
  }
  return f;
}

TruncatedSeries hurwitz_series(std::span<const double> weights,
                               std::span<const double> phases, int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (weights.size() != static_cast<size_t>(order - 1) || phases.size() != weights.size())
    throw std::invalid_argument("hurwitz parameters must cover indices 2..order");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("hurwitz weights must be nonnegative");
    total += w;
  }
  if (total > 1.0 + 1e-12)
    throw std::invalid_argument("hurwitz weights must satisfy sum <= 1");
  TruncatedSeries f = TruncatedSeries::identity(order);
  for (int n = 2; n <= order; ++n) {
    const double w = weights[static_cast<size_t>(n - 2)];
    const double t = phases[static_cast<size_t>(n - 2)];
    f.set(n, (w / n) * Complex{std::cos(t), std::sin(t)});
  }
  return f;
}

TruncatedSeries sample(const ClassSpec& spec, int order, SampleRng& rng, int atoms) {
  validate_class_spec(spec);
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (atoms < 1) throw std::invalid_argument("atom count must be positive");

  switch (spec.cls) {
    case FunctionClass::hurwitz: {
      std::vector<double> weights(static_cast<size_t>(std::max(order - 1, 0)));
      double total = 0.0;
      for (double& w : weights) {
        w = rng.positive();
        total += w;
      }
      const double budget = rng.uniform();  // interior dominates, boundary approached
      for (double& w : weights) w *= budget / total;
      std::vector<double> phases(weights.size());
      for (double& t : phases) t = rng.angle();
      return hurwitz_series(weights, phases, order);
    }
    case FunctionClass::koebe_family:
      return series_from_measure(spec, HerglotzMeasure::single_atom(rng.unimodular()), order);
    default:
      return series_from_measure(spec, sample_measure(atoms, rng), order);
  }
}

double membership_residual(const ClassSpec& spec, const TruncatedSeries& f) {
  validate_class_spec(spec);
  if (spec.cls == FunctionClass::hurwitz) {
    double total = 0.0;
    for (int n = 2; n <= f.order(); ++n) total += n * std::abs(f.a(n));
    return std::max(0.0, total - 1.0);
  }
  if (f.order() < 2) return 0.0;  // only the identity part is present

  switch (spec.cls) {
    case FunctionClass::noshiro_warschawski:
      return std::max(0.0, -min_real_on_grid(differentiate(f)));
    case FunctionClass::hull_convex: {
      PowerSeries h = PowerSeries::zero(f.order() - 1);  // f(z)/z
      for (int n = 1; n <= f.order(); ++n) h.set(n - 1, f.a(n));
      return std::max(0.0, 0.5 - min_real_on_grid(h));
    }
    case FunctionClass::hull_convex_alpha: {
      const double alpha = spec.alpha;
      return std::max(0.0, -min_real_on_grid(recovered_kernel(
                               f, [alpha](int n) { return coefficient_A(n, alpha); })));
    }
    case FunctionClass::hull_starlike:
    case FunctionClass::koebe_family:
      return std::max(0.0, -min_real_on_grid(recovered_kernel(
                               f, [](int n) { return static_cast<double>(n); })));
    case FunctionClass::hurwitz: break;  // handled above
  }
  return 0.0;
}

TruncatedSeries extremal(const ClassSpec& spec, int m, int n, ExtremalBranch branch,
                         int order, Complex phase_alpha, Complex phase_beta) {
  validate_class_spec(spec);
  require_pair(m, n);
  require_unimodular(phase_alpha, "phase alpha");
  require_unimodular(phase_beta, "phase beta");
  if (order == 0) order = 2 * std::max(m, n);
  if (order < m + n - 1)
    throw std::invalid_argument("extremal order must reach index m + n - 1");

  TruncatedSeries f = TruncatedSeries::identity(order);
  const int period = m + n - 2;

  if (spec.cls == FunctionClass::hurwitz) {
    if (branch == ExtremalBranch::resonant) {
      f.set(m + n - 1, phase_alpha / static_cast<double>(m + n - 1));
    } else if (m == n) {
      f.set(n, phase_alpha / static_cast<double>(n));
    } else {
      f.set(m, phase_alpha / (2.0 * m));
      f.set(n, phase_beta / (2.0 * n));
    }
    return f;
  }
  if (spec.cls == FunctionClass::koebe_family)
    throw std::invalid_argument("no closed-form equality case is defined for the koebe family");

  const auto law = [&](int k) -> Complex {
    switch (spec.cls) {
      case FunctionClass::noshiro_warschawski: return Complex{2.0 / k, 0.0};
      case FunctionClass::hull_convex: return Complex{1.0, 0.0};
      case FunctionClass::hull_convex_alpha: return Complex{coefficient_A(k, spec.alpha), 0.0};
      case FunctionClass::hull_starlike: return Complex{static_cast<double>(k), 0.0};
      default: return Complex{0.0, 0.0};
    }
  };

  if (branch == ExtremalBranch::generic) {
    for (int k = 2; k <= order; ++k) f.set(k, law(k));
  } else {
    for (int k = 1 + period; k <= order; k += period) f.set(k, law(k));
  }
  return rotate(f, phase_alpha);
}

}  // namespace zal
