#include "zal/functional.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zal {

namespace {

void require_pair(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("functional indices must satisfy m, n >= 2");
}

void require_order(const TruncatedSeries& f, int m, int n) {
  if (f.order() < m + n - 1)
    throw std::invalid_argument("series order below m + n - 1: coefficient a_{m+n-1} unavailable");
}

Complex polar_point(double r, double theta) {
  return r * Complex{std::cos(theta), std::sin(theta)};
}

/// The class bound written as |a + mu b| <= M max(C, |mu|) with the affine
/// reparametrization mu = scale * lambda + offset.  Phi(lambda) = a + mu b
/// holds identically, so the sum form, the max form and the tight lambda all
/// come from one place.
struct MaxFormFrame {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double C = 1.0;
  double M = 1.0;
  double scale = 1.0;
  double offset = 0.0;
};

MaxFormFrame max_form_frame(const ClassSpec& cls, int m, int n,
                            Complex product, Complex tail) {
  MaxFormFrame frame;
  switch (cls.cls) {
    case FunctionClass::hurwitz: {
      frame.a = -tail;
      frame.b = product;
      frame.C = (m == n) ? n * n / (2.0 * n - 1.0)
                         : 4.0 * m * n / (m + n - 1.0);
      frame.M = (m == n) ? 1.0 / (static_cast<double>(n) * n)
                         : 1.0 / (4.0 * m * n);
      frame.scale = 1.0;
      frame.offset = 0.0;
      break;
    }
    case FunctionClass::noshiro_warschawski: {
      const double c = m * n / (2.0 * (m + n - 1.0));
      frame.a = c * product - tail;
      frame.b = -c * product;
      frame.C = 1.0;
      frame.M = 2.0 / (m + n - 1.0);
      frame.scale = -1.0 / c;
      frame.offset = 1.0;
      break;
    }
    case FunctionClass::hull_convex: {
      frame.a = product - tail;
      frame.b = -product;
      frame.C = 1.0;
      frame.M = 1.0;
      frame.scale = -1.0;
      frame.offset = 1.0;
      break;
    }
    case FunctionClass::hull_convex_alpha: {
      const double amn = coefficient_A(m, cls.alpha) * coefficient_A(n, cls.alpha);
      const double atail = coefficient_A(m + n - 1, cls.alpha);
      frame.a = (atail / amn) * product - tail;
      frame.b = product / amn;
      frame.C = atail;
      frame.M = 1.0;
      frame.scale = amn;
      frame.offset = -atail;
      break;
    }
    case FunctionClass::hull_starlike: {
      const double c = (m + n - 1.0) / (static_cast<double>(m) * n);
      frame.a = c * product - tail;
      frame.b = -c * product;
      frame.C = 1.0;
      frame.M = static_cast<double>(m + n - 1);
      frame.scale = -1.0 / c;
      frame.offset = 1.0;
      break;
    }
    case FunctionClass::koebe_family:
      throw std::invalid_argument("no sharp bound is available for the koebe family");
  }
  return frame;
}

}  // namespace

Complex zalcman(const TruncatedSeries& f, const FunctionalSpec& spec) {
  require_pair(spec.m, spec.n);
  require_order(f, spec.m, spec.n);
  return spec.lambda * (f.a(spec.m) * f.a(spec.n)) - f.a(spec.m + spec.n - 1);
}

double sharp_bound(const ClassSpec& cls, const FunctionalSpec& spec) {
  validate_class_spec(cls);
  require_pair(spec.m, spec.n);
  const int m = spec.m;
  const int n = spec.n;
  const Complex lambda = spec.lambda;
  switch (cls.cls) {
    case FunctionClass::hurwitz:
      if (m == n)
        return std::max(std::abs(lambda) / (static_cast<double>(n) * n), 1.0 / (2.0 * n - 1.0));
      return std::max(std::abs(lambda) / (4.0 * m * n), 1.0 / (m + n - 1.0));
    case FunctionClass::noshiro_warschawski:
      return (2.0 / (m + n - 1.0)) *
             std::max(1.0, std::abs(1.0 - 2.0 * (m + n - 1.0) / (static_cast<double>(m) * n) * lambda));
    case FunctionClass::hull_convex:
      return std::max(1.0, std::abs(1.0 - lambda));
    case FunctionClass::hull_convex_alpha: {
      const double amn = coefficient_A(m, cls.alpha) * coefficient_A(n, cls.alpha);
      const double atail = coefficient_A(m + n - 1, cls.alpha);
      return std::max(atail, std::abs(lambda * amn - atail));
    }
    case FunctionClass::hull_starlike:
      return (m + n - 1.0) *
             std::max(1.0, std::abs(1.0 - static_cast<double>(m) * n / (m + n - 1.0) * lambda));
    case FunctionClass::koebe_family:
      throw std::invalid_argument("no sharp bound is available for the koebe family");
  }
  throw std::invalid_argument("unhandled class");
}

SumFormParts sum_form_parts(const ClassSpec& cls, const TruncatedSeries& f, int m, int n) {
  validate_class_spec(cls);
  require_pair(m, n);
  require_order(f, m, n);
  const Complex product = f.a(m) * f.a(n);
  const Complex tail = f.a(m + n - 1);
  SumFormParts parts;
  switch (cls.cls) {
    case FunctionClass::hurwitz:
      if (m == n)
        parts.lhs = n * n * std::abs(product) + (2.0 * n - 1.0) * std::abs(tail);
      else
        parts.lhs = 4.0 * m * n * std::abs(product) + (m + n - 1.0) * std::abs(tail);
      parts.rhs = 1.0;
      return parts;
    case FunctionClass::noshiro_warschawski: {
      const double c = m * n / (2.0 * (m + n - 1.0));
      parts.lhs = std::abs(c * product - tail) + c * std::abs(product);
      parts.rhs = 2.0 / (m + n - 1.0);
      return parts;
    }
    case FunctionClass::hull_convex:
      parts.lhs = std::abs(product - tail) + std::abs(product);
      parts.rhs = 1.0;
      return parts;
    case FunctionClass::hull_convex_alpha: {
      const double amn = coefficient_A(m, cls.alpha) * coefficient_A(n, cls.alpha);
      const double atail = coefficient_A(m + n - 1, cls.alpha);
      parts.lhs = std::abs(product / amn - tail / atail) + std::abs(product) / amn;
      parts.rhs = 1.0;
      return parts;
    }
    case FunctionClass::hull_starlike: {
      const double mn = static_cast<double>(m) * n;
      parts.lhs = std::abs(product / mn - tail / (m + n - 1.0)) + std::abs(product) / mn;
      parts.rhs = 1.0;
      return parts;
    }
    case FunctionClass::koebe_family:
      throw std::invalid_argument("no sum-form bound is available for the koebe family");
  }
  throw std::invalid_argument("unhandled class");
}

double sum_form_check(const ClassSpec& cls, const TruncatedSeries& f, int m, int n) {
  return sum_form_parts(cls, f, m, n).slack();
}

EquivalenceCheck lemma_equivalence(const EquivalenceInstance& instance) {
  if (!(instance.C > 0.0)) throw std::invalid_argument("instance needs C > 0");
  if (!(instance.M >= 0.0)) throw std::invalid_argument("instance needs M >= 0");
  constexpr double kTol = 1e-12;
  const Complex a = instance.a;
  const Complex b = instance.b;
  const double C = instance.C;
  const double M = instance.M;

  EquivalenceCheck check;
  check.sum_holds = std::abs(a) + std::abs(b) * C <= M * C + kTol;

  std::vector<Complex> grid;
  const double radii[] = {0.0, 0.5 * C, C, 2.0 * C, 10.0 * C};
  for (double r : radii) {
    if (r == 0.0) {
      grid.push_back(Complex{0.0, 0.0});
      continue;
    }
    for (int k = 0; k < 72; ++k)
      grid.push_back(polar_point(r, 2.0 * std::numbers::pi * k / 72));
  }
  if (std::abs(b) > 0.0)
    grid.push_back(polar_point(C, std::arg(a) - std::arg(b)));

  check.max_holds_on_grid = true;
  double worst_ratio = -1.0;
  for (const Complex lambda : grid) {
    const double denom = std::max(C, std::abs(lambda));
    const double value = std::abs(a + lambda * b);
    if (value > M * denom + kTol) check.max_holds_on_grid = false;
    const double ratio = value / denom;
    if (ratio > worst_ratio) {  // strict: first maximizer in grid order wins
      worst_ratio = ratio;
      check.worst_lambda = lambda;
    }
  }
  return check;
}

CaratheodorySlacks caratheodory_checks(const TruncatedSeries& p, int n, int k, Complex w) {
  if (n < 2) throw std::invalid_argument("moment index must satisfy n >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("split index must satisfy 1 <= k <= n - 1");
  if (p.order() < n) throw std::invalid_argument("coefficient list must reach p_n");
  const Complex split = p.a(k) * p.a(n - k);
  CaratheodorySlacks slacks;
  slacks.max_form = 2.0 * std::max(1.0, std::abs(1.0 - 2.0 * w)) - std::abs(p.a(n) - w * split);
  slacks.sum_form = 2.0 - std::abs(p.a(n) - 0.5 * split) - 0.5 * std::abs(split);
  return slacks;
}

CriticalCircle critical_circle(const ClassSpec& cls, int m, int n) {
  validate_class_spec(cls);
  require_pair(m, n);
  switch (cls.cls) {
    case FunctionClass::hurwitz:
      if (m == n) return {Complex{0.0, 0.0}, n * n / (2.0 * n - 1.0)};
      return {Complex{0.0, 0.0}, 4.0 * m * n / (m + n - 1.0)};
    case FunctionClass::noshiro_warschawski: {
      const double c = m * n / (2.0 * (m + n - 1.0));
      return {Complex{c, 0.0}, c};
    }
    case FunctionClass::hull_convex:
      return {Complex{1.0, 0.0}, 1.0};
    case FunctionClass::hull_convex_alpha: {
      const double c = coefficient_A(m + n - 1, cls.alpha) /
                       (coefficient_A(m, cls.alpha) * coefficient_A(n, cls.alpha));
      return {Complex{c, 0.0}, c};
    }
    case FunctionClass::hull_starlike: {
      const double c = (m + n - 1.0) / (static_cast<double>(m) * n);
      return {Complex{c, 0.0}, c};
    }
    case FunctionClass::koebe_family:
      throw std::invalid_argument("no sharp bound is available for the koebe family");
  }
  throw std::invalid_argument("unhandled class");
}

std::vector<Complex> theorem_lambda_grid(const ClassSpec& cls, int m, int n,
                                         std::span<const double> radii, int angles) {
  if (angles < 1) throw std::invalid_argument("angular count must be positive");
  std::vector<Complex> grid;
  for (double r : radii) {
    if (!(r >= 0.0)) throw std::invalid_argument("grid radii must be nonnegative");
    if (r == 0.0) {
      grid.push_back(Complex{0.0, 0.0});
      continue;
    }
    for (int k = 0; k < angles; ++k)
      grid.push_back(polar_point(r, 2.0 * std::numbers::pi * k / angles));
  }
  grid.push_back(Complex{0.0, 0.0});
  grid.push_back(Complex{1.0, 0.0});
  const CriticalCircle circle = critical_circle(cls, m, n);
  for (double factor : {1.0, 0.75, 1.25}) {
    for (int k = 0; k < angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angles;
      grid.push_back(circle.center + polar_point(factor * circle.radius, theta));
    }
  }
  return grid;
}

std::optional<Complex> tightest_lambda(const ClassSpec& cls, int m, int n,
                                       Complex product, Complex tail) {
  const MaxFormFrame frame = max_form_frame(cls, m, n, product, tail);
  if (std::abs(frame.b) == 0.0) return std::nullopt;
  const Complex mu = polar_point(frame.C, std::arg(frame.a) - std::arg(frame.b));
  return (mu - frame.offset) / frame.scale;
}

}  // namespace zal
