#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zal/classes.hpp"
#include "zal/series.hpp"

namespace zal {

/// The coefficient functional Phi(f) = lambda a_m a_n - a_{m+n-1}.
struct FunctionalSpec {
  Complex lambda{0.0, 0.0};
  int m = 2;
  int n = 2;
};

/// Phi(f); requires m, n >= 2 and f.order() >= m + n - 1.
Complex zalcman(const TruncatedSeries& f, const FunctionalSpec& spec);

/// Sharp upper bound for |Phi| over the class:
///   hurwitz, m == n:      max(|lambda| / n^2, 1 / (2n - 1))
///   hurwitz, m != n:      max(|lambda| / (4 m n), 1 / (m + n - 1))
///   noshiro_warschawski:  (2 / (m+n-1)) max(1, |1 - 2 lambda (m+n-1) / (m n)|)
///   hull_convex:          max(1, |1 - lambda|)
///   hull_convex_alpha:    max(A_{m+n-1}, |lambda A_m A_n - A_{m+n-1}|)
///   hull_starlike:        (m+n-1) max(1, |1 - (m n / (m+n-1)) lambda|)
/// koebe_family has no sharp bound and is rejected.
double sharp_bound(const ClassSpec& cls, const FunctionalSpec& spec);

/// Lambda-free sum form of each class bound; slack = rhs - lhs >= 0 exactly
/// when |Phi| <= sharp_bound holds for every lambda.
struct SumFormParts {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};
SumFormParts sum_form_parts(const ClassSpec& cls, const TruncatedSeries& f, int m, int n);
double sum_form_check(const ClassSpec& cls, const TruncatedSeries& f, int m, int n);

/// Instance of the max/sum equivalence: |a + lambda b| <= M max(C, |lambda|)
/// for all lambda if and only if |a| + |b| C <= M C.
struct EquivalenceInstance {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double C = 1.0;
  double M = 1.0;
};

struct EquivalenceCheck {
  bool sum_holds = false;
  bool max_holds_on_grid = false;
  Complex worst_lambda{0.0, 0.0};  // grid maximizer of |a + lambda b| / max(C, |lambda|)
};

/// Checks both sides on the polar grid radii {0, C/2, C, 2C, 10C} x 72
/// angles, augmented with the critical lambda* = C e^{i(arg a - arg b)}
/// where the two sides agree exactly (when b != 0).  Tolerance 1e-12.
EquivalenceCheck lemma_equivalence(const EquivalenceInstance& instance);

/// Moment-product slacks for a Caratheodory coefficient list p:
///   max_form: 2 max(1, |1 - 2w|) - |p_n - w p_k p_{n-k}|
///   sum_form: 2 - |p_n - p_k p_{n-k} / 2| - |p_k p_{n-k}| / 2
/// Requires 1 <= k <= n - 1 and p.order() >= n.
struct CaratheodorySlacks {
  double max_form = 0.0;
  double sum_form = 0.0;
};
CaratheodorySlacks caratheodory_checks(const TruncatedSeries& p, int n, int k, Complex w);

/// Circle |s lambda + t| = 1 in the lambda plane separating the two branches
/// of the class bound; at its points both branch extremals attain the bound.
struct CriticalCircle {
  Complex center{0.0, 0.0};
  double radius = 0.0;
};
CriticalCircle critical_circle(const ClassSpec& cls, int m, int n);

/// Polar grid (radii x angles) augmented with 0, 1 and three rings around
/// the class's critical circle (on it, and factors 0.75 / 1.25 of its
/// radius), so every verification sweep probes both branches and the
/// threshold.
std::vector<Complex> theorem_lambda_grid(const ClassSpec& cls, int m, int n,
                                         std::span<const double> radii, int angles);

/// Lambda at which the class's max-form bound is tight for the given
/// coefficient data (product = a_m a_n, tail = a_{m+n-1}); the witness that
/// makes the finite-grid max form equivalent to the sum form.  Empty when
/// the product vanishes (every lambda inside the critical circle is then
/// equally extreme).
std::optional<Complex> tightest_lambda(const ClassSpec& cls, int m, int n,
                                       Complex product, Complex tail);

/// One verification record: |Phi| at a lambda against the class bound.
struct BoundReport {
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  double residual = 0.0;
};

}  // namespace zal
