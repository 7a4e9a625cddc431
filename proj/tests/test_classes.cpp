#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "zal/classes.hpp"

using namespace zal;
using zal::testing::near;

namespace {

const ClassSpec kKernelSpecs[] = {
    ClassSpec::noshiro_warschawski(), ClassSpec::hull_convex(),
    ClassSpec::hull_convex_alpha(-0.5), ClassSpec::hull_convex_alpha(0.25),
    ClassSpec::hull_convex_alpha(0.5), ClassSpec::hull_starlike()};

const ClassSpec kAllSpecs[] = {
    ClassSpec::hurwitz(),           ClassSpec::noshiro_warschawski(),
    ClassSpec::hull_convex(),       ClassSpec::hull_convex_alpha(-0.5),
    ClassSpec::hull_convex_alpha(0.25), ClassSpec::hull_convex_alpha(0.5),
    ClassSpec::hull_starlike(),     ClassSpec::koebe_family()};

// Per-class coefficient law of the single-atom member with position eta.
Complex atom_law(const ClassSpec& spec, int k, Complex eta) {
  Complex twist{1.0, 0.0};
  for (int i = 1; i < k; ++i) twist *= eta;
  switch (spec.cls) {
    case FunctionClass::noshiro_warschawski: return 2.0 / k * twist;
    case FunctionClass::hull_convex: return twist;
    case FunctionClass::hull_convex_alpha: return coefficient_A(k, spec.alpha) * twist;
    default: return static_cast<double>(k) * twist;
  }
}

}  // namespace

TEST_SUITE("classes") {

TEST_CASE("class names round trip") {
  for (const ClassSpec& spec : kAllSpecs) {
    const auto back = class_from_name(class_name(spec), spec.alpha);
    REQUIRE(back.has_value());
    CHECK(back->cls == spec.cls);
    CHECK(back->alpha == spec.alpha);
    const ClassSpec via_json = class_spec_from_json(class_spec_to_json(spec));
    CHECK(via_json.cls == spec.cls);
    CHECK(via_json.alpha == spec.alpha);
  }
  CHECK(!class_from_name("bieberbach").has_value());
  CHECK_THROWS_AS(validate_class_spec(ClassSpec::hull_convex_alpha(1.0)),
                  std::invalid_argument);
  validate_class_spec(ClassSpec::hull_convex_alpha(0.999));
}

TEST_CASE("convex-order coefficients from the finite product") {
  CHECK(coefficient_A(1, 0.7) == 1.0);
  for (int n = 1; n <= 8; ++n) {
    CHECK(coefficient_A(n, 0.0) == 1.0);
    CHECK(near(coefficient_A(n, 0.5), 1.0 / n, 1e-15));
    CHECK(near(coefficient_A(n, -0.5), (n + 1) / 2.0, 1e-13));
  }
  // (1/3!) (2 - 0.5)(3 - 0.5)
  CHECK(near(coefficient_A(3, 0.25), 0.625, 1e-15));
  CHECK_THROWS_AS(coefficient_A(0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_A(3, 1.0), std::invalid_argument);
}

TEST_CASE("measure-driven coefficient laws for a single atom") {
  const Complex eta{std::cos(0.6), std::sin(0.6)};
  const HerglotzMeasure mu = HerglotzMeasure::single_atom(eta);
  for (const ClassSpec& spec : kKernelSpecs) {
    const TruncatedSeries f = series_from_measure(spec, mu, 7);
    CHECK(f.a(1) == Complex{1.0, 0.0});
    for (int k = 2; k <= 7; ++k) CHECK(near(f.a(k), atom_law(spec, k, eta), 1e-13));
  }
  const TruncatedSeries koebe = series_from_measure(ClassSpec::koebe_family(), mu, 7);
  for (int k = 2; k <= 7; ++k)
    CHECK(near(koebe.a(k), atom_law(ClassSpec::hull_starlike(), k, eta), 1e-13));

  CHECK_THROWS_AS(series_from_measure(ClassSpec::hurwitz(), mu, 5), std::invalid_argument);
  const HerglotzMeasure two({Atom{0.5, Complex{1.0, 0.0}}, Atom{0.5, Complex{-1.0, 0.0}}});
  CHECK_THROWS_AS(series_from_measure(ClassSpec::koebe_family(), two, 5),
                  std::invalid_argument);
}

TEST_CASE("hurwitz series from budgeted weights") {
  const std::vector<double> weights{0.5, 0.3};
  const std::vector<double> phases{0.0, std::numbers::pi / 2};
  const TruncatedSeries f = hurwitz_series(weights, phases, 3);
  CHECK(f.a(1) == Complex{1.0, 0.0});
  CHECK(near(f.a(2), Complex{0.25, 0.0}, 1e-15));
  CHECK(near(f.a(3), Complex{0.0, 0.1}, 1e-15));

  const std::vector<double> heavy{0.9, 0.2};
  CHECK_THROWS_AS(hurwitz_series(heavy, phases, 3), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_series(weights, phases, 4), std::invalid_argument);
  const std::vector<double> negative{-0.1, 0.2};
  CHECK_THROWS_AS(hurwitz_series(negative, phases, 3), std::invalid_argument);
}

TEST_CASE("sampled members stay in their class") {
  for (const ClassSpec& spec : kAllSpecs) {
    SampleRng rng(2026, static_cast<std::uint64_t>(spec.cls));
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const TruncatedSeries f = sample(spec, 10, rng);
      CHECK(f.a(1) == Complex{1.0, 0.0});
      worst = std::max(worst, membership_residual(spec, f));
    }
    CAPTURE(class_name(spec));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("hurwitz members satisfy the derivative condition") {
  const ClassSpec nw = ClassSpec::noshiro_warschawski();
  SampleRng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const TruncatedSeries f = sample(ClassSpec::hurwitz(), 9, rng);
    CHECK(membership_residual(nw, f) <= 1e-9);
  }
}

TEST_CASE("membership residual flags clear violators") {
  // sum 2 |a_2| = 1.2 over the budget 1
  TruncatedSeries budget = TruncatedSeries::identity(3);
  budget.set(2, Complex{0.6, 0.0});
  CHECK(near(membership_residual(ClassSpec::hurwitz(), budget), 0.2, 1e-12));

  // Re f' at z = -1/2 is 1 - 2.4 (1/2) = -0.2.
  TruncatedSeries steep = TruncatedSeries::identity(4);
  steep.set(2, Complex{1.2, 0.0});
  CHECK(near(membership_residual(ClassSpec::noshiro_warschawski(), steep), 0.2, 1e-12));

  // Re f/z at z = 1/2 is 1 - 0.75 = 0.25, under the floor 1/2.
  TruncatedSeries shallow = TruncatedSeries::identity(4);
  shallow.set(2, Complex{-1.5, 0.0});
  CHECK(near(membership_residual(ClassSpec::hull_convex(), shallow), 0.25, 1e-12));

  // Recovered kernel 1 + 3z has real part -1/2 at z = -1/2.
  TruncatedSeries heavy = TruncatedSeries::identity(4);
  heavy.set(2, Complex{3.0, 0.0});
  CHECK(near(membership_residual(ClassSpec::hull_starlike(), heavy), 0.5, 1e-12));
}

TEST_CASE("truncated genuine members never flag") {
  // Taking more terms of the same function must not push the residual up.
  const HerglotzMeasure mu = HerglotzMeasure::single_atom(Complex{1.0, 0.0});
  for (const ClassSpec& spec : kKernelSpecs)
    for (int order : {2, 3, 5, 10, 40})
      CHECK(membership_residual(spec, series_from_measure(spec, mu, order)) <= 1e-9);
  const std::vector<double> weights{1.0};
  const std::vector<double> phases{std::numbers::pi / 3};
  CHECK(membership_residual(ClassSpec::hurwitz(), hurwitz_series(weights, phases, 2)) <=
        1e-9);
}

TEST_CASE("closed-form equality cases are members with the stated support") {
  for (const ClassSpec& spec : kAllSpecs) {
    if (spec.cls == FunctionClass::koebe_family) continue;
    for (int m : {2, 3, 5})
      for (int n : {2, 4}) {
        for (ExtremalBranch branch : {ExtremalBranch::generic, ExtremalBranch::resonant}) {
          const TruncatedSeries f = extremal(spec, m, n, branch);
          CHECK(f.order() == 2 * std::max(m, n));
          CAPTURE(class_name(spec));
          CHECK(membership_residual(spec, f) <= 1e-9);
          if (branch == ExtremalBranch::resonant) {
            const int q = m + n - 2;
            for (int k = 2; k <= f.order(); ++k)
              if ((k - 1) % q != 0) CHECK(std::abs(f.a(k)) == 0.0);
          }
        }
      }
  }
  CHECK_THROWS_AS(extremal(ClassSpec::koebe_family(), 2, 2, ExtremalBranch::generic),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal(ClassSpec::hurwitz(), 2, 2, ExtremalBranch::generic, 2),
                  std::invalid_argument);
}

TEST_CASE("kernel equality cases come from explicit measures") {
  const int m = 3, n = 4, order = 12;
  for (const ClassSpec& spec : kKernelSpecs) {
    const TruncatedSeries gen = extremal(spec, m, n, ExtremalBranch::generic, order);
    const TruncatedSeries gen_mu = series_from_measure(
        spec, HerglotzMeasure::single_atom(Complex{1.0, 0.0}), order);
    const TruncatedSeries res = extremal(spec, m, n, ExtremalBranch::resonant, order);
    const TruncatedSeries res_mu = series_from_measure(
        spec, HerglotzMeasure::uniform_roots_of_unity(m + n - 2), order);
    for (int k = 1; k <= order; ++k) {
      CHECK(near(gen.a(k), gen_mu.a(k), 1e-13));
      CHECK(near(res.a(k), res_mu.a(k), 1e-13));
    }
  }
}

TEST_CASE("hurwitz equality cases have the stated coefficients") {
  const Complex alpha{std::cos(1.1), std::sin(1.1)};
  const Complex beta{std::cos(-0.4), std::sin(-0.4)};
  const TruncatedSeries gen =
      extremal(ClassSpec::hurwitz(), 2, 3, ExtremalBranch::generic, 6, alpha, beta);
  CHECK(near(gen.a(2), alpha / 4.0, 1e-15));
  CHECK(near(gen.a(3), beta / 6.0, 1e-15));
  CHECK(std::abs(gen.a(4)) == 0.0);

  const TruncatedSeries diag =
      extremal(ClassSpec::hurwitz(), 3, 3, ExtremalBranch::generic, 6, alpha, beta);
  CHECK(near(diag.a(3), alpha / 3.0, 1e-15));

  const TruncatedSeries res =
      extremal(ClassSpec::hurwitz(), 2, 3, ExtremalBranch::resonant, 6, alpha, beta);
  CHECK(near(res.a(4), alpha / 4.0, 1e-15));
  CHECK(std::abs(res.a(2)) == 0.0);
  CHECK(std::abs(res.a(3)) == 0.0);
}

TEST_CASE("sampling is reproducible from seed and stream") {
  for (const ClassSpec& spec : kAllSpecs) {
    SampleRng a(5, 17);
    SampleRng b(5, 17);
    const TruncatedSeries f = sample(spec, 8, a);
    const TruncatedSeries g = sample(spec, 8, b);
    for (int k = 1; k <= 8; ++k) CHECK(f.a(k) == g.a(k));
  }
}

}  // TEST_SUITE
