#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "zal/asymptotics.hpp"
#include "zal/rng.hpp"

using namespace zal;
using zal::testing::near;

TEST_SUITE("asymptotics") {

TEST_CASE("closed forms at pinned points") {
  const Complex half{0.5, 0.0};
  CHECK(near(ClosedFormFunction(ClosedFormKind::identity)(half), half, 1e-15));
  CHECK(near(ClosedFormFunction(ClosedFormKind::koebe)(half), Complex{2.0, 0.0}, 1e-15));
  CHECK(near(ClosedFormFunction(ClosedFormKind::half_plane)(half), Complex{1.0, 0.0},
             1e-15));
  CHECK(near(ClosedFormFunction(ClosedFormKind::two_slit)(half),
             Complex{2.0 / 3.0, 0.0}, 1e-15));
  CHECK_THROWS_AS(ClosedFormFunction(ClosedFormKind::koebe)(Complex{1.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("closed-form coefficients") {
  const ClosedFormFunction koebe(ClosedFormKind::koebe);
  CHECK(koebe.coefficient(1) == Complex{1.0, 0.0});
  CHECK(koebe.coefficient(7) == Complex{7.0, 0.0});
  const ClosedFormFunction slit(ClosedFormKind::two_slit);
  CHECK(slit.coefficient(3) == Complex{1.0, 0.0});
  CHECK(slit.coefficient(4) == Complex{0.0, 0.0});
  CHECK(slit.coefficient(5) == Complex{1.0, 0.0});
  const ClosedFormFunction id(ClosedFormKind::identity);
  CHECK(id.coefficient(1) == Complex{1.0, 0.0});
  CHECK(id.coefficient(2) == Complex{0.0, 0.0});
  CHECK_THROWS_AS(koebe.coefficient(0), std::invalid_argument);
}

TEST_CASE("rotations twist coefficients and conjugate values") {
  const Complex c{std::cos(0.8), std::sin(0.8)};
  const ClosedFormFunction plain(ClosedFormKind::koebe);
  const ClosedFormFunction turned(ClosedFormKind::koebe, c);
  Complex twist{1.0, 0.0};
  for (int k = 1; k <= 9; ++k) {
    CHECK(near(turned.coefficient(k), plain.coefficient(k) * twist, 1e-14));
    twist *= c;
  }
  const Complex z{0.31, -0.2};
  CHECK(near(turned(z), plain(c * z) / c, 1e-14));
  CHECK_THROWS_AS(ClosedFormFunction(ClosedFormKind::koebe, Complex{0.5, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("named lookups round trip") {
  for (const char* name : {"identity", "koebe", "half_plane", "two_slit"}) {
    const ClosedFormFunction f = ClosedFormFunction::from_name(name);
    CHECK(static_cast<int>(f.kind()) >= 0);
  }
  CHECK(ClosedFormFunction::from_name("koebe").coefficient(3) == Complex{3.0, 0.0});
  CHECK_THROWS_AS(ClosedFormFunction::from_name("bogus"), std::invalid_argument);
}

TEST_CASE("the maximum modulus matches closed forms") {
  const ClosedFormFunction koebe(ClosedFormKind::koebe);
  CHECK(near(max_modulus(koebe, 0.5), 2.0, 1e-12));
  CHECK(near(max_modulus(koebe, 0.0), 0.0, 1e-15));

  TruncatedSeries geometric = TruncatedSeries::identity(30);
  for (int k = 2; k <= 30; ++k) geometric.set(k, Complex{1.0, 0.0});
  const double r = 0.3;
  const double expected = r * (1.0 - std::pow(r, 30)) / (1.0 - r);
  CHECK(near(max_modulus(geometric, r), expected, 1e-12));

  CHECK_THROWS_AS(max_modulus(koebe, 1.0), std::domain_error);
  CHECK_THROWS_AS(max_modulus(koebe, 0.5, 7), std::invalid_argument);
}

TEST_CASE("hayman estimates track the known growth rates") {
  const HaymanEstimate koebe =
      hayman_index(ClosedFormFunction(ClosedFormKind::koebe), 12);
  REQUIRE(koebe.radii.size() == 12);
  for (int j = 1; j <= 12; ++j) {
    CHECK(koebe.radii[j - 1] == 1.0 - std::ldexp(1.0, -j));
    // (1-r)^2 max|f| equals r itself for the koebe function.
    CHECK(near(koebe.values[j - 1], koebe.radii[j - 1], 1e-9));
  }
  CHECK(koebe.alpha_hat >= 0.999);
  CHECK(koebe.alpha_hat == koebe.values.back());

  const HaymanEstimate slit =
      hayman_index(ClosedFormFunction(ClosedFormKind::two_slit), 10);
  for (int j = 1; j <= 10; ++j) {
    const double r = slit.radii[j - 1];
    CHECK(near(slit.values[j - 1], r * (1.0 - r) / (1.0 + r), 1e-9));
  }
  CHECK(slit.values[9] < 1e-3);

  CHECK_THROWS_AS(hayman_index(ClosedFormFunction(ClosedFormKind::koebe), 0),
                  std::invalid_argument);
}

TEST_CASE("index paths enumerate the right pairs") {
  const auto diag = scan_path_pairs(ScanPath::diagonal, 2, 4);
  CHECK(diag == std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 4}});
  const auto doubled = scan_path_pairs(ScanPath::doubled, 3, 7, 2);
  CHECK(doubled == std::vector<std::pair<int, int>>{{3, 6}, {5, 10}, {7, 14}});
  const auto offset = scan_path_pairs(ScanPath::offset, 50, 70, 10);
  CHECK(offset == std::vector<std::pair<int, int>>{{50, 55}, {60, 65}, {70, 75}});
  CHECK(scan_path_name(ScanPath::doubled) == "doubled");
  CHECK(scan_path_from_name("offset") == ScanPath::offset);
  CHECK_THROWS_AS(scan_path_from_name("zigzag"), std::invalid_argument);
  CHECK_THROWS_AS(scan_path_pairs(ScanPath::diagonal, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(scan_path_pairs(ScanPath::diagonal, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(scan_path_pairs(ScanPath::diagonal, 2, 4, 0), std::invalid_argument);
}

TEST_CASE("coefficient ratios separate growth regimes") {
  const auto koebe = [](int k) { return Complex{static_cast<double>(k), 0.0}; };
  const auto slit = [](int k) {
    return k % 2 == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  };

  for (ScanPath path : {ScanPath::diagonal, ScanPath::doubled, ScanPath::offset}) {
    const auto pairs = scan_path_pairs(path, 50, 200, 10);
    for (const RatioPoint& point :
         ratio_convergence(koebe, Complex{2.0, 1.0}, pairs))
      CHECK(point.ratio == 1.0);
  }

  const auto diag = scan_path_pairs(ScanPath::diagonal, 50, 200, 10);
  const auto slit_ratios = ratio_convergence(slit, Complex{1.0, 0.0}, diag);
  for (const RatioPoint& point : slit_ratios) CHECK(point.ratio <= 1e-3);
  CHECK(slit_ratios.back().m == 200);
  CHECK(slit_ratios.back().ratio == 1.0 / 39601.0);

  const std::vector<std::pair<int, int>> square{{2, 2}};
  CHECK_THROWS_WITH_AS(ratio_convergence(koebe, Complex{0.75, 0.0}, square),
                       "ratio denominator vanishes at (m, n) = (2, 2)",
                       std::invalid_argument);
  const std::vector<std::pair<int, int>> low{{1, 3}};
  CHECK_THROWS_AS(ratio_convergence(koebe, Complex{1.0, 0.0}, low),
                  std::invalid_argument);
}

TEST_CASE("witness pairs mark where the ratio tail settles") {
  const auto koebe = [](int k) { return Complex{static_cast<double>(k), 0.0}; };
  const auto slit = [](int k) {
    return k % 2 == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  };
  const auto diag = scan_path_pairs(ScanPath::diagonal, 50, 200, 10);

  CHECK(!asymptotic_witness(koebe, Complex{0.0, 0.0}, 0.1, diag).has_value());
  const auto first = asymptotic_witness(slit, Complex{1.0, 0.0}, 0.1, diag);
  REQUIRE(first.has_value());
  CHECK(*first == std::pair{50, 50});

  // A stream that stops growing mid-range settles exactly where the oracle says.
  const auto mixed = [](int k) {
    return k <= 150 ? Complex{static_cast<double>(k), 0.0} : Complex{0.0, 0.0};
  };
  const auto ratios = ratio_convergence(mixed, Complex{0.0, 0.0}, diag);
  std::optional<std::pair<int, int>> oracle;
  for (size_t i = ratios.size(); i-- > 0;) {
    if (ratios[i].ratio > 0.5) break;
    oracle = diag[i];
  }
  REQUIRE(oracle.has_value());
  CHECK(*oracle == std::pair{80, 80});
  const auto witness = asymptotic_witness(mixed, Complex{0.0, 0.0}, 0.5, diag);
  REQUIRE(witness.has_value());
  CHECK(*witness == *oracle);

  CHECK_THROWS_AS(asymptotic_witness(koebe, Complex{0.0, 0.0}, 0.0, diag),
                  std::invalid_argument);
}

TEST_CASE("the four audit statements agree on koebe pairs") {
  const AuditGrids grids = default_audit_grids();
  for (int n = 2; n <= 10; ++n) {
    const AuditVerdict verdict = zalcman_equivalence_audit(
        Complex{static_cast<double>(n), 0.0}, Complex{2.0 * n - 1.0, 0.0}, n, grids);
    CHECK(verdict.base);
    CHECK(verdict.segment);
    CHECK(verdict.ray);
    CHECK(verdict.plane);
    CHECK(verdict.agree());
  }
}

TEST_CASE("the four audit statements agree on random admissible pairs") {
  const AuditGrids grids = default_audit_grids();
  SampleRng rng(21);
  for (int n : {2, 3, 5, 8})
    for (int trial = 0; trial < 150; ++trial) {
      const double xr = n * std::sqrt(rng.uniform());
      const double yr = (2.0 * n - 1.0) * std::sqrt(rng.uniform());
      const Complex x = xr * rng.unimodular();
      const Complex y = yr * rng.unimodular();
      const AuditVerdict verdict = zalcman_equivalence_audit(x, y, n, grids);
      CAPTURE(n);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(verdict.agree());
    }
}

TEST_CASE("audit edge cases") {
  const AuditGrids grids = default_audit_grids();
  const Complex zero{0.0, 0.0};

  const AuditVerdict tight = zalcman_equivalence_audit(Complex{2.0, 0.0}, zero, 3, grids);
  CHECK(tight.base);
  CHECK(tight.agree());
  const AuditVerdict fat = zalcman_equivalence_audit(Complex{3.0, 0.0}, zero, 3, grids);
  CHECK(!fat.base);
  CHECK(fat.agree());

  CHECK_THROWS_AS(
      zalcman_equivalence_audit(Complex{1.0, 0.0}, Complex{5.6, 0.0}, 3, grids),
      std::domain_error);
  CHECK_THROWS_AS(zalcman_equivalence_audit(zero, zero, 1, grids),
                  std::invalid_argument);
  AuditGrids bad_t = grids;
  bad_t.t = {0.0, 1.5};
  CHECK_THROWS_AS(zalcman_equivalence_audit(zero, zero, 3, bad_t),
                  std::invalid_argument);
  AuditGrids empty = grids;
  empty.r.clear();
  CHECK_THROWS_AS(zalcman_equivalence_audit(zero, zero, 3, empty),
                  std::invalid_argument);
}

TEST_CASE("conjecture scans sit at zero slack on koebe pairs") {
  const PairSampler koebe_pairs = [](int n, long) {
    return std::pair{Complex{static_cast<double>(n), 0.0},
                     Complex{2.0 * n - 1.0, 0.0}};
  };
  ConjectureParams params;
  params.t = 1.0;
  const ScanReport b = conjecture_scan(koebe_pairs, 3, ConjecturePredicate::b_t, params,
                                       2, 10);
  CHECK(b.min_slack == 0.0);
  CHECK(b.violations == 0);
  CHECK(b.rows == 27);

  params.r = 2.0;
  const ScanReport c = conjecture_scan(koebe_pairs, 3, ConjecturePredicate::c_r, params,
                                       2, 10);
  CHECK(c.min_slack == 0.0);
  CHECK(c.violations == 0);

  params.r = 0.5;
  const ScanReport d = conjecture_scan(koebe_pairs, 3, ConjecturePredicate::d_r, params,
                                       2, 10);
  CHECK(std::abs(d.min_slack) <= 1e-12);
  CHECK(d.violations == 0);
}

TEST_CASE("conjecture scans expose violators and report the worst row") {
  const PairSampler violator = [](int n, long) {
    return std::pair{Complex{static_cast<double>(n), 0.0},
                     Complex{-1.5 * (2.0 * n - 1.0), 0.0}};
  };
  long seen = 0;
  const ScanSink sink = [&seen](const ScanRow&) { ++seen; };
  ConjectureParams params;
  const ScanReport report = conjecture_scan(violator, 4, ConjecturePredicate::b_t,
                                            params, 2, 6, 1e-9, sink);
  CHECK(report.rows == 20);
  CHECK(seen == report.rows);
  CHECK(report.violations == report.rows);
  CHECK(report.worst.n == 6);
  CHECK(report.worst.sample_index == 0);
  CHECK(report.worst.violated);
  CHECK(report.worst.param == 1.0);
  CHECK(report.min_slack == report.worst.slack);
}

TEST_CASE("scan inputs are validated") {
  const PairSampler trivial = [](int, long) {
    return std::pair{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  };
  ConjectureParams params;
  CHECK_THROWS_AS(conjecture_scan({}, 1, ConjecturePredicate::b_t, params, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(trivial, 0, ConjecturePredicate::b_t, params, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(trivial, 1, ConjecturePredicate::b_t, params, 1, 4),
                  std::invalid_argument);
  params.t = 1.5;
  CHECK_THROWS_AS(conjecture_scan(trivial, 1, ConjecturePredicate::b_t, params, 2, 4),
                  std::invalid_argument);
  params = ConjectureParams{};
  params.r = -0.5;
  CHECK_THROWS_AS(conjecture_scan(trivial, 1, ConjecturePredicate::c_r, params, 2, 4),
                  std::invalid_argument);
  CHECK(predicate_from_name("d_r") == ConjecturePredicate::d_r);
  CHECK(predicate_name(ConjecturePredicate::c_r) == "c_r");
  CHECK_THROWS_AS(predicate_from_name("e_r"), std::invalid_argument);
}

TEST_CASE("the square-root iteration walks the constant toward 1") {
  const BieberbachIteration run = bieberbach_iterate(std::exp(1.0), 1.0, 8);
  REQUIRE(run.constants.size() == 9);
  CHECK(run.constants[0] == std::exp(1.0));
  CHECK(run.constants[1] == std::sqrt(std::exp(1.0)));
  CHECK(run.constants[1] == 1.6487212707001282);
  for (size_t j = 1; j < run.constants.size(); ++j)
    CHECK(run.constants[j] < run.constants[j - 1]);
  // The constant first drops below 1.01 on the seventh halving.
  CHECK(run.constants[6] >= 1.01);
  CHECK(run.constants[7] < 1.01);
  CHECK(run.min_step_slack >= 0.0);

  const BieberbachIteration still = bieberbach_iterate(2.0, 0.5, 0);
  CHECK(still.constants == std::vector<double>{2.0});
  CHECK(std::isinf(still.min_step_slack));
}

TEST_CASE("each halving step keeps a nonnegative margin") {
  CHECK(near(bieberbach_step_slack(2, 1.0, std::exp(1.0)), std::exp(1.0) - 1.0, 1e-14));
  for (int n = 2; n <= 20; ++n)
    for (double t : {0.25, 0.5, 1.0})
      for (double C : {1.01, 2.0, std::exp(1.0)})
        CHECK(bieberbach_step_slack(n, t, C) >= 0.0);

  CHECK_THROWS_AS(bieberbach_iterate(1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(bieberbach_iterate(2.0, 0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(bieberbach_iterate(2.0, 1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(bieberbach_iterate(2.0, 1.0, -1), std::invalid_argument);
}

}  // TEST_SUITE
