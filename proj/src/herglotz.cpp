#include "zal/herglotz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace zal {

namespace {

constexpr double kUnimodularTolerance = 1e-12;

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty())
    throw std::invalid_argument("measure needs at least one atom");
  double total = 0.0;
  for (Atom& atom : atoms_) {
    if (!(atom.weight >= 0.0))
      throw std::invalid_argument("atom weights must be nonnegative");
    const double mod = std::abs(atom.position);
    if (std::abs(mod - 1.0) > kUnimodularTolerance)
      throw std::invalid_argument("atom positions must lie on the unit circle");
    atom.position /= mod;
    total += atom.weight;
  }
  if (!(total > 0.0))
    throw std::invalid_argument("atom weights must have positive total mass");
  for (Atom& atom : atoms_) atom.weight /= total;
}

HerglotzMeasure HerglotzMeasure::single_atom(Complex position) {
  return HerglotzMeasure({Atom{1.0, position}});
}

HerglotzMeasure HerglotzMeasure::uniform_roots_of_unity(int q) {
  if (q < 1) throw std::invalid_argument("root count must be positive");
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<size_t>(q));
  for (int j = 0; j < q; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / q;
    atoms.push_back(Atom{1.0 / q, Complex{std::cos(theta), std::sin(theta)}});
  }
  return HerglotzMeasure(std::move(atoms));
}

Complex HerglotzMeasure::kernel_value(Complex z) const {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("kernel evaluation needs |z| < 1");
  Complex acc{0.0, 0.0};
  for (const Atom& atom : atoms_) {
    const Complex ez = atom.position * z;
    acc += atom.weight * (1.0 + ez) / (1.0 - ez);
  }
  return acc;
}

TruncatedSeries caratheodory_coefficients(const HerglotzMeasure& measure, int order) {
  if (order < 0) throw std::invalid_argument("coefficient order must be nonnegative");
  TruncatedSeries p = TruncatedSeries::zero(order);
  std::vector<Complex> powers(measure.atoms().size(), Complex{1.0, 0.0});
  for (int n = 1; n <= order; ++n) {
    Complex acc{0.0, 0.0};
    size_t j = 0;
    for (const Atom& atom : measure.atoms()) {
      powers[j] *= atom.position;  // eta_j^n
      acc += atom.weight * powers[j];
      ++j;
    }
    p.set(n, 2.0 * acc);
  }
  return p;
}

HerglotzMeasure sample_measure(int atom_count, SampleRng& rng) {
  if (atom_count < 1) throw std::invalid_argument("atom count must be positive");
  std::vector<Atom> atoms(static_cast<size_t>(atom_count));
  for (Atom& atom : atoms) atom.position = rng.unimodular();
  for (Atom& atom : atoms) atom.weight = rng.positive();
  return HerglotzMeasure(std::move(atoms));  // constructor normalizes weights
}

double verify_positive_real_part(const HerglotzMeasure& measure,
                                 std::span<const double> radii, int angles) {
  if (angles < 1) throw std::invalid_argument("angular count must be positive");
  double min_re = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    if (r < 0.0 || r >= 1.0)
      throw std::domain_error("grid radii must lie in [0, 1)");
    for (int k = 0; k < angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angles;
      const Complex z = r * Complex{std::cos(theta), std::sin(theta)};
      min_re = std::min(min_re, measure.kernel_value(z).real());
    }
  }
  return min_re;
}

nlohmann::json measure_to_json(const HerglotzMeasure& measure) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& atom : measure.atoms()) {
    atoms.push_back({{"w", atom.weight},
                     {"theta", std::arg(atom.position)}});
  }
  return nlohmann::json{{"atoms", atoms}};
}

HerglotzMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw std::invalid_argument("measure json needs an \"atoms\" array");
  std::vector<Atom> atoms;
  for (const auto& entry : j["atoms"]) {
    const double w = entry.at("w").get<double>();
    const double theta = entry.at("theta").get<double>();
    atoms.push_back(Atom{w, Complex{std::cos(theta), std::sin(theta)}});
  }
  return HerglotzMeasure(std::move(atoms));
}

}  // namespace zal
