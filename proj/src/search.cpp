#include "zal/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "zal/rng.hpp"

namespace zal {

namespace {

constexpr double kEarlyStopGap = 1e-8;
constexpr std::uint64_t kProbeSalt = 0x9e3779b97f4a7c15ULL;

int measure_atom_count(const ClassSpec& cls, int m, int n) {
  if (cls.cls == FunctionClass::koebe_family) return 1;
  return std::max(8, m + n - 2);
}

/// |Phi| evaluated straight from search coordinates.  Measure weights are
/// normalized inside the evaluation, so any nonnegative vector with positive
/// total is a valid point; Hurwitz weights are used as-is (the projection
/// keeps their sum within the budget).
class Objective {
 public:
  Objective(const ClassSpec& cls, const FunctionalSpec& spec)
      : cls_(cls), spec_(spec) {}

  double operator()(const std::vector<double>& weights,
                    const std::vector<double>& angles) const {
    const int m = spec_.m;
    const int n = spec_.n;
    Complex am, an, atail;
    if (cls_.cls == FunctionClass::hurwitz) {
      am = hurwitz_coefficient(weights, angles, m);
      an = hurwitz_coefficient(weights, angles, n);
      atail = hurwitz_coefficient(weights, angles, m + n - 1);
    } else {
      double total = 0.0;
      for (double w : weights) total += w;
      Complex pm{0.0, 0.0}, pn{0.0, 0.0}, ptail{0.0, 0.0};
      const int top = m + n - 2;
      for (size_t j = 0; j < weights.size(); ++j) {
        const Complex eta{std::cos(angles[j]), std::sin(angles[j])};
        Complex power{1.0, 0.0};
        for (int k = 1; k <= top; ++k) {
          power *= eta;
          if (k == m - 1) pm += weights[j] * power;
          if (k == n - 1) pn += weights[j] * power;
          if (k == top) ptail += weights[j] * power;
        }
      }
      pm *= 2.0 / total;
      pn *= 2.0 / total;
      ptail *= 2.0 / total;
      am = map_moment(m, pm);
      an = map_moment(n, pn);
      atail = map_moment(m + n - 1, ptail);
    }
    return std::abs(spec_.lambda * (am * an) - atail);
  }

 private:
  Complex hurwitz_coefficient(const std::vector<double>& weights,
                              const std::vector<double>& angles, int k) const {
    const size_t i = static_cast<size_t>(k - 2);
    if (i >= weights.size()) return Complex{0.0, 0.0};
    return (weights[i] / k) * Complex{std::cos(angles[i]), std::sin(angles[i])};
  }

  Complex map_moment(int k, Complex moment) const {
    switch (cls_.cls) {
      case FunctionClass::noshiro_warschawski: return moment / static_cast<double>(k);
      case FunctionClass::hull_convex: return 0.5 * moment;
      case FunctionClass::hull_convex_alpha: return 0.5 * coefficient_A(k, cls_.alpha) * moment;
      case FunctionClass::hull_starlike:
      case FunctionClass::koebe_family: return 0.5 * static_cast<double>(k) * moment;
      case FunctionClass::hurwitz: break;
    }
    return Complex{0.0, 0.0};
  }

  ClassSpec cls_;
  FunctionalSpec spec_;
};

double weight_total(const std::vector<double>& w) {
  double total = 0.0;
  for (double v : w) total += v;
  return total;
}

/// Clamp negatives; Hurwitz additionally rescales into the unit budget,
/// measures renormalize to the simplex (their objective is scale-free).
void project_weights(bool measure_based, std::vector<double>& w) {
  for (double& v : w) v = std::max(0.0, v);
  double total = weight_total(w);
  if (measure_based) {
    if (total > 0.0)
      for (double& v : w) v /= total;
  } else if (total > 1.0) {
    for (double& v : w) v /= total;
  }
}

SearchPoint random_point(const ClassSpec& cls, int m, int n, SampleRng& rng) {
  SearchPoint point;
  point.measure_based = cls.cls != FunctionClass::hurwitz;
  const size_t dim = point.measure_based
                         ? static_cast<size_t>(measure_atom_count(cls, m, n))
                         : static_cast<size_t>(m + n - 2);
  point.weights.resize(dim);
  point.angles.resize(dim);
  for (double& w : point.weights) w = rng.positive();
  if (!point.measure_based) {
    const double budget = rng.uniform();
    const double total = weight_total(point.weights);
    for (double& w : point.weights) w *= budget / total;
  }
  for (double& t : point.angles) t = rng.angle();
  project_weights(point.measure_based, point.weights);
  return point;
}

}  // namespace

TruncatedSeries series_from_point(const ClassSpec& cls, const SearchPoint& point, int order) {
  if (cls.cls == FunctionClass::hurwitz) {
    if (point.measure_based)
      throw std::invalid_argument("hurwitz points must carry budget weights");
    std::vector<double> weights(point.weights);
    std::vector<double> phases(point.angles);
    if (order < static_cast<int>(weights.size()) + 1)
      throw std::invalid_argument("order too small for the given hurwitz point");
    weights.resize(static_cast<size_t>(order - 1), 0.0);
    phases.resize(static_cast<size_t>(order - 1), 0.0);
    return hurwitz_series(weights, phases, order);
  }
  if (!point.measure_based)
    throw std::invalid_argument("kernel classes need measure-based points");
  if (point.weights.size() != point.angles.size())
    throw std::invalid_argument("point weights and angles must have equal length");
  std::vector<Atom> atoms;
  atoms.reserve(point.weights.size());
  for (size_t j = 0; j < point.weights.size(); ++j)
    atoms.push_back(Atom{point.weights[j],
                         Complex{std::cos(point.angles[j]), std::sin(point.angles[j])}});
  return series_from_measure(cls, HerglotzMeasure(std::move(atoms)), order);
}

SearchResult maximize_functional(const ClassSpec& cls, const FunctionalSpec& spec,
                                 const SearchConfig& config) {
  validate_class_spec(cls);
  if (spec.m < 2 || spec.n < 2)
    throw std::invalid_argument("functional indices must satisfy m, n >= 2");
  if (config.restarts < 1) throw std::invalid_argument("search needs at least one restart");
  if (config.max_evaluations < 1) throw std::invalid_argument("search needs a positive budget");
  const StepSchedule& sched = config.schedule;
  if (!(sched.initial > 0.0) || !(sched.decay > 0.0) || !(sched.decay < 1.0) ||
      !(sched.min_step > 0.0) || sched.min_step > sched.initial)
    throw std::invalid_argument("malformed step schedule");

  const double bound = sharp_bound(cls, spec);
  const double target = config.target.value_or(bound);
  const Objective objective(cls, spec);

  SearchResult result;
  result.bound = bound;
  result.seed = config.seed;
  result.best_value = -1.0;

  for (int restart = 0; restart < config.restarts; ++restart) {
    SampleRng rng(config.seed, kProbeSalt ^ static_cast<std::uint64_t>(restart));
    SearchPoint x = random_point(cls, spec.m, spec.n, rng);
    long evals = 0;
    double value = objective(x.weights, x.angles);
    ++evals;

    double step = sched.initial;
    while (step >= sched.min_step && evals < config.max_evaluations &&
           target - value > kEarlyStopGap) {
      bool improved = false;
      // Weight sweep.
      for (size_t i = 0; i < x.weights.size() && evals < config.max_evaluations; ++i) {
        for (double direction : {+1.0, -1.0}) {
          bool moved = true;
          while (moved && evals < config.max_evaluations) {
            moved = false;
            std::vector<double> w = x.weights;
            w[i] += direction * step;
            project_weights(x.measure_based, w);
            if (x.measure_based && weight_total(w) <= 0.0) break;
            const double v = objective(w, x.angles);
            ++evals;
            if (v > value) {
              x.weights = std::move(w);
              value = v;
              improved = moved = true;
            }
          }
        }
      }
      // Angle sweep.
      for (size_t i = 0; i < x.angles.size() && evals < config.max_evaluations; ++i) {
        for (double direction : {+1.0, -1.0}) {
          bool moved = true;
          while (moved && evals < config.max_evaluations) {
            moved = false;
            std::vector<double> t = x.angles;
            t[i] += direction * step * std::numbers::pi;
            const double v = objective(x.weights, t);
            ++evals;
            if (v > value) {
              x.angles = std::move(t);
              value = v;
              improved = moved = true;
            }
          }
        }
      }
      if (!improved) step *= sched.decay;
    }

    result.evaluations += evals;
    ++result.restarts_used;
    if (value > result.best_value) {  // strict: earliest restart wins ties
      result.best_value = value;
      project_weights(x.measure_based, x.weights);
      for (double& t : x.angles)
        t = std::fmod(std::fmod(t, 2.0 * std::numbers::pi) + 2.0 * std::numbers::pi,
                      2.0 * std::numbers::pi);
      result.params = x;
    }
    if (target - result.best_value <= kEarlyStopGap) break;
  }

  result.gap = bound - result.best_value;
  return result;
}

double strictness_probe(const ClassSpec& cls, const FunctionalSpec& spec,
                        const SearchPoint& point, double epsilon) {
  validate_class_spec(cls);
  if (!(epsilon >= 0.0)) throw std::invalid_argument("perturbation size must be >= 0");
  if (!point.measure_based && cls.cls != FunctionClass::hurwitz)
    throw std::invalid_argument("kernel classes need measure-based points");
  if (point.measure_based && cls.cls == FunctionClass::hurwitz)
    throw std::invalid_argument("hurwitz points must carry budget weights");
  const Objective objective(cls, spec);
  double best = -1.0;
  for (int k = 0; k < 32; ++k) {
    SampleRng rng(kProbeSalt, static_cast<std::uint64_t>(k));
    std::vector<double> w = point.weights;
    std::vector<double> t = point.angles;
    for (double& v : w) v += epsilon * rng.uniform(-1.0, 1.0);
    for (double& v : t) v += epsilon * std::numbers::pi * rng.uniform(-1.0, 1.0);
    project_weights(point.measure_based, w);
    if (point.measure_based && weight_total(w) <= 0.0) continue;
    best = std::max(best, objective(w, t));
  }
  return best;
}

nlohmann::json search_result_to_json(const SearchResult& result) {
  nlohmann::ordered_json params;
  if (result.params.measure_based) {
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (size_t j = 0; j < result.params.weights.size(); ++j)
      atoms.push_back({{"w", result.params.weights[j]}, {"theta", result.params.angles[j]}});
    params = nlohmann::ordered_json{{"atoms", atoms}};
  } else {
    params = nlohmann::ordered_json{{"weights", result.params.weights},
                                    {"phases", result.params.angles}};
  }
  return nlohmann::ordered_json{
      {"best_value", result.best_value}, {"bound", result.bound},
      {"gap", result.gap},               {"params", params},
      {"evaluations", result.evaluations}, {"restarts_used", result.restarts_used},
      {"seed", result.seed}};
}

}  // namespace zal
