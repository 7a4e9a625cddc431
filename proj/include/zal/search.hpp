#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "zal/classes.hpp"
#include "zal/functional.hpp"

namespace zal {

/// Shrinking-step schedule for the cyclic coordinate search.
struct StepSchedule {
  double initial = 0.4;
  double decay = 0.6;
  double min_step = 1e-10;
};

struct SearchConfig {
  int restarts = 20;
  long max_evaluations = 200000;  // objective evaluations per restart
  StepSchedule schedule{};
  std::uint64_t seed = 1;
  /// Early-stop target (the class bound); when absent the sharp bound is
  /// used.  A restart stops once target - value <= 1e-8.
  std::optional<double> target{};
};

/// Feasible point of the search domain.  Kernel classes use atom weights on
/// the probability simplex plus atom angles; the Hurwitz class uses budget
/// weights w_2..w_N (sum <= 1) plus coefficient phases.
struct SearchPoint {
  bool measure_based = true;
  std::vector<double> weights;
  std::vector<double> angles;
};

struct SearchResult {
  double best_value = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // bound - best_value
  SearchPoint params{};
  long evaluations = 0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

/// Class member encoded by a search point, truncated at `order`.
TruncatedSeries series_from_point(const ClassSpec& cls, const SearchPoint& point, int order);

/// Maximizes |Phi| over the class by restarted cyclic coordinate search
/// with shrinking steps.  Deterministic given the seed: restart j draws
/// from stream (seed, j) and ties keep the earliest restart.  The result
/// never exceeds the class bound beyond roundoff.
SearchResult maximize_functional(const ClassSpec& cls, const FunctionalSpec& spec,
                                 const SearchConfig& config);

/// Largest |Phi| over a fixed set of 32 seeded perturbations of the given
/// point, each of coordinate size epsilon, projected back to the feasible
/// set.  epsilon = 0 reproduces the point's own value; for a strict
/// extremal every positive epsilon stays below the bound.
double strictness_probe(const ClassSpec& cls, const FunctionalSpec& spec,
                        const SearchPoint& point, double epsilon);

/// {"best_value", "bound", "gap", "params", "evaluations", "restarts_used",
///  "seed"}; params serializes as a measure or as weight/phase arrays.
nlohmann::json search_result_to_json(const SearchResult& result);

}  // namespace zal
