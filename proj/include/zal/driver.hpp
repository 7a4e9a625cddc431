#pragma once
// Command layer shared by the command-line tool and the tests.  A RunConfig
// describes one invocation; run() dispatches it, writes a CSV or JSON report
// to the configured destination, and returns the process exit status:
//   0  every checked property held
//   1  a checked property failed (bound violation, audit disagreement,
//      missed gap assertion, extremal mismatch, scan violation)
//   2  unusable input (validation and parse errors)

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zal/classes.hpp"
#include "zal/functional.hpp"

namespace zal {

enum class Command { verify, extremal, search, scan, hayman, ratio, audit };
enum class ReportFormat { csv, json };

std::string command_name(Command command);
Command command_from_name(const std::string& name);
std::string format_name(ReportFormat format);
ReportFormat format_from_name(const std::string& name);

/// Polar lambda grid specification, written "r1,r2,... x K" on the command
/// line (radii times angle count).
struct LambdaGrid {
  std::vector<double> radii{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  int angles = 16;
};

LambdaGrid parse_lambda_grid(const std::string& text);

/// Parses "re" or "re,im".
Complex parse_complex(const std::string& text);

struct RunConfig {
  Command command = Command::verify;
  std::optional<ClassSpec> cls{};
  int m = 0;  // 0 sweeps m over 2..5
  int n = 0;  // 0 sweeps n over 2..5
  std::optional<Complex> lambda{};
  LambdaGrid lambda_grid{};
  long samples = 100;
  std::uint64_t seed = 1;
  int order = 0;  // 0 means 2 max(m, n)
  double tol = 1e-9;
  std::string out{};  // empty writes to stdout
  ReportFormat format = ReportFormat::csv;
  bool deterministic = false;  // suppress the timestamp header
  std::string function_name = "koebe";
  std::string predicate = "b_t";
  double t = 1.0;
  double r = 0.0;
  int restarts = 20;
  std::optional<double> assert_gap{};
  int n_max = 10;
  int j_max = 20;
  int n_lo = 50;
  int n_hi = 200;
  int stride = 10;
  std::optional<Complex> audit_an{};
  std::optional<Complex> audit_a2n1{};
  std::optional<int> audit_n{};
};

/// Fills a RunConfig from a JSON object whose keys mirror the command-line
/// flags ("lambda-grid", "n-max", ...).  Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);

/// One verification record.  A row without a lambda is a sum-form row: value
/// and bound are the two sides of the class's sum inequality.  Rows with a
/// lambda compare |Phi| against the class bound at that lambda.
struct VerifyRow {
  std::string cls;
  int m = 0;
  int n = 0;
  std::optional<Complex> lambda{};
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  double residual = 0.0;
  std::uint64_t seed = 0;
  long sample_index = 0;
};

struct VerifySummary {
  long pairs = 0;
  long rows = 0;
  long flagged_samples = 0;  // samples whose residual exceeded the tolerance
  double min_slack = 0.0;    // over rows from unflagged samples
};

using VerifySink = std::function<void(const VerifyRow&)>;
using SampleOverride = std::function<TruncatedSeries(
    const ClassSpec& cls, const FunctionalSpec& spec, int order, std::uint64_t seed,
    long sample_index)>;

/// Core of the verify command, exposed so large scans can stream rows into a
/// sink instead of materializing a report.  For every index pair it draws
/// samples, emits one sum-form row plus one max-form row per grid lambda
/// (the grid is augmented with the per-sample tightest lambda), and
/// aggregates the minimum slack over samples that pass the membership check.
/// The override, when given, replaces the class sampler.
VerifySummary verify_scan(const RunConfig& cfg, const VerifySink& sink = {},
                          const SampleOverride& override_sampler = {});

/// Runs the configured command end to end.
int run(const RunConfig& cfg);

}  // namespace zal
