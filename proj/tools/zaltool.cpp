// Command-line front end: thin flag parsing over the shared driver.  A JSON
// config file can preset any flag; flags given on the command line win.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zal/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sharp-bound verification and exploration for coefficient functionals"};

  std::string command = "verify";
  std::string cls_name;
  std::string lambda_text;
  std::string grid_text;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  std::string function_name = "koebe";
  std::string predicate = "b_t";
  std::string an_text;
  std::string a2n1_text;
  double alpha = 0.0, tol = 1e-9, t = 1.0, r = 0.0, assert_gap = 0.0;
  int m = 0, n = 0, order = 0, restarts = 20;
  int n_max = 10, j_max = 20, n_lo = 50, n_hi = 200, stride = 10, audit_n = 0;
  long samples = 100;
  std::uint64_t seed = 1;
  bool deterministic = false;

  app.add_option("--command", command, "verify|extremal|search|scan|hayman|ratio|audit");
  app.add_option("--class", cls_name,
                 "hurwitz|nw|hull_convex|hull_convex_alpha|hull_starlike|koebe");
  app.add_option("--alpha", alpha, "order parameter for hull_convex_alpha");
  app.add_option("--m", m, "first index (0 sweeps 2..5)");
  app.add_option("--n", n, "second index (0 sweeps 2..5)");
  app.add_option("--lambda", lambda_text, "complex weight, \"re\" or \"re,im\"");
  app.add_option("--lambda-grid", grid_text, "polar grid \"r1,r2,... x K\"");
  app.add_option("--samples", samples, "random samples per index pair");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--order", order, "truncation order (0 picks 2 max(m, n))");
  app.add_option("--tol", tol, "slack tolerance");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "csv|json");
  app.add_flag("--deterministic", deterministic, "omit the timestamp header");
  app.add_option("--config", config_path, "JSON file presetting these flags");
  app.add_option("--function", function_name, "identity|koebe|half_plane|two_slit");
  app.add_option("--predicate", predicate, "b_t|c_r|d_r");
  app.add_option("--t", t, "segment parameter in [0, 1]");
  app.add_option("--r", r, "ray / circle parameter, >= 0");
  app.add_option("--restarts", restarts, "search restarts");
  app.add_option("--assert-gap", assert_gap, "fail when the search gap exceeds this");
  app.add_option("--n-max", n_max, "largest index for scan and audit");
  app.add_option("--j-max", j_max, "dyadic radius count");
  app.add_option("--n-lo", n_lo, "first index on ratio paths");
  app.add_option("--n-hi", n_hi, "last index on ratio paths");
  app.add_option("--stride", stride, "index stride on ratio paths");
  app.add_option("--an", an_text, "audited a_n, \"re\" or \"re,im\"");
  app.add_option("--a2n1", a2n1_text, "audited a_{2n-1}, \"re\" or \"re,im\"");
  app.add_option("--audit-n", audit_n, "index n of the audited pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    zal::RunConfig cfg;
    if (app.count("--config")) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config: " + config_path);
      cfg = zal::config_from_json(nlohmann::json::parse(in));
    }
    if (app.count("--command")) cfg.command = zal::command_from_name(command);
    if (app.count("--class")) {
      const auto cls = zal::class_from_name(cls_name, alpha);
      if (!cls) throw std::invalid_argument("unknown class: " + cls_name);
      cfg.cls = *cls;
    } else if (app.count("--alpha")) {
      throw std::invalid_argument("--alpha needs --class hull_convex_alpha");
    }
    if (app.count("--m")) cfg.m = m;
    if (app.count("--n")) cfg.n = n;
    if (app.count("--lambda")) cfg.lambda = zal::parse_complex(lambda_text);
    if (app.count("--lambda-grid")) cfg.lambda_grid = zal::parse_lambda_grid(grid_text);
    if (app.count("--samples")) cfg.samples = samples;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--order")) cfg.order = order;
    if (app.count("--tol")) cfg.tol = tol;
    if (app.count("--out")) cfg.out = out;
    if (app.count("--format")) cfg.format = zal::format_from_name(format);
    if (app.count("--deterministic")) cfg.deterministic = deterministic;
    if (app.count("--function")) cfg.function_name = function_name;
    if (app.count("--predicate")) cfg.predicate = predicate;
    if (app.count("--t")) cfg.t = t;
    if (app.count("--r")) cfg.r = r;
    if (app.count("--restarts")) cfg.restarts = restarts;
    if (app.count("--assert-gap")) cfg.assert_gap = assert_gap;
    if (app.count("--n-max")) cfg.n_max = n_max;
    if (app.count("--j-max")) cfg.j_max = j_max;
    if (app.count("--n-lo")) cfg.n_lo = n_lo;
    if (app.count("--n-hi")) cfg.n_hi = n_hi;
    if (app.count("--stride")) cfg.stride = stride;
    if (app.count("--an")) cfg.audit_an = zal::parse_complex(an_text);
    if (app.count("--a2n1")) cfg.audit_a2n1 = zal::parse_complex(a2n1_text);
    if (app.count("--audit-n")) cfg.audit_n = audit_n;
    return zal::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
