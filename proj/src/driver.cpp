#include "zal/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "zal/asymptotics.hpp"
#include "zal/herglotz.hpp"
#include "zal/rng.hpp"
#include "zal/search.hpp"

namespace zal {

namespace {

constexpr double kExtremalTol = 1e-12;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void csv_preamble(std::ostream& os, const RunConfig& cfg, const char* columns) {
  if (!cfg.deterministic) os << "# generated " << iso_timestamp() << "\n";
  os << columns << "\n";
}

nlohmann::ordered_json json_root(const RunConfig& cfg, Command command) {
  nlohmann::ordered_json root;
  root["command"] = command_name(command);
  if (!cfg.deterministic) root["generated"] = iso_timestamp();
  return root;
}

nlohmann::ordered_json complex_json(Complex z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

Complex json_complex(const nlohmann::json& v) {
  if (v.is_number()) return Complex{v.get<double>(), 0.0};
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2)
    return Complex{v[0].get<double>(), v[1].get<double>()};
  throw std::invalid_argument("a complex value must be a number, \"re,im\" or [re, im]");
}

std::uint64_t pair_stream(int m, int n, long sample_index) {
  std::uint64_t h = static_cast<std::uint64_t>(sample_index);
  h ^= static_cast<std::uint64_t>(m) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::uint64_t>(n) * 0xc2b2ae3d27d4eb4fULL;
  return h;
}

Complex disc_sample(SampleRng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = rng.angle();
  return Complex{r * std::cos(theta), r * std::sin(theta)};
}

std::vector<std::pair<int, int>> index_pairs(const RunConfig& cfg) {
  auto range = [](int v) {
    if (v == 0) return std::vector<int>{2, 3, 4, 5};
    if (v < 2) throw std::invalid_argument("functional indices must be >= 2");
    return std::vector<int>{v};
  };
  std::vector<std::pair<int, int>> out;
  for (int m : range(cfg.m))
    for (int n : range(cfg.n)) out.emplace_back(m, n);
  return out;
}

const ClassSpec& required_class(const RunConfig& cfg) {
  if (!cfg.cls) throw std::invalid_argument("this command needs a function class");
  return *cfg.cls;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const bool csv = cfg.format == ReportFormat::csv;
  if (csv)
    csv_preamble(os, cfg,
                 "class,m,n,re_lambda,im_lambda,value,bound,slack,residual,seed,"
                 "sample_index");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  VerifySink sink = [&](const VerifyRow& row) {
    if (csv) {
      os << row.cls << ',' << row.m << ',' << row.n << ','
         << g17(row.lambda ? row.lambda->real() : nan) << ','
         << g17(row.lambda ? row.lambda->imag() : nan) << ',' << g17(row.value) << ','
         << g17(row.bound) << ',' << g17(row.slack) << ',' << g17(row.residual) << ','
         << row.seed << ',' << row.sample_index << "\n";
    } else {
      nlohmann::ordered_json j;
      j["class"] = row.cls;
      j["m"] = row.m;
      j["n"] = row.n;
      j["lambda"] = row.lambda ? complex_json(*row.lambda) : nlohmann::ordered_json{};
      j["value"] = row.value;
      j["bound"] = row.bound;
      j["slack"] = row.slack;
      j["residual"] = row.residual;
      j["seed"] = row.seed;
      j["sample_index"] = row.sample_index;
      rows.push_back(std::move(j));
    }
  };
  const VerifySummary summary = verify_scan(cfg, sink);
  const std::string name = class_name(*cfg.cls);
  if (csv) {
    os << "# class=" << name << " pairs=" << summary.pairs << " rows=" << summary.rows
       << " flagged=" << summary.flagged_samples << " min_slack=" << g17(summary.min_slack)
       << "\n";
  } else {
    nlohmann::ordered_json root = json_root(cfg, Command::verify);
    root["class"] = name;
    root["seed"] = cfg.seed;
    root["rows"] = std::move(rows);
    root["summary"] = {{"pairs", summary.pairs},
                       {"rows", summary.rows},
                       {"flagged_samples", summary.flagged_samples},
                       {"min_slack", summary.min_slack}};
    os << root.dump(2) << "\n";
  }
  return summary.min_slack >= -cfg.tol ? 0 : 1;
}

const char* branch_name(ExtremalBranch branch) {
  return branch == ExtremalBranch::generic ? "generic" : "resonant";
}

int run_extremal(const RunConfig& cfg, std::ostream& os) {
  const ClassSpec& cls = required_class(cfg);
  validate_class_spec(cls);
  const std::string name = class_name(cls);
  // Nontrivial phases so equality is exercised away from the positive axis.
  const Complex phase_a{std::cos(0.9), std::sin(0.9)};
  const Complex phase_b{std::cos(2.1), std::sin(2.1)};
  const double angles[] = {0.0, std::numbers::pi / 2, std::numbers::pi, 2.3};

  const bool csv = cfg.format == ReportFormat::csv;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (csv) csv_preamble(os, cfg, "class,m,n,re_lambda,im_lambda,branch,value,bound,gap");

  bool failed = false;
  double max_gap = 0.0;
  long pairs = 0;
  for (const auto& [m, n] : index_pairs(cfg)) {
    ++pairs;
    const CriticalCircle circle = critical_circle(cls, m, n);
    std::vector<Complex> lambdas{circle.center};
    for (double factor : {0.5, 1.0, 2.5})
      for (double theta : angles)
        lambdas.push_back(circle.center + factor * circle.radius *
                                              Complex{std::cos(theta), std::sin(theta)});
    for (Complex lambda : lambdas) {
      const double d = std::abs(lambda - circle.center) / circle.radius;
      std::vector<ExtremalBranch> branches;
      if (d <= 1.0 + cfg.tol) branches.push_back(ExtremalBranch::resonant);
      if (d >= 1.0 - cfg.tol) branches.push_back(ExtremalBranch::generic);
      for (ExtremalBranch branch : branches) {
        const TruncatedSeries f = extremal(cls, m, n, branch, 0, phase_a, phase_b);
        const FunctionalSpec spec{lambda, m, n};
        const double value = std::abs(zalcman(f, spec));
        const double bound = sharp_bound(cls, spec);
        const double gap = std::abs(value - bound);
        max_gap = std::max(max_gap, gap);
        if (gap > kExtremalTol) failed = true;
        if (csv) {
          os << name << ',' << m << ',' << n << ',' << g17(lambda.real()) << ','
             << g17(lambda.imag()) << ',' << branch_name(branch) << ',' << g17(value)
             << ',' << g17(bound) << ',' << g17(gap) << "\n";
        } else {
          rows.push_back({{"class", name},
                          {"m", m},
                          {"n", n},
                          {"lambda", complex_json(lambda)},
                          {"branch", branch_name(branch)},
                          {"value", value},
                          {"bound", bound},
                          {"gap", gap}});
        }
      }
    }
  }
  if (csv) {
    os << "# class=" << name << " pairs=" << pairs << " max_gap=" << g17(max_gap) << "\n";
  } else {
    nlohmann::ordered_json root = json_root(cfg, Command::extremal);
    root["class"] = name;
    root["rows"] = std::move(rows);
    root["summary"] = {{"pairs", pairs}, {"max_gap", max_gap}};
    os << root.dump(2) << "\n";
  }
  return failed ? 1 : 0;
}

int run_search(const RunConfig& cfg, std::ostream& os) {
  const ClassSpec& cls = required_class(cfg);
  const Complex lambda = cfg.lambda.value_or(Complex{1.0, 0.0});
  SearchConfig sc;
  sc.restarts = cfg.restarts;
  sc.seed = cfg.seed;

  const bool csv = cfg.format == ReportFormat::csv;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  if (csv)
    csv_preamble(os, cfg,
                 "class,m,n,re_lambda,im_lambda,best_value,bound,gap,evaluations,"
                 "restarts_used,seed");

  bool failed = false;
  for (const auto& [m, n] : index_pairs(cfg)) {
    const SearchResult result = maximize_functional(cls, FunctionalSpec{lambda, m, n}, sc);
    if (result.gap < -cfg.tol) failed = true;  // best exceeding the bound is a defect
    if (cfg.assert_gap && result.gap > *cfg.assert_gap) failed = true;
    if (csv) {
      os << class_name(cls) << ',' << m << ',' << n << ',' << g17(lambda.real()) << ','
         << g17(lambda.imag()) << ',' << g17(result.best_value) << ',' << g17(result.bound)
         << ',' << g17(result.gap) << ',' << result.evaluations << ','
         << result.restarts_used << ',' << result.seed << "\n";
    } else {
      nlohmann::ordered_json row{{"class", class_name(cls)},
                                 {"m", m},
                                 {"n", n},
                                 {"lambda", complex_json(lambda)}};
      row.update(search_result_to_json(result));
      results.push_back(std::move(row));
    }
  }
  if (!csv) {
    nlohmann::ordered_json root = json_root(cfg, Command::search);
    root["results"] = std::move(results);
    os << root.dump(2) << "\n";
  }
  return failed ? 1 : 0;
}

int run_scan(const RunConfig& cfg, std::ostream& os) {
  const ConjecturePredicate predicate = predicate_from_name(cfg.predicate);
  const ConjectureParams params{cfg.t, cfg.r};
  if (cfg.n_max < 2) throw std::invalid_argument("n-max must be at least 2");

  PairSampler sampler;
  if (cfg.cls) {
    const ClassSpec cls = *cfg.cls;
    validate_class_spec(cls);
    const std::uint64_t seed = cfg.seed;
    sampler = [cls, seed](int n, long i) {
      SampleRng rng(seed, (static_cast<std::uint64_t>(n) << 32) ^
                              static_cast<std::uint64_t>(i));
      const int order = 2 * n - 1;
      const TruncatedSeries f = sample(cls, order, rng, std::max(8, 2 * n - 2));
      return std::make_pair(f.a(n), f.a(2 * n - 1));
    };
  } else {
    const std::uint64_t seed = cfg.seed;
    sampler = [seed](int n, long i) {
      SampleRng rng(seed, (static_cast<std::uint64_t>(n) << 32) ^
                              static_cast<std::uint64_t>(i));
      const Complex x = disc_sample(rng, static_cast<double>(n));
      const Complex y = disc_sample(rng, 2.0 * n - 1.0);
      return std::make_pair(x, y);
    };
  }

  const bool csv = cfg.format == ReportFormat::csv;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (csv) csv_preamble(os, cfg, "predicate,param,n,sample_index,slack,violated");
  ScanSink sink = [&](const ScanRow& row) {
    if (csv) {
      os << predicate_name(row.predicate) << ',' << g17(row.param) << ',' << row.n << ','
         << row.sample_index << ',' << g17(row.slack) << ',' << (row.violated ? 1 : 0)
         << "\n";
    } else {
      rows.push_back({{"predicate", predicate_name(row.predicate)},
                      {"param", row.param},
                      {"n", row.n},
                      {"sample_index", row.sample_index},
                      {"slack", row.slack},
                      {"violated", row.violated}});
    }
  };
  const ScanReport report =
      conjecture_scan(sampler, cfg.samples, predicate, params, 2, cfg.n_max, cfg.tol, sink);
  if (csv) {
    os << "# predicate=" << predicate_name(predicate) << " rows=" << report.rows
       << " violations=" << report.violations << " min_slack=" << g17(report.min_slack)
       << "\n";
  } else {
    nlohmann::ordered_json root = json_root(cfg, Command::scan);
    root["predicate"] = predicate_name(predicate);
    root["rows"] = std::move(rows);
    root["summary"] = {{"rows", report.rows},
                       {"violations", report.violations},
                       {"min_slack", report.min_slack},
                       {"worst",
                        {{"n", report.worst.n},
                         {"sample_index", report.worst.sample_index},
                         {"slack", report.worst.slack}}}};
    os << root.dump(2) << "\n";
  }
  return report.violations > 0 ? 1 : 0;
}

int run_hayman(const RunConfig& cfg, std::ostream& os) {
  if (cfg.j_max < 1) throw std::invalid_argument("j-max must be at least 1");
  const ClosedFormFunction f = ClosedFormFunction::from_name(cfg.function_name);
  const HaymanEstimate estimate = hayman_index(f, cfg.j_max);
  if (cfg.format == ReportFormat::csv) {
    csv_preamble(os, cfg, "j,radius,value");
    for (size_t i = 0; i < estimate.values.size(); ++i)
      os << (i + 1) << ',' << g17(estimate.radii[i]) << ',' << g17(estimate.values[i])
         << "\n";
    os << "# function=" << cfg.function_name << " alpha_hat=" << g17(estimate.alpha_hat)
       << "\n";
  } else {
    nlohmann::ordered_json root = json_root(cfg, Command::hayman);
    root["function"] = cfg.function_name;
    root["radii"] = estimate.radii;
    root["values"] = estimate.values;
    root["alpha_hat"] = estimate.alpha_hat;
    os << root.dump(2) << "\n";
  }
  return 0;
}

int run_ratio(const RunConfig& cfg, std::ostream& os) {
  const ClosedFormFunction f = ClosedFormFunction::from_name(cfg.function_name);
  const Complex lambda = cfg.lambda.value_or(Complex{1.0, 0.0});
  const auto coefficient = [&f](int k) { return f.coefficient(k); };

  const bool csv = cfg.format == ReportFormat::csv;
  nlohmann::ordered_json paths = nlohmann::ordered_json::array();
  if (csv) csv_preamble(os, cfg, "path,m,n,ratio");
  for (ScanPath path : {ScanPath::diagonal, ScanPath::doubled, ScanPath::offset}) {
    const auto pairs = scan_path_pairs(path, cfg.n_lo, cfg.n_hi, cfg.stride);
    const auto ratios = ratio_convergence(coefficient, lambda, pairs);
    if (csv) {
      for (const RatioPoint& point : ratios)
        os << scan_path_name(path) << ',' << point.m << ',' << point.n << ','
           << g17(point.ratio) << "\n";
    } else {
      nlohmann::ordered_json points = nlohmann::ordered_json::array();
      for (const RatioPoint& point : ratios)
        points.push_back({{"m", point.m}, {"n", point.n}, {"ratio", point.ratio}});
      paths.push_back({{"path", scan_path_name(path)}, {"points", std::move(points)}});
    }
  }
  if (!csv) {
    nlohmann::ordered_json root = json_root(cfg, Command::ratio);
    root["function"] = cfg.function_name;
    root["lambda"] = complex_json(lambda);
    root["paths"] = std::move(paths);
    os << root.dump(2) << "\n";
  }
  return 0;
}

int run_audit(const RunConfig& cfg, std::ostream& os) {
  const AuditGrids grids = default_audit_grids();
  const bool csv = cfg.format == ReportFormat::csv;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (csv)
    csv_preamble(os, cfg,
                 "source,n,sample_index,re_an,im_an,re_a2n1,im_a2n1,base,segment,ray,"
                 "plane,agree");

  long disagreements = 0;
  long pairs = 0;
  bool koebe_base_failed = false;
  auto emit = [&](const char* source, int n, long i, Complex x, Complex y,
                  const AuditVerdict& v) {
    ++pairs;
    if (!v.agree()) ++disagreements;
    if (csv) {
      os << source << ',' << n << ',' << i << ',' << g17(x.real()) << ',' << g17(x.imag())
         << ',' << g17(y.real()) << ',' << g17(y.imag()) << ',' << v.base << ','
         << v.segment << ',' << v.ray << ',' << v.plane << ',' << v.agree() << "\n";
    } else {
      rows.push_back({{"source", source},
                      {"n", n},
                      {"sample_index", i},
                      {"a_n", complex_json(x)},
                      {"a_2n1", complex_json(y)},
                      {"base", v.base},
                      {"segment", v.segment},
                      {"ray", v.ray},
                      {"plane", v.plane},
                      {"agree", v.agree()}});
    }
  };

  const bool single = cfg.audit_an || cfg.audit_a2n1 || cfg.audit_n;
  if (single) {
    if (!(cfg.audit_an && cfg.audit_a2n1 && cfg.audit_n))
      throw std::invalid_argument("a single-pair audit needs an, a2n1 and the index n");
    const AuditVerdict verdict =
        zalcman_equivalence_audit(*cfg.audit_an, *cfg.audit_a2n1, *cfg.audit_n, grids,
                                  cfg.tol);
    emit("given", *cfg.audit_n, 0, *cfg.audit_an, *cfg.audit_a2n1, verdict);
  } else {
    if (cfg.n_max < 2) throw std::invalid_argument("n-max must be at least 2");
    for (int n = 2; n <= cfg.n_max; ++n) {
      for (long i = 0; i < cfg.samples; ++i) {
        SampleRng rng(cfg.seed, (static_cast<std::uint64_t>(n) << 32) ^
                                    static_cast<std::uint64_t>(i));
        const Complex x = disc_sample(rng, static_cast<double>(n));
        const Complex y = disc_sample(rng, 2.0 * n - 1.0);
        emit("random", n, i, x, y, zalcman_equivalence_audit(x, y, n, grids, cfg.tol));
      }
      const Complex x{static_cast<double>(n), 0.0};
      const Complex y{2.0 * n - 1.0, 0.0};
      const AuditVerdict verdict = zalcman_equivalence_audit(x, y, n, grids, cfg.tol);
      if (!verdict.base) koebe_base_failed = true;
      emit("koebe", n, 0, x, y, verdict);
    }
  }

  if (csv) {
    os << "# pairs=" << pairs << " disagreements=" << disagreements << "\n";
  } else {
    nlohmann::ordered_json root = json_root(cfg, Command::audit);
    root["rows"] = std::move(rows);
    root["summary"] = {{"pairs", pairs}, {"disagreements", disagreements}};
    os << root.dump(2) << "\n";
  }
  return disagreements > 0 || koebe_base_failed ? 1 : 0;
}

}  // namespace

std::string command_name(Command command) {
  switch (command) {
    case Command::verify: return "verify";
    case Command::extremal: return "extremal";
    case Command::search: return "search";
    case Command::scan: return "scan";
    case Command::hayman: return "hayman";
    case Command::ratio: return "ratio";
    case Command::audit: return "audit";
  }
  throw std::invalid_argument("unknown command");
}

Command command_from_name(const std::string& name) {
  if (name == "verify") return Command::verify;
  if (name == "extremal") return Command::extremal;
  if (name == "search") return Command::search;
  if (name == "scan") return Command::scan;
  if (name == "hayman") return Command::hayman;
  if (name == "ratio") return Command::ratio;
  if (name == "audit") return Command::audit;
  throw std::invalid_argument("unknown command: " + name);
}

std::string format_name(ReportFormat format) {
  return format == ReportFormat::csv ? "csv" : "json";
}

ReportFormat format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

LambdaGrid parse_lambda_grid(const std::string& text) {
  LambdaGrid grid;
  grid.radii.clear();
  const size_t split = text.find('x');
  std::string radii_part = text.substr(0, split);
  for (size_t pos = 0; pos < radii_part.size();) {
    size_t next = radii_part.find(',', pos);
    if (next == std::string::npos) next = radii_part.size();
    const std::string token = radii_part.substr(pos, next - pos);
    size_t used = 0;
    const double r = std::stod(token, &used);
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
      ++used;
    if (used != token.size())
      throw std::invalid_argument("bad radius in lambda grid: " + token);
    if (r < 0.0) throw std::invalid_argument("lambda grid radii must be >= 0");
    grid.radii.push_back(r);
    pos = next + 1;
  }
  if (grid.radii.empty()) throw std::invalid_argument("lambda grid needs radii");
  if (split != std::string::npos) {
    const std::string angle_part = text.substr(split + 1);
    size_t used = 0;
    grid.angles = std::stoi(angle_part, &used);
    while (used < angle_part.size() &&
           std::isspace(static_cast<unsigned char>(angle_part[used])))
      ++used;
    if (used != angle_part.size())
      throw std::invalid_argument("bad angle count in lambda grid: " + angle_part);
    if (grid.angles < 1) throw std::invalid_argument("lambda grid needs >= 1 angles");
  }
  return grid;
}

Complex parse_complex(const std::string& text) {
  size_t used = 0;
  const double re = std::stod(text, &used);
  double im = 0.0;
  if (used < text.size()) {
    if (text[used] != ',')
      throw std::invalid_argument("bad complex value: " + text);
    size_t used2 = 0;
    const std::string rest = text.substr(used + 1);
    im = std::stod(rest, &used2);
    if (used2 != rest.size()) throw std::invalid_argument("bad complex value: " + text);
  }
  return Complex{re, im};
}

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("the config must be a JSON object");
  RunConfig cfg;
  double alpha = j.value("alpha", 0.0);
  for (const auto& [key, value] : j.items()) {
    if (key == "command") cfg.command = command_from_name(value.get<std::string>());
    else if (key == "class") {
      const auto cls = class_from_name(value.get<std::string>(), alpha);
      if (!cls) throw std::invalid_argument("unknown class: " + value.get<std::string>());
      cfg.cls = *cls;
    } else if (key == "alpha") { /* consumed with "class" */ }
    else if (key == "m") cfg.m = value.get<int>();
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "lambda") cfg.lambda = json_complex(value);
    else if (key == "lambda-grid") cfg.lambda_grid = parse_lambda_grid(value.get<std::string>());
    else if (key == "samples") cfg.samples = value.get<long>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "order") cfg.order = value.get<int>();
    else if (key == "tol") cfg.tol = value.get<double>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "format") cfg.format = format_from_name(value.get<std::string>());
    else if (key == "deterministic") cfg.deterministic = value.get<bool>();
    else if (key == "function") cfg.function_name = value.get<std::string>();
    else if (key == "predicate") cfg.predicate = value.get<std::string>();
    else if (key == "t") cfg.t = value.get<double>();
    else if (key == "r") cfg.r = value.get<double>();
    else if (key == "restarts") cfg.restarts = value.get<int>();
    else if (key == "assert-gap") cfg.assert_gap = value.get<double>();
    else if (key == "n-max") cfg.n_max = value.get<int>();
    else if (key == "j-max") cfg.j_max = value.get<int>();
    else if (key == "n-lo") cfg.n_lo = value.get<int>();
    else if (key == "n-hi") cfg.n_hi = value.get<int>();
    else if (key == "stride") cfg.stride = value.get<int>();
    else if (key == "an") cfg.audit_an = json_complex(value);
    else if (key == "a2n1") cfg.audit_a2n1 = json_complex(value);
    else if (key == "audit-n") cfg.audit_n = value.get<int>();
    else throw std::invalid_argument("unknown config key: " + key);
  }
  return cfg;
}

VerifySummary verify_scan(const RunConfig& cfg, const VerifySink& sink,
                          const SampleOverride& override_sampler) {
  const ClassSpec& cls = required_class(cfg);
  validate_class_spec(cls);
  if (cfg.samples < 1) throw std::invalid_argument("samples must be positive");
  if (!(cfg.tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");

  const std::string name = class_name(cls);
  VerifySummary summary;
  summary.min_slack = std::numeric_limits<double>::infinity();

  for (const auto& [m, n] : index_pairs(cfg)) {
    ++summary.pairs;
    const int order = cfg.order > 0 ? cfg.order : 2 * std::max(m, n);
    if (order < m + n - 1)
      throw std::invalid_argument("order too small for the index pair");
    const int atoms = std::max(8, m + n - 2);
    std::vector<Complex> grid =
        cfg.lambda ? std::vector<Complex>{*cfg.lambda}
                   : theorem_lambda_grid(cls, m, n, cfg.lambda_grid.radii,
                                         cfg.lambda_grid.angles);

    for (long i = 0; i < cfg.samples; ++i) {
      SampleRng rng(cfg.seed, pair_stream(m, n, i));
      const TruncatedSeries f =
          override_sampler
              ? override_sampler(cls, FunctionalSpec{Complex{0.0, 0.0}, m, n}, order,
                                 cfg.seed, i)
              : sample(cls, order, rng, atoms);
      const double residual = membership_residual(cls, f);
      const bool counted = residual <= cfg.tol;
      if (!counted) ++summary.flagged_samples;

      const SumFormParts parts = sum_form_parts(cls, f, m, n);
      ++summary.rows;
      if (counted) summary.min_slack = std::min(summary.min_slack, parts.slack());
      if (sink)
        sink(VerifyRow{name, m, n, std::nullopt, parts.lhs, parts.rhs, parts.slack(),
                       residual, cfg.seed, i});

      const Complex product = f.a(m) * f.a(n);
      const Complex tail = f.a(m + n - 1);
      auto emit_lambda = [&](Complex lambda) {
        const FunctionalSpec spec{lambda, m, n};
        const double value = std::abs(zalcman(f, spec));
        const double bound = sharp_bound(cls, spec);
        const double slack = bound - value;
        ++summary.rows;
        if (counted) summary.min_slack = std::min(summary.min_slack, slack);
        if (sink)
          sink(VerifyRow{name, m, n, lambda, value, bound, slack, residual, cfg.seed, i});
      };
      for (Complex lambda : grid) emit_lambda(lambda);
      if (!cfg.lambda) {
        const std::optional<Complex> witness = tightest_lambda(cls, m, n, product, tail);
        if (witness) emit_lambda(*witness);
      }
    }
  }
  return summary;
}

int run(const RunConfig& cfg) {
  try {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
      os = &file;
    }
    switch (cfg.command) {
      case Command::verify: return run_verify(cfg, *os);
      case Command::extremal: return run_extremal(cfg, *os);
      case Command::search: return run_search(cfg, *os);
      case Command::scan: return run_scan(cfg, *os);
      case Command::hayman: return run_hayman(cfg, *os);
      case Command::ratio: return run_ratio(cfg, *os);
      case Command::audit: return run_audit(cfg, *os);
    }
    throw std::invalid_argument("unknown command");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zal
