// Command-line front end: ingest periodic samples, build trigonometric
// interpolation splines, emit dense evaluations, power reports and oracle
// comparisons as CSV/JSON.
//
// Exit codes: 0 success, 2 input error, 3 config error, 4 singular
// interpolation factor, 5 truncation failure.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigspline/serialize.hpp"
#include "trigspline/trigspline.hpp"

namespace ts = trigspline;
using nlohmann::json;

namespace {

struct Job {
  std::string command;
  std::string input;
  std::string output; // empty: stdout
  std::string format; // empty: per-command default
  int nodes = 0;      // 0: infer from input
  int i1 = 0;
  int i2 = 0;
  int smoothness = 1;
  std::vector<double> gamma{1.0, 1.0, 1.0};
  std::vector<double> eta{1.0, 1.0, 1.0};
  double alpha = 0.0; // 0: 2*pi/N
  long long max_m = 1'000'000;
  double tail_tol = 1e-10;
  int points = -1; // unset: 1024 for eval, 1000 for compare
  int quad_points = 16384;
  std::string oracle; // compare only
};

int exit_code_for(const ts::Error& e) {
  switch (e.code()) {
    case ts::ErrorCode::length_mismatch:
    case ts::ErrorCode::non_finite_value:
    case ts::ErrorCode::io_error:
      return 2;
    case ts::ErrorCode::singular_factor:
      return 4;
    case ts::ErrorCode::tail_not_converged:
      return 5;
    default:
      return 3;
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<double> read_samples(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    ts::fail(ts::ErrorCode::io_error, "cannot open input: " + path);
  std::vector<double> values;
  if (ends_with(path, ".json")) {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      ts::fail(ts::ErrorCode::io_error,
               std::string("bad JSON input: ") + e.what());
    }
    const json& arr = j.is_object() ? j.at("values") : j;
    if (!arr.is_array())
      ts::fail(ts::ErrorCode::io_error,
               "JSON input must be an array or {\"values\": [...]}");
    for (const auto& v : arr) {
      if (!v.is_number())
        ts::fail(ts::ErrorCode::io_error,
                 "JSON sample values must be numbers");
      values.push_back(v.get<double>());
    }
    return values;
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() &&
           (line.back() == '\r' || std::isspace(static_cast<unsigned char>(line.back()))))
      line.pop_back();
    size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    if (start == line.size()) continue; // blank line
    const std::string tok = line.substr(start);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      ts::fail(ts::ErrorCode::io_error,
               "cannot parse line " + std::to_string(line_no) + ": " + tok);
    values.push_back(v);
  }
  return values;
}

void apply_config_file(Job& job, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    ts::fail(ts::ErrorCode::invalid_argument, "cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    ts::fail(ts::ErrorCode::invalid_argument,
             std::string("bad JSON config: ") + e.what());
  }
  // The config file is the single source of truth: its keys win.
  try {
    if (j.contains("input")) job.input = j["input"].get<std::string>();
    if (j.contains("output")) job.output = j["output"].get<std::string>();
    if (j.contains("format")) job.format = j["format"].get<std::string>();
    if (j.contains("n")) job.nodes = j["n"].get<int>();
    if (j.contains("i1")) job.i1 = j["i1"].get<int>();
    if (j.contains("i2")) job.i2 = j["i2"].get<int>();
    if (j.contains("r")) job.smoothness = j["r"].get<int>();
    if (j.contains("gamma")) job.gamma = j["gamma"].get<std::vector<double>>();
    if (j.contains("eta")) job.eta = j["eta"].get<std::vector<double>>();
    if (j.contains("alpha")) job.alpha = j["alpha"].get<double>();
    if (j.contains("max_m")) job.max_m = j["max_m"].get<long long>();
    if (j.contains("tail_tol")) job.tail_tol = j["tail_tol"].get<double>();
    if (j.contains("points")) job.points = j["points"].get<int>();
    if (j.contains("quad_points"))
      job.quad_points = j["quad_points"].get<int>();
    if (j.contains("oracle")) job.oracle = j["oracle"].get<std::string>();
  } catch (const json::exception& e) {
    ts::fail(ts::ErrorCode::invalid_argument,
             std::string("bad config value: ") + e.what());
  }
}

void apply_env_override(Job& job) {
  const char* env = std::getenv("TRIGSPLINE_MAX_M");
  if (!env || !*env) return;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    ts::fail(ts::ErrorCode::invalid_argument,
             std::string("bad TRIGSPLINE_MAX_M: ") + env);
  job.max_m = v;
}

ts::ShapeVector shape_from(const std::vector<double>& v, const char* name) {
  if (v.size() != 3)
    ts::fail(ts::ErrorCode::invalid_argument,
             std::string(name) + " must have exactly 3 components");
  return ts::ShapeVector(v[0], v[1], v[2]);
}

struct LoadedJob {
  ts::SampleSet samples;
  ts::SplineConfig config;
};

LoadedJob load(const Job& job) {
  if (job.input.empty())
    ts::fail(ts::ErrorCode::io_error, "no input file given");
  std::vector<double> values = read_samples(job.input);
  if (job.nodes > 0 && static_cast<int>(values.size()) != job.nodes)
    ts::fail(ts::ErrorCode::length_mismatch,
             "input has " + std::to_string(values.size()) +
                 " values but n=" + std::to_string(job.nodes));

  ts::SplineConfig cfg;
  cfg.crosslink = ts::grid_index_from_int(job.i1);
  cfg.interpolation = ts::grid_index_from_int(job.i2);
  cfg.gamma = shape_from(job.gamma, "gamma");
  cfg.eta = shape_from(job.eta, "eta");
  ts::require(job.smoothness >= 0, ts::ErrorCode::invalid_argument,
              "r must be >= 0");
  cfg.factor = ts::ConvergenceFactor::sinc_power(job.smoothness, job.alpha);
  cfg.trunc.max_m = job.max_m;
  cfg.trunc.tail_tol = job.tail_tol;
  cfg.trunc.validate();

  ts::Grid grid = ts::make_grid(cfg.interpolation,
                                static_cast<int>(values.size()));
  return LoadedJob{ts::sample_values(grid, std::move(values)), cfg};
}

void write_output(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output, std::ios::binary);
  if (!out)
    ts::fail(ts::ErrorCode::invalid_argument,
             "cannot open output: " + job.output);
  out << text;
}

std::string format_or(const Job& job, const char* fallback) {
  const std::string f = job.format.empty() ? fallback : job.format;
  if (f != "csv" && f != "json")
    ts::fail(ts::ErrorCode::invalid_argument, "format must be csv or json");
  return f;
}

void warn_truncation(const ts::Spline& spline) {
  if (spline.tail_converged()) return;
  std::cerr << "warning: alias series truncated at max_m="
            << spline.config().trunc.max_m
            << " before reaching tail_tol; estimated tail "
            << fmt17(spline.tail_bound()) << "\n";
}

int cmd_coeffs(const Job& job) {
  LoadedJob loaded = load(job);
  const ts::TrigCoeffs coeffs = ts::dft_coefficients(loaded.samples);
  const std::string fmt = format_or(job, "json");
  std::string text;
  if (fmt == "json") {
    text = ts::to_json(coeffs).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "k,a,b\n";
    os << "0," << fmt17(coeffs.a0) << ",0\n";
    for (int k = 1; k <= coeffs.harmonics(); ++k)
      os << k << ',' << fmt17(coeffs.a[static_cast<size_t>(k - 1)]) << ','
         << fmt17(coeffs.b[static_cast<size_t>(k - 1)]) << '\n';
    text = os.str();
  }
  write_output(job, text);
  return 0;
}

int cmd_eval(Job job) {
  if (job.points < 0) job.points = 1024;
  LoadedJob loaded = load(job);
  ts::require(job.points >= 0, ts::ErrorCode::invalid_argument,
              "points must be >= 0");
  const ts::Spline spline = ts::build_spline(loaded.samples, loaded.config);
  warn_truncation(spline);
  const std::vector<double> vals = spline.eval_uniform(job.points);
  const std::string fmt = format_or(job, "csv");
  std::string text;
  if (fmt == "csv") {
    std::ostringstream os;
    os << "t,value\n";
    for (int p = 0; p < job.points; ++p)
      os << fmt17(ts::two_pi * p / job.points) << ','
         << fmt17(vals[static_cast<size_t>(p)]) << '\n';
    text = os.str();
  } else {
    std::vector<double> angles(static_cast<size_t>(job.points));
    for (int p = 0; p < job.points; ++p)
      angles[static_cast<size_t>(p)] = ts::two_pi * p / job.points;
    text = json{{"points", job.points}, {"t", angles}, {"value", vals}}
               .dump(2) +
           "\n";
  }
  write_output(job, text);
  return 0;
}

int cmd_power(const Job& job) {
  LoadedJob loaded = load(job);
  const ts::Spline spline = ts::build_spline(loaded.samples, loaded.config);
  warn_truncation(spline);
  ts::QuadratureSpec quad;
  quad.points = job.quad_points;
  const double numeric = ts::numeric_power(spline, quad);

  std::optional<ts::PowerReport> report;
  std::string warning;
  try {
    report = spline.power();
  } catch (const ts::Error& e) {
    if (e.code() != ts::ErrorCode::requires_smoothness) throw;
    warning = "closed-form power needs r >= 1; reporting quadrature only";
    std::cerr << "warning: " << warning << "\n";
  }

  const std::string fmt = format_or(job, "json");
  std::string text;
  if (fmt == "json") {
    json j;
    j["quadrature"] = numeric;
    if (report) {
      const double gap =
          std::abs(report->total - numeric) / std::max(1e-300, std::abs(report->total));
      j["closed_form"] = report->total;
      j["relative_gap"] = gap;
      j["pc"] = report->pc;
      j["ps"] = report->ps;
    } else {
      j["closed_form"] = nullptr;
      j["relative_gap"] = nullptr;
      j["warning"] = warning;
    }
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "quantity,value\n";
    os << "quadrature," << fmt17(numeric) << '\n';
    if (report) {
      const double gap =
          std::abs(report->total - numeric) / std::max(1e-300, std::abs(report->total));
      os << "closed_form," << fmt17(report->total) << '\n';
      os << "relative_gap," << fmt17(gap) << '\n';
    } else {
      os << "closed_form,\n";
      os << "relative_gap,\n";
    }
    text = os.str();
  }
  write_output(job, text);
  return 0;
}

int cmd_compare(Job job) {
  if (job.points < 0) job.points = 1000;
  LoadedJob loaded = load(job);
  ts::require(job.points >= 1, ts::ErrorCode::invalid_argument,
              "points must be >= 1");
  if (job.oracle != "linear" && job.oracle != "cubic" &&
      job.oracle != "trigpoly")
    ts::fail(ts::ErrorCode::invalid_argument,
             "oracle must be linear, cubic or trigpoly");
  const ts::Spline spline = ts::build_spline(loaded.samples, loaded.config);
  warn_truncation(spline);
  const std::vector<double> vals = spline.eval_uniform(job.points);

  const ts::TrigCoeffs coeffs = ts::dft_coefficients(loaded.samples);
  double max_dev = 0.0, sum_dev = 0.0;
  for (int p = 0; p < job.points; ++p) {
    const double t = ts::two_pi * p / job.points;
    double ref;
    if (job.oracle == "linear")
      ref = ts::piecewise_linear_eval(loaded.samples, t);
    else if (job.oracle == "cubic")
      ref = ts::periodic_cubic_eval(loaded.samples, t);
    else
      ref = ts::eval_trig_polynomial(coeffs, t);
    const double dev = std::abs(vals[static_cast<size_t>(p)] - ref);
    max_dev = std::max(max_dev, dev);
    sum_dev += dev;
  }
  const double mean_dev = sum_dev / job.points;

  const std::string fmt = format_or(job, "json");
  std::string text;
  if (fmt == "json") {
    text = json{{"oracle", job.oracle},
                {"points", job.points},
                {"max_abs_dev", max_dev},
                {"mean_abs_dev", mean_dev}}
               .dump(2) +
           "\n";
  } else {
    std::ostringstream os;
    os << "quantity,value\n";
    os << "max_abs_dev," << fmt17(max_dev) << '\n';
    os << "mean_abs_dev," << fmt17(mean_dev) << '\n';
    text = os.str();
  }
  write_output(job, text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric interpolation splines for periodic data"};
  app.require_subcommand(1);

  Job job;
  std::string config_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", job.input,
                    "samples: CSV (one value per line) or JSON");
    cmd->add_option("-o,--output", job.output, "output file (default stdout)");
    cmd->add_option("--format", job.format, "output format: csv or json");
    cmd->add_option("-n,--nodes", job.nodes,
                    "expected node count (validated against the input)");
    cmd->add_option("--i1", job.i1, "sign-pattern grid index (0 or 1)");
    cmd->add_option("--i2", job.i2,
                    "interpolation grid index; samples live on this grid");
    cmd->add_option("-r,--smoothness", job.smoothness,
                    "smoothness parameter r >= 0");
    cmd->add_option("--gamma", job.gamma, "cosine shape vector g1,g2,g3")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--eta", job.eta, "sine shape vector e1,e2,e3")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--alpha", job.alpha,
                    "sinc factor half-step scale (default 2*pi/N)");
    cmd->add_option("--max-m", job.max_m, "alias truncation cap");
    cmd->add_option("--tail-tol", job.tail_tol, "alias tail tolerance");
    cmd->add_option("--config", config_path,
                    "JSON job config; its keys win over flags");
  };

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Interpolation polynomial coefficients");
  add_common(coeffs);

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate the spline on a uniform grid over [0, 2pi)");
  add_common(eval);
  eval->add_option("--points", job.points, "number of uniform samples");

  CLI::App* power = app.add_subcommand(
      "power", "Average power: closed form and quadrature");
  add_common(power);
  power->add_option("--quad-points", job.quad_points, "quadrature points");

  CLI::App* compare = app.add_subcommand(
      "compare", "Max/mean deviation from a reference interpolant");
  add_common(compare);
  compare->add_option("--oracle", job.oracle, "linear, cubic or trigpoly");
  compare->add_option("--points", job.points, "sweep size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (!config_path.empty()) apply_config_file(job, config_path);
    apply_env_override(job);
    if (coeffs->parsed()) return cmd_coeffs(job);
    if (eval->parsed()) return cmd_eval(job);
    if (power->parsed()) return cmd_power(job);
    if (compare->parsed()) return cmd_compare(job);
  } catch (const ts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
