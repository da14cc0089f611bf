// Command-line surface for the propagator library: propagator sweeps,
// wave-function evolution, diffusion scans, and validation suites, with
// CSV/JSON emission for plotting and regression testing.
//
// Exit codes: 0 success, 1 validation failure, 2 usage/config error,
// 3 numerical non-convergence (strict mode only).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "salprop/salprop.hpp"

using json = nlohmann::ordered_json;
using salprop::Complex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

// 17 significant digits: round-trip exact for binary64.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Phase column convention: 1/2 - arg(value)/pi.
double phase_column(const Complex& v) {
  return 0.5 - std::arg(v) / M_PI;
}

struct Row {
  std::string model, method;
  double m = 0.0, t = 0.0;
  std::optional<double> x;
  std::optional<Complex> value;
  double err_estimate = 0.0;
  std::string flags;
};

const char* kHeader = "model,method,m,t,x,re,im,abs,phase,err_estimate,flags";

void write_rows_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kHeader << "\n";
  for (const Row& r : rows) {
    os << r.model << ',' << r.method << ',' << fmt(r.m) << ',' << fmt(r.t)
       << ',';
    if (r.x) os << fmt(*r.x);
    os << ',';
    if (r.value) {
      os << fmt(r.value->real()) << ',' << fmt(r.value->imag()) << ','
         << fmt(std::abs(*r.value)) << ',' << fmt(phase_column(*r.value))
         << ',' << fmt(r.err_estimate);
    } else {
      os << ",,,,";
    }
    os << ',' << r.flags << "\n";
  }
}

void write_rows_json(std::ostream& os, const std::vector<Row>& rows,
                     const json& meta) {
  json out;
  out["meta"] = meta;
  out["rows"] = json::array();
  for (const Row& r : rows) {
    json j;
    j["model"] = r.model;
    j["method"] = r.method;
    j["m"] = r.m;
    j["t"] = r.t;
    if (r.x) j["x"] = *r.x; else j["x"] = nullptr;
    if (r.value) {
      j["re"] = r.value->real();
      j["im"] = r.value->imag();
      j["abs"] = std::abs(*r.value);
      j["phase"] = phase_column(*r.value);
      j["err_estimate"] = r.err_estimate;
    } else {
      j["re"] = nullptr;
      j["im"] = nullptr;
      j["abs"] = nullptr;
      j["phase"] = nullptr;
      j["err_estimate"] = nullptr;
    }
    j["flags"] = r.flags;
    out["rows"].push_back(std::move(j));
  }
  os << out.dump(2) << "\n";
}

struct OutputTarget {
  std::string path;  // empty = stdout
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path, std::ios::binary | std::ios::trunc);
      if (!file) throw salprop::DomainError("cannot open output file " + path);
    }
    return file;
  }
};

// Optional JSON config file; flags given on the command line win.
struct ConfigFile {
  json data = json::object();

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    in >> data;
  }
  template <typename T>
  void merge(const CLI::Option* opt, const char* key, T& var) const {
    if (opt != nullptr && opt->count() > 0) return;  // flag overrides
    if (data.contains(key)) var = data.at(key).get<T>();
  }
};

struct CommonOptions {
  std::string config_path;
  std::string output_path;
  std::string format = "csv";
  bool strict = false;
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;

  CLI::Option* opt_output = nullptr;
  CLI::Option* opt_format = nullptr;
  CLI::Option* opt_strict = nullptr;
  CLI::Option* opt_abs = nullptr;
  CLI::Option* opt_rel = nullptr;
  CLI::Option* opt_max = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "JSON config file (flags override its values)");
    opt_output = cmd->add_option("-o,--output", output_path,
                                 "output file (default: stdout)");
    opt_format = cmd->add_option("--format", format, "csv or json")
                     ->check(CLI::IsMember({"csv", "json"}));
    opt_strict = cmd->add_flag("--strict", strict,
                               "exit 3 on quadrature non-convergence");
    opt_abs = cmd->add_option("--abs-tol", abs_tol, "quadrature abs tolerance");
    opt_rel = cmd->add_option("--rel-tol", rel_tol, "quadrature rel tolerance");
    opt_max = cmd->add_option("--max-subdivisions", max_subdivisions,
                              "quadrature panel budget");
  }
  ConfigFile resolve() {
    ConfigFile cf;
    if (!config_path.empty()) cf.load(config_path);
    cf.merge(opt_output, "output", output_path);
    cf.merge(opt_format, "format", format);
    cf.merge(opt_strict, "strict", strict);
    cf.merge(opt_abs, "abs_tol", abs_tol);
    cf.merge(opt_rel, "rel_tol", rel_tol);
    cf.merge(opt_max, "max_subdivisions", max_subdivisions);
    return cf;
  }
  salprop::QuadratureConfig quad() const {
    salprop::QuadratureConfig q;
    q.abs_tol = abs_tol;
    q.rel_tol = rel_tol;
    q.max_subdivisions = max_subdivisions;
    return q;
  }
  json meta(const char* command) const {
    json m;
    m["command"] = command;
    m["strict"] = strict;
    m["abs_tol"] = abs_tol;
    m["rel_tol"] = rel_tol;
    m["max_subdivisions"] = max_subdivisions;
    return m;
  }
};

// "a:b:n" -> n samples spanning [a, b].
std::vector<double> parse_range(const std::string& spec) {
  double a = 0.0, b = 0.0;
  long n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
    throw std::runtime_error("bad range spec '" + spec +
                             "' (expected min:max:count)");
  std::vector<double> out;
  if (n == 1) {
    out.push_back(a);
    return out;
  }
  for (long i = 0; i < n; ++i)
    out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
  return out;
}

std::vector<double> make_grid(double lo, double hi, int count,
                              const std::string& spacing) {
  if (count < 1) throw std::runtime_error("grid count must be >= 1");
  std::vector<double> out;
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  if (spacing == "log") {
    if (!(lo > 0.0) || !(hi > 0.0))
      throw std::runtime_error("log spacing requires positive bounds");
    for (int i = 0; i < count; ++i)
      out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  } else {
    for (int i = 0; i < count; ++i)
      out.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// propagator
// ---------------------------------------------------------------------------

struct PropagatorArgs {
  CommonOptions common;
  std::string model = "salpeter";
  std::string method = "closed";
  double m = 1.0;
  double t = 1.0;
  double t_min = 0.0, t_max = 0.0;
  int t_count = 0;
  std::string t_spacing = "linear";
  std::vector<double> x_values;
  std::string x_rel;  // "min:max:count" in multiples of t
  double x_min = 0.0, x_max = 0.0;
  int x_count = 0;
  int series_order = 10;

  CLI::Option *opt_model = nullptr, *opt_method = nullptr, *opt_m = nullptr,
              *opt_t = nullptr, *opt_x = nullptr, *opt_xrel = nullptr;
};

int run_propagator(PropagatorArgs& a) {
  ConfigFile cf = a.common.resolve();
  cf.merge(a.opt_model, "model", a.model);
  cf.merge(a.opt_method, "method", a.method);
  cf.merge(a.opt_m, "m", a.m);
  cf.merge(a.opt_t, "t", a.t);
  cf.merge(a.opt_x, "x", a.x_values);
  cf.merge(a.opt_xrel, "x_rel", a.x_rel);

  if (a.model != "salpeter" && a.model != "baeumer")
    throw std::runtime_error("unknown model '" + a.model + "'");
  const bool known_method =
      a.method == "closed" || a.method == "integral" || a.method == "inner" ||
      a.method == "outer" || a.method == "series" || a.method == "classical" ||
      a.method == "massless";
  if (!known_method) throw std::runtime_error("unknown method '" + a.method + "'");
  if (a.method == "massless" && a.m != 0.0)
    throw std::runtime_error("method 'massless' requires --m 0");
  if (a.model == "baeumer" &&
      (a.method == "series" || a.method == "classical"))
    throw std::runtime_error("method '" + a.method +
                             "' is not defined for the baeumer model");

  const std::vector<double> t_grid =
      (a.t_count > 0) ? make_grid(a.t_min, a.t_max, a.t_count, a.t_spacing)
                      : std::vector<double>{a.t};
  const salprop::QuadratureConfig cfg = a.common.quad();

  std::vector<Row> rows;
  bool nonconverged = false;
  for (const double t : t_grid) {
    std::vector<double> xs;
    if (!a.x_rel.empty()) {
      for (const double mult : parse_range(a.x_rel)) xs.push_back(mult * t);
    } else if (a.x_count > 0) {
      xs = make_grid(a.x_min, a.x_max, a.x_count, "linear");
    } else if (!a.x_values.empty()) {
      xs = a.x_values;
    } else {
      xs.push_back(0.0);
    }
    for (const double x : xs) {
      Row r;
      r.model = a.model;
      r.method = a.method;
      r.m = a.m;
      r.t = t;
      r.x = x;
      const salprop::PropagatorQuery q{x, t, a.m};
      try {
        if (a.model == "baeumer") {
          if (a.method == "closed" || a.method == "massless") {
            r.value = Complex(salprop::baeumer_closed(q), 0.0);
          } else if (a.method == "outer") {
            const auto res = salprop::baeumer_integral_outer(q, cfg);
            r.value = res.value;
            r.err_estimate = res.error_estimate;
            if (!res.converged) nonconverged = true, r.flags = "no_converge";
          } else {  // integral / inner
            const auto res = salprop::baeumer_integral_inner(q, cfg);
            r.value = res.value;
            r.err_estimate = res.error_estimate;
            if (!res.converged) nonconverged = true, r.flags = "no_converge";
          }
        } else {
          if (a.method == "closed" || a.method == "massless") {
            r.value = salprop::salpeter_closed(q);
          } else if (a.method == "classical") {
            r.value = salprop::salpeter_classical(q);
          } else if (a.method == "series") {
            r.value = salprop::series_propagator(x, t, a.m, a.series_order).value;
          } else if (a.method == "inner" ||
                     (a.method == "integral" && std::abs(x) < t)) {
            const auto res = salprop::salpeter_integral_inner(q, cfg);
            r.value = res.value;
            r.err_estimate = res.error_estimate;
            if (!res.converged) nonconverged = true, r.flags = "no_converge";
          } else {
            const auto res = salprop::salpeter_integral_outer(q, cfg);
            r.value = res.value;
            r.err_estimate = res.error_estimate;
            if (!res.converged) nonconverged = true, r.flags = "no_converge";
          }
        }
      } catch (const salprop::LightConeSingularity&) {
        r.flags = "singular";
      } catch (const salprop::ConvergenceError&) {
        nonconverged = true;
        r.flags = "no_converge";
      }
      rows.push_back(std::move(r));
    }
  }

  if (a.common.strict && nonconverged) {
    std::cerr << "salprop: quadrature failed to converge (strict mode)\n";
    return kExitNonConvergence;
  }
  OutputTarget out;
  out.path = a.common.output_path;
  json meta = a.common.meta("propagator");
  meta["model"] = a.model;
  meta["method"] = a.method;
  meta["m"] = a.m;
  if (a.common.format == "json")
    write_rows_json(out.stream(), rows, meta);
  else
    write_rows_csv(out.stream(), rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------------

struct WavefunctionArgs {
  CommonOptions common;
  double delta = 1.0;
  double t = 1.0;
  double m = 1.0;
  double x_min = 0.0, x_max = 0.0;  // 0,0 = auto
  int n_points = 4001;
  CLI::Option *opt_delta = nullptr, *opt_t = nullptr, *opt_m = nullptr,
              *opt_n = nullptr;
};

int run_wavefunction(WavefunctionArgs& a) {
  ConfigFile cf = a.common.resolve();
  cf.merge(a.opt_delta, "delta", a.delta);
  cf.merge(a.opt_t, "t", a.t);
  cf.merge(a.opt_m, "m", a.m);
  cf.merge(a.opt_n, "n_points", a.n_points);

  salprop::GridSpec spec;
  if (a.x_min == 0.0 && a.x_max == 0.0) {
    // Wide enough that the truncated probability is below the reported
    // conservation tolerance (the kernel tail decays only algebraically).
    const double half = a.t + a.delta + ((a.m > 0.0) ? 12.0 / a.m : 20.0 * a.t);
    spec.x_min = -half;
    spec.x_max = half;
  } else {
    spec.x_min = a.x_min;
    spec.x_max = a.x_max;
  }
  spec.n_points = a.n_points;

  const salprop::WaveState st =
      salprop::evolve(a.delta, a.t, a.m, spec, a.common.quad());
  const double prob = salprop::total_probability(st);

  OutputTarget out;
  out.path = a.common.output_path;
  std::ostream& os = out.stream();
  if (a.common.format == "json") {
    json meta = a.common.meta("wavefunction");
    meta["delta"] = a.delta;
    meta["t"] = a.t;
    meta["m"] = a.m;
    meta["n_points"] = a.n_points;
    json doc;
    doc["meta"] = meta;
    doc["rows"] = json::array();
    for (std::size_t i = 0; i < st.grid.size(); ++i) {
      json j;
      j["x"] = st.grid[i];
      j["re"] = st.amplitudes[i].real();
      j["im"] = st.amplitudes[i].imag();
      j["abs2"] = std::norm(st.amplitudes[i]);
      doc["rows"].push_back(std::move(j));
    }
    doc["total_probability"] = prob;
    os << doc.dump(2) << "\n";
  } else {
    os << "x,re,im,abs2\n";
    for (std::size_t i = 0; i < st.grid.size(); ++i) {
      os << fmt(st.grid[i]) << ',' << fmt(st.amplitudes[i].real()) << ','
         << fmt(st.amplitudes[i].imag()) << ','
         << fmt(std::norm(st.amplitudes[i])) << "\n";
    }
    os << "total_probability,,," << fmt(prob) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// moments
// ---------------------------------------------------------------------------

struct MomentsArgs {
  CommonOptions common;
  double t_min = 1e-3;
  double t_max = 1e3;
  int points_per_decade = 8;
  double m = 1.0;
  CLI::Option *opt_tmin = nullptr, *opt_tmax = nullptr, *opt_ppd = nullptr,
              *opt_m = nullptr;
};

int run_moments(MomentsArgs& a) {
  ConfigFile cf = a.common.resolve();
  cf.merge(a.opt_tmin, "t_min", a.t_min);
  cf.merge(a.opt_tmax, "t_max", a.t_max);
  cf.merge(a.opt_ppd, "points_per_decade", a.points_per_decade);
  cf.merge(a.opt_m, "m", a.m);

  const salprop::DiffusionSummary s = salprop::diffusion_scan(
      a.t_min, a.t_max, a.points_per_decade, a.m, a.common.quad());

  OutputTarget out;
  out.path = a.common.output_path;
  std::ostream& os = out.stream();
  const std::size_t n = s.times.size();
  if (a.common.format == "json") {
    json meta = a.common.meta("moments");
    meta["t_min"] = a.t_min;
    meta["t_max"] = a.t_max;
    meta["points_per_decade"] = a.points_per_decade;
    meta["m"] = a.m;
    json doc;
    doc["meta"] = meta;
    doc["rows"] = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json j;
      j["t"] = s.times[i];
      j["peak"] = s.peak_values[i];
      j["moment"] = s.second_moments[i];
      if (i >= 1 && i + 1 < n) {
        j["peak_slope"] = s.peak_slopes[i - 1];
        j["moment_slope"] = s.moment_slopes[i - 1];
      } else {
        j["peak_slope"] = nullptr;
        j["moment_slope"] = nullptr;
      }
      doc["rows"].push_back(std::move(j));
    }
    os << doc.dump(2) << "\n";
  } else {
    os << "t,peak,moment,peak_slope,moment_slope\n";
    for (std::size_t i = 0; i < n; ++i) {
      os << fmt(s.times[i]) << ',' << fmt(s.peak_values[i]) << ','
         << fmt(s.second_moments[i]) << ',';
      if (i >= 1 && i + 1 < n)
        os << fmt(s.peak_slopes[i - 1]) << ',' << fmt(s.moment_slopes[i - 1]);
      else
        os << ',';
      os << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidateArgs {
  CommonOptions common;
  std::string suite = "all";
  std::string json_path;
  double perturb = 0.0;
  int n_x = 41;
  CLI::Option *opt_suite = nullptr, *opt_perturb = nullptr;
};

json report_to_json(const salprop::ValidationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["worst_deviation"] = r.worst_deviation;
  j["all_pass"] = r.all_pass();
  j["sign_calibrations"] = json::object();
  for (const auto& [k, v] : r.sign_calibrations) j["sign_calibrations"][k] = v;
  j["cases"] = json::array();
  for (const auto& c : r.cases) {
    json cj;
    cj["inputs"] = c.inputs;
    cj["relation"] = c.relation;
    cj["deviation"] = c.deviation;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    cj["note"] = c.note;
    j["cases"].push_back(std::move(cj));
  }
  return j;
}

int run_validate(ValidateArgs& a) {
  ConfigFile cf = a.common.resolve();
  cf.merge(a.opt_suite, "suite", a.suite);
  cf.merge(a.opt_perturb, "perturb", a.perturb);
  if (a.suite != "scaling" && a.suite != "wick" && a.suite != "kg" &&
      a.suite != "cross" && a.suite != "all")
    throw std::runtime_error("unknown suite '" + a.suite + "'");

  const std::vector<std::pair<double, double>> scaling_points = {
      {0.5, 1.0}, {0.3, 0.8}, {2.0, 0.7}, {1.5, 2.0}, {3.0, 1.0},
      {0.1, 0.5}, {4.0, 1.3}, {0.9, 2.2}, {2.7, 0.4}, {1.1, 3.0}};

  std::vector<salprop::ValidationReport> reports;
  if (a.suite == "scaling" || a.suite == "all") {
    for (double lam : {0.5, 2.0, 10.0})
      reports.push_back(salprop::check_scaling(1.0, lam, scaling_points));
  }
  if (a.suite == "wick" || a.suite == "all") {
    reports.push_back(salprop::check_wick(
        {{2.0, 1.0, 1.0}, {3.0, 0.5, 0.5}, {2.5, 1.2, 2.0}}));
  }
  if (a.suite == "kg" || a.suite == "all") {
    reports.push_back(salprop::check_klein_gordon(
        {{0.4, 1.0}, {2.0, 0.7}}, 1.0, {1e-2, 5e-3, 2.5e-3}));
  }
  if (a.suite == "cross" || a.suite == "all") {
    reports.push_back(salprop::cross_validate(a.n_x, {0.0, 1.0},
                                              a.common.quad(), 1e-6, 2e-3,
                                              a.perturb));
  }

  json doc;
  doc["suites"] = json::array();
  bool all_pass = true;
  double worst = 0.0;
  for (const auto& r : reports) {
    doc["suites"].push_back(report_to_json(r));
    all_pass = all_pass && r.all_pass();
    worst = std::max(worst, r.worst_deviation);
  }
  doc["worst_deviation"] = worst;
  doc["all_pass"] = all_pass;

  if (!a.json_path.empty()) {
    std::ofstream f(a.json_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + a.json_path);
    f << doc.dump(2) << "\n";
  } else {
    OutputTarget out;
    out.path = a.common.output_path;
    out.stream() << doc.dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic propagator toolkit"};
  app.require_subcommand(1);

  PropagatorArgs pa;
  CLI::App* prop = app.add_subcommand("propagator", "evaluate G(x, t)");
  pa.common.attach(prop);
  pa.opt_model = prop->add_option("--model", pa.model, "salpeter or baeumer");
  pa.opt_method = prop->add_option(
      "--method", pa.method,
      "closed, integral, inner, outer, series, classical, massless");
  pa.opt_m = prop->add_option("--m", pa.m, "mass");
  pa.opt_t = prop->add_option("--t", pa.t, "time (single value)");
  prop->add_option("--t-min", pa.t_min, "time grid start");
  prop->add_option("--t-max", pa.t_max, "time grid end");
  prop->add_option("--t-count", pa.t_count, "time grid size (enables grid)");
  prop->add_option("--t-spacing", pa.t_spacing, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}));
  pa.opt_x = prop->add_option("--x", pa.x_values, "position(s)");
  pa.opt_xrel =
      prop->add_option("--x-rel", pa.x_rel,
                       "x grid in multiples of t, e.g. 0:5:256");
  prop->add_option("--x-min", pa.x_min, "absolute x grid start");
  prop->add_option("--x-max", pa.x_max, "absolute x grid end");
  prop->add_option("--x-count", pa.x_count, "absolute x grid size");
  prop->add_option("--order", pa.series_order, "series truncation order");

  WavefunctionArgs wa;
  CLI::App* wave = app.add_subcommand("wavefunction", "evolve the wave packet");
  wa.common.attach(wave);
  wa.opt_delta = wave->add_option("--delta", wa.delta, "initial support width");
  wa.opt_t = wave->add_option("--t", wa.t, "evolution time");
  wa.opt_m = wave->add_option("--m", wa.m, "mass");
  wave->add_option("--x-min", wa.x_min, "grid start (default: auto)");
  wave->add_option("--x-max", wa.x_max, "grid end (default: auto)");
  wa.opt_n = wave->add_option("--n-points", wa.n_points, "grid size");

  MomentsArgs ma;
  CLI::App* mom = app.add_subcommand("moments", "diffusion crossover scan");
  ma.common.attach(mom);
  ma.opt_tmin = mom->add_option("--t-min", ma.t_min, "scan start");
  ma.opt_tmax = mom->add_option("--t-max", ma.t_max, "scan end");
  ma.opt_ppd = mom->add_option("--points-per-decade", ma.points_per_decade,
                               "log-grid density");
  ma.opt_m = mom->add_option("--m", ma.m, "mass");

  ValidateArgs va;
  CLI::App* val = app.add_subcommand("validate", "run validation suites");
  va.common.attach(val);
  va.opt_suite = val->add_option("--suite", va.suite,
                                 "scaling, wick, kg, cross, or all");
  val->add_option("--json", va.json_path, "write the JSON report here");
  va.opt_perturb = val->add_option(
      "--perturb", va.perturb,
      "fault injection: multiply the integral method by (1 + perturb)");
  val->add_option("--n-x", va.n_x, "cross-suite x resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return (code == 0) ? kExitOk : kExitUsage;
  }

  try {
    if (prop->parsed()) return run_propagator(pa);
    if (wave->parsed()) return run_wavefunction(wa);
    if (mom->parsed()) return run_moments(ma);
    if (val->parsed()) return run_validate(va);
  } catch (const salprop::ConvergenceError& e) {
    std::cerr << "salprop: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const json::exception& e) {
    std::cerr << "salprop: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "salprop: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
