#include "pseudoherm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pseudoherm/closedform.hpp"
#include "pseudoherm/eigensolve.hpp"
#include "pseudoherm/errors.hpp"
#include "pseudoherm/grid.hpp"
#include "pseudoherm/opalg.hpp"
#include "pseudoherm/verify.hpp"

namespace pseudoherm::cli {

using json = nlohmann::ordered_json;

double round12(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

std::string fmt12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

json num(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round12(value);
}

struct Options {
  std::string model = "swanson";
  double mass = 1.0;
  std::optional<double> lambda;
  std::optional<double> sigma;
  std::optional<double> omega;
  std::optional<double> delta;
  std::optional<double> v0;
  std::optional<double> eta;
  std::optional<double> lambda0;
  std::string potential_poly;
  std::string gauge_poly;

  int grid_n = 4001;
  std::optional<double> x_min;
  std::optional<double> x_max;

  std::string format = "json";
  std::string output;

  int levels = 9;
  std::string emit_wavefunctions;
  std::string kind = "harmonic";
  std::string scheme = "one";

  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

// Raised for inconsistent flag combinations; mapped to the usage exit code.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polynomial parse_poly(const std::string& text, const char* flag) {
  Polynomial p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string(flag) + ": cannot parse coefficient '" + item + "'");
    }
  }
  if (p.empty()) throw ConfigError(std::string(flag) + " needs at least one coefficient");
  return p;
}

std::string canonical_model(const std::string& name) {
  if (name == "constant-gauge") return "constant_gauge";
  return name;
}

ModelSpec build_spec(const Options& o) {
  const std::string model = canonical_model(o.model);
  if (model == "swanson") {
    if (!o.lambda) throw ConfigError("swanson model needs --lambda");
    if (o.sigma && o.omega) throw ConfigError("give either --sigma or --omega, not both");
    if (o.omega) return SwansonModel::from_frequency(o.mass, *o.omega, *o.lambda);
    if (!o.sigma) throw ConfigError("swanson model needs --sigma (or --omega)");
    return SwansonModel(o.mass, *o.lambda, *o.sigma);
  }
  if (model == "isotonic") {
    if (!o.eta) throw ConfigError("isotonic model needs --eta");
    return IsotonicModel::from_eta(o.v0.value_or(1.0), *o.eta, o.lambda0.value_or(0.0), o.mass);
  }
  if (model == "constant_gauge") {
    return ConstantGaugeModel{o.omega.value_or(1.0), o.delta.value_or(0.0), o.mass};
  }
  if (model == "custom") {
    if (o.potential_poly.empty()) throw ConfigError("custom model needs --potential-poly");
    const Polynomial gauge = o.gauge_poly.empty() ? Polynomial{0.0} : parse_poly(o.gauge_poly, "--gauge-poly");
    return CustomModel::polynomial(o.mass, parse_poly(o.potential_poly, "--potential-poly"), gauge);
  }
  throw ConfigError("unknown model '" + o.model + "'");
}

Grid build_grid(const ModelSpec& spec, const Options& o) {
  if (o.x_min.has_value() != o.x_max.has_value()) throw ConfigError("--x-min and --x-max go together");
  if (o.x_min) return Grid::uniform(*o.x_min, *o.x_max, o.grid_n);
  if (spec.kind() == ModelKind::Custom) throw ConfigError("custom model needs --x-min and --x-max");
  return default_grid(spec, o.grid_n);
}

Grid susy_grid(SusyKind kind, double omega, const Options& o) {
  if (o.x_min.has_value() != o.x_max.has_value()) throw ConfigError("--x-min and --x-max go together");
  if (o.x_min) return Grid::uniform(*o.x_min, *o.x_max, o.grid_n);
  if (kind == SusyKind::Harmonic) {
    const double half = 12.0 / std::sqrt(omega);
    return Grid::uniform(-half, half, o.grid_n);
  }
  const double right = 14.0 / std::sqrt(omega);
  return Grid::uniform(right / o.grid_n, right, o.grid_n);
}

std::string model_name(const ModelSpec& spec) {
  switch (spec.kind()) {
    case ModelKind::Swanson: return "swanson";
    case ModelKind::Isotonic: return "isotonic";
    case ModelKind::ConstantGauge: return "constant_gauge";
    case ModelKind::Custom: return "custom";
  }
  return "unknown";
}

json params_json(const ModelSpec& spec) {
  json p;
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      p["m"] = num(m.mass());
      p["lambda"] = num(m.gauge());
      p["sigma"] = num(m.sigma());
      p["omega"] = num(m.omega());
      p["omega_r"] = num(m.omega_r());
      p["big_omega"] = num(m.big_omega());
      break;
    }
    case ModelKind::Isotonic: {
      const auto& m = spec.as<IsotonicModel>();
      p["v0"] = num(m.v0());
      p["x0"] = num(m.x0());
      p["m"] = num(m.mass());
      p["lambda"] = num(m.gauge());
      p["eta"] = num(m.eta());
      p["lambda0"] = num(m.gauge0());
      break;
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      p["omega"] = num(m.omega);
      p["delta"] = num(m.delta);
      p["m"] = num(m.mass);
      break;
    }
    case ModelKind::Custom: {
      const auto& m = spec.as<CustomModel>();
      p["m"] = num(m.mass);
      json v = json::array();
      json a = json::array();
      if (m.potential_poly) for (double c : *m.potential_poly) v.push_back(num(c));
      if (m.gauge_poly) for (double c : *m.gauge_poly) a.push_back(num(c));
      p["potential_poly"] = v;
      p["gauge_poly"] = a;
      break;
    }
  }
  return p;
}

json grid_json(const Grid& g) {
  return json{{"x_min", num(g.x_min())},
              {"x_max", num(g.x_max())},
              {"n_points", g.size()},
              {"dx", num(g.dx())},
              {"boundary", "dirichlet"}};
}

json level_json(const LevelRecord& r) {
  return json{{"n", r.n}, {"e_closed", num(r.e_closed)}, {"e_grid", num(r.e_grid)}, {"rel_err", num(r.rel_err)}};
}

json check_json(const CheckReport& c) {
  json j{{"name", c.name}, {"value", num(c.value)}, {"tolerance", num(c.tolerance)}, {"passed", c.passed}};
  if (!c.context.empty()) {
    json ctx;
    for (const auto& [k, v] : c.context) ctx[k] = num(v);
    j["context"] = ctx;
  }
  return j;
}

bool all_passed(const std::vector<CheckReport>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

// CSV body for a results array of homogeneous records.
std::string csv_of(const json& results, const std::vector<std::string>& columns, const std::string& prefix_header = "",
                   const std::string& prefix_value = "", bool header = true) {
  std::ostringstream os;
  if (header) {
    if (!prefix_header.empty()) os << prefix_header << ',';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\r\n";
  }
  for (const auto& row : results) {
    if (!prefix_value.empty()) os << prefix_value << ',';
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      const auto it = row.find(columns[i]);
      if (it == row.end() || it->is_null()) continue;
      if (it->is_boolean()) os << (it->get<bool>() ? "true" : "false");
      else if (it->is_number_integer()) os << it->get<long long>();
      else if (it->is_number()) os << fmt12(it->get<double>());
      else os << '"' << it->get<std::string>() << '"';
    }
    os << "\r\n";
  }
  return os.str();
}

const std::vector<std::string> kLevelColumns = {"n", "e_closed", "e_grid", "rel_err"};
const std::vector<std::string> kCheckColumns = {"name", "value", "tolerance", "passed"};

struct Emitted {
  json doc;
  std::string csv;
};

void write_output(const Options& o, const Emitted& e, std::ostream& out) {
  const std::string text = o.format == "csv" ? e.csv : e.doc.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + o.output);
  file << text;
}

json base_doc(const ModelSpec& spec, const Grid& grid) {
  json doc;
  doc["model"] = model_name(spec);
  doc["params"] = params_json(spec);
  doc["grid"] = grid_json(grid);
  return doc;
}

std::vector<LevelRecord> grid_levels(const ModelSpec& spec, const Grid& grid, int levels) {
  if (spec.kind() != ModelKind::Custom) return closedform_vs_grid(spec, grid, levels - 1);
  const Vector values = tridiag_eigenvalues(build_hermitian(spec, grid));
  std::vector<LevelRecord> out;
  for (int n = 0; n < levels; ++n) {
    out.push_back({n, std::nan(""), values(n), std::nan("")});
  }
  return out;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  const Grid grid = build_grid(spec, o);
  Emitted e{base_doc(spec, grid), {}};
  json results = json::array();
  for (const auto& r : grid_levels(spec, grid, o.levels)) results.push_back(level_json(r));
  e.doc["results"] = results;
  e.csv = csv_of(results, kLevelColumns);
  write_output(o, e, out);
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  const Grid grid = build_grid(spec, o);
  const EigenSet eigen = tridiag_eigen(build_hermitian(spec, grid), o.levels);
  const Vector g = dyson_weights(spec, grid);
  const Matrix transported = transport_eigenvectors(eigen, g, grid);
  const Vector theta = g.array().square();
  const Vector h_residuals =
      nonhermitian_residuals(build_nonhermitian(spec, grid), transported, eigen.eigenvalues, theta, grid);

  Emitted e{base_doc(spec, grid), {}};
  json results = json::array();
  for (int n = 0; n < eigen.size(); ++n) {
    json row;
    row["n"] = n;
    const double closed = spec.kind() == ModelKind::Custom ? std::nan("") : closed_form_energy(spec, n);
    row["e_closed"] = num(closed);
    row["e_grid"] = num(eigen.eigenvalues(n));
    row["rel_err"] = num(std::abs(eigen.eigenvalues(n) - closed) / std::abs(closed));
    row["residual_h"] = num(eigen.residuals(n));
    row["residual_H_metric"] = num(h_residuals(n));
    results.push_back(row);
  }
  e.doc["results"] = results;
  e.csv = csv_of(results, {"n", "e_closed", "e_grid", "rel_err", "residual_h", "residual_H_metric"});

  if (!o.emit_wavefunctions.empty()) {
    std::ofstream file(o.emit_wavefunctions, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + o.emit_wavefunctions);
    file << "x";
    for (int n = 0; n < eigen.size(); ++n) file << ",psi_h_" << n;
    for (int n = 0; n < eigen.size(); ++n) file << ",psi_H_" << n;
    file << ",theta\r\n";
    for (int i = 0; i < grid.size(); ++i) {
      file << fmt12(grid.x(i));
      for (int n = 0; n < eigen.size(); ++n) file << ',' << fmt12(eigen.eigenvectors(i, n));
      for (int n = 0; n < eigen.size(); ++n) file << ',' << fmt12(transported(i, n));
      file << ',' << fmt12(theta(i)) << "\r\n";
    }
    e.doc["wavefunctions"] = o.emit_wavefunctions;
  }
  write_output(o, e, out);
  return kExitOk;
}

int emit_checks(const Options& o, json doc, const std::vector<CheckReport>& checks, std::ostream& out) {
  json results = json::array();
  for (const auto& c : checks) results.push_back(check_json(c));
  doc["results"] = results;
  doc["all_passed"] = all_passed(checks);
  write_output(o, Emitted{doc, csv_of(results, kCheckColumns)}, out);
  return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  const Grid grid = build_grid(spec, o);
  return emit_checks(o, base_doc(spec, grid), verification_suite(spec, grid, o.levels), out);
}

int cmd_susy(const Options& o, std::ostream& out) {
  SusyKind kind;
  if (o.kind == "harmonic") kind = SusyKind::Harmonic;
  else if (o.kind == "isotonic") kind = SusyKind::Isotonic;
  else throw ConfigError("--kind must be harmonic or isotonic");
  const double omega = o.omega.value_or(1.0);
  const double lambda = o.lambda.value_or(0.0);
  if (!(omega > 0.0)) throw ConfigError("--omega must be positive");
  if (!(lambda >= 0.0)) throw ConfigError("--lambda must be >= 0");
  const Grid grid = susy_grid(kind, omega, o);
  json doc;
  doc["model"] = std::string("susy_") + o.kind;
  doc["params"] = json{{"omega", num(omega)}, {"lambda", num(lambda)}, {"m", 1}};
  doc["grid"] = grid_json(grid);
  const int levels = o.levels == Options{}.levels ? 0 : o.levels;
  return emit_checks(o, doc, susy_checks(omega, lambda, kind, grid, levels), out);
}

int cmd_algebra(const Options& o, std::ostream& out) {
  const double omega = o.omega.value_or(1.0);
  const double lambda = o.lambda.value_or(0.0);
  const QuadraticXP h = QuadraticXP::gauge_oscillator(o.mass, omega, lambda);
  LadderPoly op;
  double e_omega0 = 0.0;
  double e_alpha = 0.0;
  double e_beta = 0.0;
  if (o.scheme == "one") {
    op = from_xp_scheme_one(h, omega);
    e_omega0 = omega;
    e_alpha = lambda / 2.0;
    e_beta = -lambda / 2.0;
  } else if (o.scheme == "two") {
    op = from_xp_scheme_two(h);
    const double m = o.mass;
    e_omega0 = 1.0 / (2.0 * m) + m * omega * omega / 2.0;
    e_alpha = -1.0 / (4.0 * m) + m * omega * omega / 4.0 + lambda / 2.0;
    e_beta = -1.0 / (4.0 * m) + m * omega * omega / 4.0 - lambda / 2.0;
  } else {
    throw ConfigError("--scheme must be one or two");
  }
  const SwansonParams p = extract_swanson(op);

  std::vector<CheckReport> checks;
  checks.push_back(make_check("omega0_error", std::abs(p.omega0 - e_omega0), 1e-12, {{"expected", e_omega0}}));
  checks.push_back(make_check("alpha_error", std::abs(p.alpha - Complex(e_alpha)), 1e-12, {{"expected", e_alpha}}));
  checks.push_back(make_check("beta_error", std::abs(p.beta - Complex(e_beta)), 1e-12, {{"expected", e_beta}}));
  checks.push_back(make_check("pt_invariance", distance(pt_transform(op), op), 1e-12));
  if (o.scheme == "two" && omega == 0.0) {
    checks.push_back(make_check("alpha_plus_beta_plus_omega0", std::abs(p.alpha + p.beta + p.omega0), 1e-12));
  }

  json doc;
  doc["model"] = "algebra";
  doc["params"] = json{{"scheme", o.scheme}, {"m", num(o.mass)}, {"omega", num(omega)}, {"lambda", num(lambda)}};
  doc["swanson"] = json{{"omega0", num(p.omega0)},
                        {"alpha", num(p.alpha.real())},
                        {"alpha_imag", num(p.alpha.imag())},
                        {"beta", num(p.beta.real())},
                        {"beta_imag", num(p.beta.imag())},
                        {"hermitian", distance(adjoint(op), op) <= 1e-12 * std::max(1.0, op.max_abs_coefficient())}};
  json terms = json::array();
  for (const auto& [key, c] : op.terms()) {
    terms.push_back(json{{"creation", key.first}, {"annihilation", key.second}, {"re", num(c.real())}, {"im", num(c.imag())}});
  }
  doc["terms"] = terms;
  return emit_checks(o, doc, checks, out);
}

void set_param(Options& o, const std::string& name, double value) {
  static const std::map<std::string, std::optional<double> Options::*> optional_fields = {
      {"lambda", &Options::lambda}, {"sigma", &Options::sigma}, {"omega", &Options::omega},
      {"delta", &Options::delta},   {"v0", &Options::v0},       {"eta", &Options::eta},
      {"lambda0", &Options::lambda0}};
  if (name == "m") {
    o.mass = value;
    return;
  }
  const auto it = optional_fields.find(name);
  if (it == optional_fields.end()) throw ConfigError("unknown sweep parameter '" + name + "'");
  o.*(it->second) = value;
}

unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PSEUDOHERM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.param.empty()) throw ConfigError("sweep needs --param");
  if (o.steps < 1) throw ConfigError("--steps must be >= 1");
  std::vector<double> values(o.steps);
  for (int i = 0; i < o.steps; ++i) values[i] = o.steps == 1 ? o.from : o.from + (o.to - o.from) * i / (o.steps - 1);

  // Validate the flag combination once before spawning workers.
  {
    Options probe = o;
    set_param(probe, o.param, values.front());
    (void)canonical_model(probe.model);
  }

  struct Block {
    json results = json::array();
    json grid;
    json params;
    std::string error;
  };
  std::vector<Block> blocks(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      Options local = o;
      set_param(local, o.param, values[i]);
      try {
        const ModelSpec spec = build_spec(local);
        const Grid grid = build_grid(spec, local);
        blocks[i].params = params_json(spec);
        blocks[i].grid = grid_json(grid);
        for (const auto& r : grid_levels(spec, grid, local.levels)) blocks[i].results.push_back(level_json(r));
      } catch (const std::exception& ex) {
        blocks[i].error = ex.what();
      }
    }
  };
  const unsigned n_threads = std::min<unsigned>(sweep_threads(), static_cast<unsigned>(values.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json doc;
  doc["model"] = canonical_model(o.model);
  doc["sweep"] = json{{"param", o.param}, {"from", num(o.from)}, {"to", num(o.to)}, {"steps", o.steps}};
  json all = json::array();
  std::string csv;
  bool failed = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    json block;
    block["value"] = num(values[i]);
    if (!blocks[i].error.empty()) {
      failed = true;
      block["error"] = blocks[i].error;
    } else {
      block["params"] = blocks[i].params;
      block["grid"] = blocks[i].grid;
      block["results"] = blocks[i].results;
      csv += csv_of(blocks[i].results, kLevelColumns, o.param, fmt12(values[i]), false);
    }
    all.push_back(block);
  }
  doc["results"] = all;
  std::string header = o.param;
  for (const auto& c : kLevelColumns) header += "," + c;
  write_output(o, Emitted{doc, header + "\r\n" + csv}, out);
  return failed ? kExitCheckFailed : kExitOk;
}

void add_model_options(CLI::App* app, Options& o) {
  app->add_option("--model", o.model, "swanson | isotonic | constant_gauge | custom");
  app->add_option("--m", o.mass, "mass (default 1)");
  app->add_option("--lambda", o.lambda, "gauge strength");
  app->add_option("--sigma", o.sigma, "Lambda/omega in (0, 1] (swanson)");
  app->add_option("--omega", o.omega, "oscillator frequency");
  app->add_option("--delta", o.delta, "constant gauge (constant_gauge)");
  app->add_option("--v0", o.v0, "energy scale (isotonic, default 1)");
  app->add_option("--eta", o.eta, "eta^2 = 8 m V0 x0^2 (isotonic)");
  app->add_option("--lambda0", o.lambda0, "Lambda/V0 (isotonic, default 0)");
  app->add_option("--potential-poly", o.potential_poly, "comma-separated V(x) coefficients (custom)");
  app->add_option("--gauge-poly", o.gauge_poly, "comma-separated a(x) coefficients, A = -i a (custom)");
}

void add_grid_options(CLI::App* app, Options& o) {
  app->add_option("--grid-n", o.grid_n, "grid points (default 4001)")->check(CLI::Range(3, 2000000));
  app->add_option("--x-min", o.x_min, "left grid node");
  app->add_option("--x-max", o.x_max, "right grid node");
}

void add_output_options(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--output", o.output, "write results to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-Hermitian oscillator solver and identity checker", "pseudoherm"};
  app.require_subcommand(1, 1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "closed-form versus grid energies");
  add_model_options(spectrum, o);
  add_grid_options(spectrum, o);
  add_output_options(spectrum, o);
  spectrum->add_option("--levels", o.levels, "number of levels (default 9)")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "grid eigenpairs, transported to the non-Hermitian operator");
  add_model_options(solve, o);
  add_grid_options(solve, o);
  add_output_options(solve, o);
  solve->add_option("--levels", o.levels, "number of levels (default 9)")->check(CLI::PositiveNumber);
  solve->add_option("--emit-wavefunctions", o.emit_wavefunctions, "CSV of x, psi_h, psi_H, theta");

  auto* verify = app.add_subcommand("verify", "full identity-check suite for one model");
  add_model_options(verify, o);
  add_grid_options(verify, o);
  add_output_options(verify, o);
  verify->add_option("--levels", o.levels, "number of levels (default 9)")->check(CLI::PositiveNumber);

  auto* susy = app.add_subcommand("susy", "supersymmetric partner checks");
  susy->add_option("--kind", o.kind, "harmonic | isotonic")->check(CLI::IsMember({"harmonic", "isotonic"}));
  susy->add_option("--omega", o.omega, "superpotential frequency (default 1)");
  susy->add_option("--lambda", o.lambda, "gauge coupling (default 0)");
  susy->add_option("--levels", o.levels, "levels per partner")->check(CLI::PositiveNumber);
  add_grid_options(susy, o);
  add_output_options(susy, o);

  auto* algebra = app.add_subcommand("algebra", "ladder-operator realization of the oscillator");
  algebra->add_option("--scheme", o.scheme, "one | two")->check(CLI::IsMember({"one", "two"}));
  algebra->add_option("--m", o.mass, "mass (default 1)");
  algebra->add_option("--omega", o.omega, "Omega (default 1)");
  algebra->add_option("--lambda", o.lambda, "Lambda (default 0)");
  add_output_options(algebra, o);

  auto* sweep = app.add_subcommand("sweep", "spectrum over a range of one parameter");
  add_model_options(sweep, o);
  add_grid_options(sweep, o);
  add_output_options(sweep, o);
  sweep->add_option("--levels", o.levels, "number of levels (default 9)")->check(CLI::PositiveNumber);
  sweep->add_option("--param", o.param, "parameter to sweep")->required();
  sweep->add_option("--from", o.from, "first value")->required();
  sweep->add_option("--to", o.to, "last value")->required();
  sweep->add_option("--steps", o.steps, "number of values")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*susy) return cmd_susy(o, out);
    if (*algebra) return cmd_algebra(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool config = e.kind() == ErrorKind::Domain || e.kind() == ErrorKind::InvalidArgument;
    return config ? kExitUsage : kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace pseudoherm::cli
