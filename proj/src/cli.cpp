#include "wm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "wm/census.hpp"
#include "wm/derdzinski.hpp"
#include "wm/period_map.hpp"
#include "wm/report.hpp"
#include "wm/ricci.hpp"
#include "wm/yamabe.hpp"

namespace wm::cli {

using report::json;

int exit_code(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::parameter: return 2;
    case ErrorCategory::numerical: return 3;
    case ErrorCategory::io: return 4;
  }
  return 3;
}

namespace {

constexpr double unset = std::numeric_limits<double>::quiet_NaN();

struct Options {
  int n = 0;
  double scalar_curvature = unset;
  double constant = unset;
  double length = unset;
  std::vector<double> energies;
  std::size_t grid = 0;
  double grid_min = 0.05;
  double grid_max = 4.0;
  std::size_t grid_count = 2000;
  int family = 1;
  std::size_t samples = 4096;
  std::string profile;
  int k_max = 3;
  bool yamabe = false;
  std::string format;
  double quad_tol = 1e-10;
  double closure_tol = 1e-8;
  double parallel_tol = 1e-10;
  double energy_cutoff = 1.0 - 1e-6;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

unsigned thread_cap() {
  const char* env = std::getenv("WM_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw ParameterError("WM_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

PeriodOptions period_options(const Options& o) {
  if (!(o.quad_tol > 0.0 && o.quad_tol < 1e-2)) throw ParameterError("--quad-tol must lie in (0, 1e-2)");
  if (!(o.energy_cutoff > 0.0 && o.energy_cutoff < 1.0)) throw ParameterError("--energy-cutoff must lie in (0, 1)");
  PeriodOptions p;
  p.rel_tol = o.quad_tol;
  p.max_error = std::max(p.max_error, o.quad_tol);
  p.energy_cutoff = o.energy_cutoff;
  return p;
}

CensusOptions census_options(const Options& o) {
  if (!(o.closure_tol > 0.0)) throw ParameterError("--closure-tol must be positive");
  if (!(o.parallel_tol > 0.0)) throw ParameterError("--parallel-tol must be positive");
  if (o.samples < 8) throw ParameterError("--samples must be at least 8");
  CensusOptions c;
  c.period = period_options(o);
  c.samples = o.samples;
  c.closure_tol = o.closure_tol;
  c.parallel_tol = o.parallel_tol;
  return c;
}

ModelParams model(const Options& o) {
  ModelParams p{o.n, o.scalar_curvature, o.constant};
  p.validate();
  return p;
}

void require_length(const Options& o) {
  if (!(o.length > 0.0) || !std::isfinite(o.length)) throw ParameterError("--length must be positive");
}

json model_echo(const Options& o) {
  return json{{"n", o.n}, {"scalar_curvature", o.scalar_curvature}, {"constant", o.constant}};
}

json tolerance_echo(const Options& o, bool census_tols) {
  json j{{"quad_tol", o.quad_tol}, {"energy_cutoff", o.energy_cutoff}};
  if (census_tols) {
    j["closure_tol"] = o.closure_tol;
    j["parallel_tol"] = o.parallel_tol;
    j["samples"] = o.samples;
  }
  return j;
}

void merge(json& into, const json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

// A command either fills an envelope or a table; the format decides which is printed.
struct Output {
  report::Envelope envelope;
  report::Table table;
  bool has_table = false;
  int status = 0;
  std::string error_line;
};

void emit(const Output& o, const std::string& format, std::ostream& out) {
  std::ostringstream buf;
  if (format == "csv") {
    if (!o.has_table) throw ParameterError(o.envelope.command + " has no csv form");
    report::write_csv(buf, o.table);
  } else {
    report::Envelope env = o.envelope;
    if (env.data.empty() && o.has_table) env.data = json{{"rows", report::table_to_json(o.table)}};
    report::write_json(buf, env);
  }
  out << buf.str();
}

// ---- params ---------------------------------------------------------------

Output cmd_params(const Options& o) {
  const ModelParams p = model(o);
  const DerivedParams d = derive_params(p);
  const PrintedConstantForms printed = printed_constant_forms(p);
  Output out;
  out.envelope.command = "params";
  out.envelope.params_echo = model_echo(o);
  out.envelope.data = json{{"alpha", d.alpha},
                           {"beta", d.beta},
                           {"c0", d.c0},
                           {"min_period", d.min_period},
                           {"raw_c_max", raw_energy(d, d.c0)},
                           {"printed_forms", {{"introduction", printed.introduction},
                                              {"bifurcation", printed.bifurcation}}}};
  auto compare = [&](const char* label, double v) {
    if (std::abs(v - d.alpha) > 1e-12 * d.alpha) {
      std::ostringstream os;
      os.precision(17);
      os << label << " constant-solution formula gives " << v << ", which does not solve the ODE; alpha = "
         << d.alpha << " is the root";
      out.envelope.diagnostics.push_back(os.str());
    }
  };
  compare("introduction", printed.introduction);
  compare("bifurcation", printed.bifurcation);
  out.table = {{"n", "scalar_curvature", "constant", "alpha", "beta", "c0", "min_period"},
               {{static_cast<long long>(p.n), p.scalar_curvature, p.constant, d.alpha, d.beta, d.c0, d.min_period}}};
  out.has_table = true;
  return out;
}

// ---- period-table ---------------------------------------------------------

Output cmd_period_table(const Options& o) {
  validate_dimension(o.n);
  const PeriodOptions popts = period_options(o);
  const PotentialSystem sys = normalized_system(o.n);
  std::vector<double> energies = o.energies;
  if (!energies.empty() && o.grid != 0) throw ParameterError("give either --energies or --grid, not both");
  if (energies.empty()) {
    if (o.grid < 2) throw ParameterError("period-table needs --energies or --grid with at least 2 points");
    const double lo = std::log(1e-6 * sys.c_max()), hi = std::log(popts.energy_cutoff * sys.c_max());
    for (std::size_t i = 0; i < o.grid; ++i)
      energies.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(o.grid - 1)));
    energies.back() = popts.energy_cutoff * sys.c_max();
  }
  const PeriodTable table = period_table(sys, energies, popts, thread_cap());

  Output out;
  out.envelope.command = "period-table";
  out.envelope.params_echo = json{{"n", o.n}, {"energies", energies}};
  merge(out.envelope.params_echo, tolerance_echo(o, false));
  out.table.header = {"c", "a", "b", "T", "dT", "err"};
  for (const auto& r : table.rows)
    out.table.rows.push_back({r.c, r.turning.a, r.turning.b, r.period,
                              r.derivative ? report::Cell(*r.derivative) : report::Cell(std::string()),
                              r.error_estimate});
  out.has_table = true;
  json failed = json::array();
  for (const auto& e : table.errors) {
    failed.push_back(json{{"c", e.c}, {"reason", e.reason}, {"message", e.message}});
    out.envelope.diagnostics.push_back("energy " + report::format_double(e.c) + ": " + e.reason + ": " + e.message);
  }
  out.envelope.data = json{{"rows", report::table_to_json(out.table)}, {"failed", failed}};
  if (!table.errors.empty()) {
    const auto& e = table.errors.front();
    const bool param = e.reason == "energy-out-of-range" || e.reason == "parameter-validation";
    out.status = param ? 2 : 3;
    out.error_line = "error: " + e.reason + ": " + std::to_string(table.errors.size()) + " of " +
                     std::to_string(energies.size()) + " energies failed; first: " + one_line(e.message);
  }
  return out;
}

// ---- certificate ----------------------------------------------------------

Output cmd_certificate(const Options& o) {
  CertificateGrid grid;
  grid.lo = o.grid_min;
  grid.hi = o.grid_max;
  grid.count = o.grid_count;
  const CertificateReport rep = monotonicity_certificate(o.n, grid);
  Output out;
  out.envelope.command = "certificate";
  out.envelope.params_echo =
      json{{"n", o.n}, {"grid_min", grid.lo}, {"grid_max", grid.hi}, {"grid_count", grid.count},
           {"center_gap", grid.center_gap}};
  out.table.header = {"x", "H", "Delta"};
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    out.table.rows.push_back({rep.grid[i], rep.H_values[i], rep.Delta_values[i]});
  out.has_table = true;
  out.envelope.data = json{{"n", rep.n},
                           {"H_positive", rep.H_positive},
                           {"Delta_nonnegative", rep.Delta_nonnegative},
                           {"curvature_nonnegative", rep.curvature_nonnegative},
                           {"H_min", rep.H_min},
                           {"Delta_min", rep.Delta_min},
                           {"samples", report::table_to_json(out.table)}};
  out.envelope.diagnostics = rep.notes;
  return out;
}

// ---- census / yamabe ------------------------------------------------------

json family_json(const CensusFamily& f, bool derdzinski) {
  json j = json::object();
  j["kind"] = to_string(f.kind);
  if (f.kind == FamilyKind::nonconstant) j["j"] = f.j;
  j["status"] = to_string(f.status);
  j["c"] = f.energy;
  j["minimal_period"] = f.kind == FamilyKind::constant ? json(nullptr) : json(f.minimal_period);
  j["amplitude"] = f.amplitude;
  json r{{"closure", f.residuals.closure}, {"energy_drift", f.residuals.energy_drift}};
  if (derdzinski) r["codazzi_residual"] = f.residuals.codazzi;
  r["ode_fd_residual"] = f.residuals.ode_fd;
  if (derdzinski) {
    r["parallel"] = f.residuals.parallel ? "parallel" : "non_parallel";
    r["parallel_sup"] = f.residuals.parallel_sup;
    r["conformal_length"] = f.residuals.conformal_length;
  }
  j["residuals"] = r;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

report::Table family_table(const MetricCensus& m, bool derdzinski) {
  report::Table t;
  t.header = {"kind", "j", "status", "c", "minimal_period", "amplitude", "closure"};
  if (derdzinski) t.header.push_back("codazzi_residual");
  t.header.push_back("ode_fd_residual");
  if (derdzinski) {
    t.header.push_back("parallel");
    t.header.push_back("conformal_length");
  }
  for (const auto& f : m.families) {
    const bool c = f.kind == FamilyKind::constant;
    std::vector<report::Cell> row{std::string(to_string(f.kind)),
                                  c ? report::Cell(std::string()) : report::Cell(static_cast<long long>(f.j)),
                                  std::string(to_string(f.status)),
                                  f.energy,
                                  c ? report::Cell(std::string()) : report::Cell(f.minimal_period),
                                  f.amplitude,
                                  f.residuals.closure};
    if (derdzinski) row.emplace_back(f.residuals.codazzi);
    row.emplace_back(f.residuals.ode_fd);
    if (derdzinski) {
      row.emplace_back(std::string(f.residuals.parallel ? "parallel" : "non_parallel"));
      row.emplace_back(f.residuals.conformal_length);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

json census_json(const MetricCensus& m, bool derdzinski) {
  json families = json::array();
  for (const auto& f : m.families) families.push_back(family_json(f, derdzinski));
  return json{{"T", m.length},
              {"count", m.count},
              {"bracket_k", m.bracket_k},
              {"linear_period", m.linear_period},
              {"edge_period", m.edge_period},
              {"trend", to_string(m.trend)},
              {"families", families}};
}

std::vector<std::string> census_diagnostics(const MetricCensus& m, double c_top) {
  std::vector<std::string> d;
  for (const auto& f : m.families) {
    if (f.kind == FamilyKind::constant) continue;
    const std::string tag = "family j=" + std::to_string(f.j) + ": ";
    if (f.status != FamilyStatus::verified) d.push_back(tag + to_string(f.status) + (f.note.empty() ? "" : ": " + one_line(f.note)));
    else if (f.energy > 0.999 * c_top) d.push_back(tag + "energy within 0.1% of the near-critical cutoff");
  }
  if (m.trend == PeriodTrend::decreasing)
    d.push_back("the period map decreases with energy; families exist for minimal periods below the linear period");
  if (m.trend == PeriodTrend::non_monotone) d.push_back("the sampled period map is not monotone");
  if (m.count != m.bracket_k)
    d.push_back("count " + std::to_string(m.count) + " differs from the bracket index k = " +
                std::to_string(m.bracket_k) + " (the period map is bounded by the edge period " +
                report::format_double(m.edge_period) + ")");
  return d;
}

Output cmd_census(const Options& o) {
  const ModelParams p = model(o);
  require_length(o);
  const CensusOptions copts = census_options(o);
  const MetricCensus m = census(p, o.length, copts);
  Output out;
  out.envelope.command = "census";
  out.envelope.params_echo = model_echo(o);
  out.envelope.params_echo["length"] = o.length;
  merge(out.envelope.params_echo, tolerance_echo(o, true));
  out.envelope.data = census_json(m, true);
  out.envelope.diagnostics = census_diagnostics(m, copts.period.energy_cutoff * derive_params(p).c0);
  out.table = family_table(m, true);
  out.has_table = true;
  return out;
}

Output cmd_yamabe(const Options& o) {
  require_length(o);
  const CensusOptions copts = census_options(o);
  const YamabeSystem ys = yamabe_system(o.n);
  const MetricCensus m = yamabe_census(o.n, o.length, copts);
  Output out;
  out.envelope.command = "yamabe";
  out.envelope.params_echo = json{{"n", o.n}, {"length", o.length}};
  merge(out.envelope.params_echo, tolerance_echo(o, true));
  out.envelope.data = json{{"threshold", yamabe_threshold(o.n)},
                           {"constant_solution", ys.constant_solution},
                           {"c_max", ys.system.c_max()},
                           {"census", census_json(m, false)}};
  out.envelope.diagnostics = census_diagnostics(m, copts.period.energy_cutoff * ys.system.c_max());
  out.table = family_table(m, false);
  out.has_table = true;
  return out;
}

// ---- solve / verify -------------------------------------------------------

Output cmd_solve(const Options& o) {
  const ModelParams p = model(o);
  require_length(o);
  const CensusOptions copts = census_options(o);
  if (o.family < 0) throw ParameterError("--family must be 0 (constant) or a positive divisor index");
  double c = 0.0;
  if (o.family > 0) {
    const DerivedParams d = derive_params(p);
    c = energy_for_period(normalized_system(p.n), d.beta * o.length / o.family, copts.period);
  }
  const SolvedProfile solved = solve_profile(p, c, o.length, copts.samples, copts);
  if (!(solved.closure <= copts.closure_tol)) {
    std::ostringstream os;
    os << "family j=" << o.family << " re-integrates with closure distance " << solved.closure;
    throw ClosureError(os.str(), solved.closure);
  }
  const SolutionProfile& prof = solved.profile;
  Output out;
  out.envelope.command = "solve";
  out.envelope.params_echo = model_echo(o);
  out.envelope.params_echo["length"] = o.length;
  out.envelope.params_echo["family"] = o.family;
  merge(out.envelope.params_echo, tolerance_echo(o, true));
  out.table.header = {"t", "h", "h1", "h2", "h3", "q", "q1", "q2", "q3"};
  for (std::size_t i = 0; i < prof.size(); ++i)
    out.table.rows.push_back(
        {prof.t[i], prof.h[i], prof.h1[i], prof.h2[i], prof.h3[i], prof.q[i], prof.q1[i], prof.q2[i], prof.q3[i]});
  out.has_table = true;
  json columns = json::object();
  for (std::size_t k = 0; k < out.table.header.size(); ++k) {
    json col = json::array();
    for (const auto& row : out.table.rows) col.push_back(std::get<double>(row[k]));
    columns[out.table.header[k]] = std::move(col);
  }
  out.envelope.data = json{{"family", o.family},
                           {"c", c},
                           {"closure", solved.closure},
                           {"energy_drift", solved.drift},
                           {"profile", columns}};
  return out;
}

Output cmd_verify(const Options& o) {
  const ModelParams p = model(o);
  if (o.profile.empty()) throw ParameterError("verify needs --profile");
  std::ifstream in(o.profile);
  if (!in) throw IoError("cannot open profile file '" + o.profile + "'");
  const SolutionProfile prof = report::read_profile_csv(in, p);
  const RicciDerivativeFields fields = ricci_derivatives(prof);
  const OdeResidual ode = ode_residual(prof);
  const ParallelismVerdict par = parallelism_test(prof, o.parallel_tol);
  std::vector<double> psi(prof.size());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = 2.0 / p.n * std::log(prof.h[i]);
  const CodazziTensorFields b = codazzi_tensor_fields(prof.t, psi, 1.0, p.n);
  const double harmonic = harmonic_residual(prof);
  const double conformal = conformal_length(prof);
  const char* verdict = par.verdict == Parallelism::parallel ? "parallel" : "non_parallel";

  Output out;
  out.envelope.command = "verify";
  out.envelope.params_echo = model_echo(o);
  out.envelope.params_echo["profile"] = o.profile;
  out.envelope.params_echo["parallel_tol"] = o.parallel_tol;
  out.envelope.data = json{
      {"samples", prof.size()},
      {"length", prof.length},
      {"harmonic_residual", harmonic},
      {"ode_residual", {{"stored", ode.stored}, {"finite_difference", ode.finite_difference}}},
      {"ricci_derivative_sup", {{"rho_000", fields.sup_000},
                                {"rho_0ij", fields.sup_0ij},
                                {"rho_i0j", fields.sup_i0j},
                                {"codazzi", fields.sup_codazzi}}},
      {"parallelism", {{"verdict", verdict},
                       {"sup_norm", par.sup_norm},
                       {"flow_condition", par.flow_condition},
                       {"scalar_condition", par.scalar_condition}}},
      {"conformal_length", conformal},
      {"codazzi_tensor", {{"trace", 1.0},
                          {"distinct", b.distinct},
                          {"trace_defect", b.trace_defect},
                          {"codazzi_defect", b.codazzi_defect}}}};
  out.table = {{"harmonic_residual", "ode_residual_stored", "ode_residual_fd", "parallel", "parallel_sup",
                "conformal_length"},
               {{harmonic, ode.stored, ode.finite_difference, std::string(verdict), par.sup_norm, conformal}}};
  out.has_table = true;
  return out;
}

// ---- bifurcations ---------------------------------------------------------

Output cmd_bifurcations(const Options& o) {
  if (o.k_max < 1) throw ParameterError("--k-max must be at least 1");
  const bool have_c = !std::isnan(o.constant);
  if (!have_c && !o.yamabe) throw ParameterError("bifurcations needs --constant and/or --yamabe");
  if (have_c && !(o.constant > 0.0)) throw ParameterError("--constant must be positive");
  std::optional<DerivedParams> d;
  if (have_c && o.n != 0 && !std::isnan(o.scalar_curvature)) d = derive_params(model(o));
  if (o.yamabe) yamabe_threshold(o.n);

  Output out;
  out.envelope.command = "bifurcations";
  out.envelope.params_echo = json{{"k_max", o.k_max}, {"yamabe", o.yamabe}};
  if (have_c) out.envelope.params_echo["constant"] = o.constant;
  if (o.n != 0) out.envelope.params_echo["n"] = o.n;
  if (d) out.envelope.params_echo["scalar_curvature"] = o.scalar_curvature;
  out.table.header = {"k"};
  if (have_c) out.table.header.push_back("length");
  if (d) out.table.header.push_back("constant_value");
  if (o.yamabe) out.table.header.push_back("yamabe_length");
  for (int k = 1; k <= o.k_max; ++k) {
    std::vector<report::Cell> row{static_cast<long long>(k)};
    if (have_c) row.emplace_back(2.0 * std::numbers::pi * k / std::sqrt(o.constant));
    if (d) row.emplace_back(d->alpha);
    if (o.yamabe) row.emplace_back(k * yamabe_threshold(o.n));
    out.table.rows.push_back(std::move(row));
  }
  out.has_table = true;
  return out;
}

// ---- option wiring --------------------------------------------------------

struct Command {
  CLI::App* app;
  Output (*handler)(const Options&);
  const char* default_format;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_model(CLI::App* sub, Options& o, bool required = true) {
  sub->add_option("--n", o.n, "Total dimension n >= 3")->required(required);
  sub->add_option("--scalar-curvature", o.scalar_curvature, "Scalar curvature R of the fiber")->required(required);
  sub->add_option("--constant", o.constant, "Constant C > 0 of the reduced ODE")->required(required);
}

void add_period_tols(CLI::App* sub, Options& o) {
  sub->add_option("--quad-tol", o.quad_tol, "Relative quadrature tolerance")->capture_default_str();
  sub->add_option("--energy-cutoff", o.energy_cutoff, "Largest admissible energy as a fraction of c_max")
      ->capture_default_str();
}

void add_census_tols(CLI::App* sub, Options& o) {
  add_period_tols(sub, o);
  sub->add_option("--closure-tol", o.closure_tol, "Orbit closure tolerance")->capture_default_str();
  sub->add_option("--parallel-tol", o.parallel_tol, "Parallel-Ricci threshold")->capture_default_str();
  sub->add_option("--samples", o.samples, "Grid intervals over one circle length")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical laboratory for harmonic-curvature warped products", "wmlab"};
  app.require_subcommand(1);
  std::vector<Command> commands;

  auto* params = app.add_subcommand("params", "Derived constants for (n, R, C)");
  add_model(params, o);
  add_format(params, o);
  commands.push_back({params, cmd_params, "json"});

  auto* table = app.add_subcommand("period-table", "Minimal period over a set of normalized energies");
  table->add_option("--n", o.n, "Dimension n >= 3")->required();
  table->add_option("--energies", o.energies, "Comma separated energies")->delimiter(',');
  table->add_option("--grid", o.grid, "Number of log-spaced energies up to the cutoff");
  add_period_tols(table, o);
  add_format(table, o);
  commands.push_back({table, cmd_period_table, "csv"});

  auto* cert = app.add_subcommand("certificate", "Sufficient monotonicity condition on a grid");
  cert->add_option("--n", o.n, "Dimension n >= 3")->required();
  cert->add_option("--grid-min", o.grid_min, "Smallest abscissa")->capture_default_str();
  cert->add_option("--grid-max", o.grid_max, "Largest abscissa")->capture_default_str();
  cert->add_option("--grid-count", o.grid_count, "Number of abscissae")->capture_default_str();
  add_format(cert, o);
  commands.push_back({cert, cmd_certificate, "json"});

  auto* cen = app.add_subcommand("census", "Periodic solution families on a circle of length T");
  add_model(cen, o);
  cen->add_option("--length", o.length, "Circle length T")->required();
  add_census_tols(cen, o);
  add_format(cen, o);
  commands.push_back({cen, cmd_census, "json"});

  auto* solve = app.add_subcommand("solve", "Sampled profile of one census family");
  add_model(solve, o);
  solve->add_option("--length", o.length, "Circle length T")->required();
  solve->add_option("--family", o.family, "Divisor index j (0 for the constant solution)")->capture_default_str();
  add_census_tols(solve, o);
  add_format(solve, o);
  commands.push_back({solve, cmd_solve, "csv"});

  auto* verify = app.add_subcommand("verify", "Curvature residuals of a profile file");
  add_model(verify, o);
  verify->add_option("--profile", o.profile, "Profile CSV with columns t,h (optionally h1,h2,h3)")->required();
  verify->add_option("--parallel-tol", o.parallel_tol, "Parallel-Ricci threshold")->capture_default_str();
  add_format(verify, o);
  commands.push_back({verify, cmd_verify, "json"});

  auto* yam = app.add_subcommand("yamabe", "Threshold and census for the pseudo-cylindric Yamabe problem");
  yam->add_option("--n", o.n, "Dimension n >= 3")->required();
  yam->add_option("--length", o.length, "Circle length T")->required();
  add_census_tols(yam, o);
  add_format(yam, o);
  commands.push_back({yam, cmd_yamabe, "json"});

  auto* bif = app.add_subcommand("bifurcations", "Circle lengths where nonconstant branches appear");
  add_model(bif, o, false);
  bif->add_option("--k-max", o.k_max, "Number of branches")->capture_default_str();
  bif->add_flag("--yamabe", o.yamabe, "Also list 2 pi k / sqrt(n-2)");
  add_format(bif, o);
  commands.push_back({bif, cmd_bifurcations, "csv"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: parameter-validation: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      const Output result = c.handler(o);
      emit(result, o.format.empty() ? c.default_format : o.format, out);
      if (result.status != 0) err << result.error_line << '\n';
      return result.status;
    }
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.reason() << ": " << one_line(e.what()) << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return 3;
  }
}

}  // namespace wm::cli
