// Scenario-driven CLI: computes constrained best responses, two-trader
// equilibria and closed-form reference strategies from a JSON config, and
// writes CSV/JSON artifacts for external plotting.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "posbuild/analysis.hpp"
#include "posbuild/closed_forms.hpp"
#include "posbuild/constraints.hpp"
#include "posbuild/cost.hpp"
#include "posbuild/equilibrium.hpp"
#include "posbuild/qp.hpp"
#include "posbuild/strategy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace posbuild;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitSolverError = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed 12-significant-digit formatting so identical runs give identical bytes.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing required key '" + key + "'");
  if (!j[key].is_number()) throw ConfigError("key '" + key + "' must be a number");
  return j[key].get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError("key '" + key + "' must be a number");
  return j[key].get<double>();
}

int int_or(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ConfigError("key '" + key + "' must be an integer");
  return j[key].get<int>();
}

std::function<double(double)> parse_bound(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("constraint missing bound spec '" + key + "'");
  const json& b = j[key];
  if (b.is_number()) {
    const double v = b.get<double>();
    return [v](double) { return v; };
  }
  if (!b.is_object() || !b.contains("type"))
    throw ConfigError("bound '" + key + "' must be a number or an object with 'type'");
  const std::string type = b["type"].get<std::string>();
  if (type == "constant") {
    const double v = require_number(b, "value");
    return [v](double) { return v; };
  }
  if (type == "linear") {
    const double offset = number_or(b, "offset", 0.0);
    const double slope = number_or(b, "slope", 1.0);
    return [offset, slope](double t) { return offset + slope * t; };
  }
  if (type == "risk_averse" || type == "eager") {
    PassiveSpec spec;
    spec.kind = (type == "risk_averse") ? PassiveKind::risk_averse : PassiveKind::eager;
    spec.sigma = require_number(b, "sigma");
    return passive(spec).value;
  }
  throw ConfigError("unknown bound type '" + type + "' in '" + key + "'");
}

std::vector<ConstraintSpec> parse_constraints(const json& cfg, const std::string& key) {
  std::vector<ConstraintSpec> out;
  if (!cfg.contains(key)) return out;
  if (!cfg[key].is_array()) throw ConfigError("key '" + key + "' must be an array");
  for (const json& c : cfg[key]) {
    if (!c.is_object() || !c.contains("kind"))
      throw ConfigError("entries of '" + key + "' must be objects with 'kind'");
    const std::string kind = c["kind"].get<std::string>();
    const int grid_k = int_or(c, "grid_k", 200);
    const TimeGrid grid = make_grid(grid_k, number_or(c, "t_start", 0.0),
                                    number_or(c, "t_end", 1.0));
    if (kind == "overbuy") {
      out.push_back(ConstraintSpec::make_overbuy(require_number(c, "rho"), grid));
    } else if (kind == "channel") {
      out.push_back(ConstraintSpec::make_channel(parse_bound(c, "lower"),
                                                 parse_bound(c, "upper"), grid));
    } else if (kind == "end_strategy") {
      out.push_back(ConstraintSpec::make_end_strategy(require_number(c, "t_star"),
                                                      require_number(c, "c"), grid_k));
    } else if (kind == "short_sell") {
      out.push_back(ConstraintSpec::make_short_sell(require_number(c, "floor"), grid));
    } else if (kind == "no_sell") {
      out.push_back(ConstraintSpec::make_no_sell(grid));
    } else if (kind == "path_upper") {
      out.push_back(ConstraintSpec::path_upper(parse_bound(c, "bound"), grid));
    } else if (kind == "path_lower") {
      out.push_back(ConstraintSpec::path_lower(parse_bound(c, "bound"), grid));
    } else {
      throw ConfigError("unknown constraint kind '" + kind + "' in '" + key + "'");
    }
  }
  return out;
}

struct Adversary {
  Curve curve;                          // unit curve
  std::optional<Curve> best_response;   // closed-form BR of the unit trader, if known
};

Adversary parse_adversary(const json& cfg, double kappa, double lambda,
                          const fs::path& config_dir) {
  Adversary adv;
  if (!cfg.contains("adversary")) {
    adv.curve = passive({PassiveKind::risk_neutral, 0.0});
    adv.best_response = best_response_risk_neutral(kappa, lambda);
    return adv;
  }
  const json& a = cfg["adversary"];
  if (!a.is_object() || !a.contains("kind"))
    throw ConfigError("key 'adversary' must be an object with 'kind'");
  const std::string kind = a["kind"].get<std::string>();
  if (kind == "risk_neutral") {
    adv.curve = passive({PassiveKind::risk_neutral, 0.0});
    adv.best_response = best_response_risk_neutral(kappa, lambda);
  } else if (kind == "risk_averse") {
    const double sigma = require_number(a, "sigma");
    adv.curve = passive({PassiveKind::risk_averse, sigma});
    adv.best_response = best_response_risk_averse(kappa, lambda, sigma);
  } else if (kind == "eager") {
    const double sigma = require_number(a, "sigma");
    adv.curve = passive({PassiveKind::eager, sigma});
    adv.best_response = best_response_eager(kappa, lambda, sigma);
  } else if (kind == "equilibrium") {
    auto [a_eq, b_eq] = equilibrium_pair(kappa, lambda);
    adv.curve = b_eq;
    adv.best_response = a_eq;
  } else if (kind == "coefficients") {
    if (!a.contains("file")) throw ConfigError("adversary kind 'coefficients' needs 'file'");
    const fs::path path = config_dir / a["file"].get<std::string>();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open adversary coefficient file '" + path.string() + "'");
    json coeffs_json;
    in >> coeffs_json;
    if (!coeffs_json.is_array()) throw ConfigError("adversary 'file' must hold a JSON array");
    auto coeffs = coeffs_json.get<std::vector<double>>();
    StrategyCoeffs s{Eigen::Map<Eigen::VectorXd>(coeffs.data(),
                                                 static_cast<long>(coeffs.size()))};
    adv.curve = Curve{[s](double t) { return reconstruct(s, t); },
                      [s](double t) { return derivative_at(s, t); }};
  } else {
    throw ConfigError("unknown adversary kind '" + kind + "'");
  }
  return adv;
}

json params_json(double kappa, double lambda, int n_terms, double gamma, double tolerance,
                 int max_iterations) {
  return json{{"kappa", kappa},   {"lambda", lambda},       {"n_terms", n_terms},
              {"gamma", gamma},   {"tolerance", tolerance}, {"max_iterations", max_iterations}};
}

json solver_json(const SolverReport& rep) {
  static const char* names[] = {"optimal", "infeasible", "max_iterations", "numeric_failure"};
  return json{{"status", names[static_cast<int>(rep.status)]},
              {"iterations", rep.iterations},
              {"primal_residual", rep.primal_residual},
              {"dual_residual", rep.dual_residual},
              {"complementarity", rep.complementarity},
              {"objective", rep.objective}};
}

const char* eq_status_name(EqStatus s) {
  switch (s) {
    case EqStatus::converged: return "converged";
    case EqStatus::diverged: return "diverged";
    case EqStatus::max_iterations: return "max_iterations";
    case EqStatus::qp_failure: return "qp_failure";
  }
  return "unknown";
}

void write_strategies_csv(const fs::path& dir, int grid_points,
                          const std::function<double(double)>& a,
                          const std::function<double(double)>& b,
                          const std::optional<Curve>& a_closed,
                          const std::optional<Curve>& b_closed) {
  std::ofstream out(dir / "strategies.csv");
  out << "t,a,b";
  if (a_closed && b_closed) out << ",a_closed_form,b_closed_form";
  out << "\n";
  for (int i = 0; i < grid_points; ++i) {
    const double t = (i == grid_points - 1) ? 1.0 : static_cast<double>(i) / (grid_points - 1);
    out << fmt(t) << ',' << fmt(a(t)) << ',' << fmt(b(t));
    if (a_closed && b_closed)
      out << ',' << fmt(a_closed->value(t)) << ',' << fmt(b_closed->value(t));
    out << "\n";
  }
}

void write_state_space_csv(const fs::path& dir, const std::vector<StateSpacePoint>& series) {
  std::ofstream out(dir / "state_space.csv");
  out << "phase,iteration,cost_a,cost_b\n";
  static const char* phase_names[] = {"init", "step_i", "step_ii"};
  for (const StateSpacePoint& p : series)
    out << phase_names[static_cast<int>(p.phase)] << ',' << p.iteration << ','
        << fmt(p.cost_a) << ',' << fmt(p.cost_b) << "\n";
}

void write_coefficients_json(const fs::path& dir, const Eigen::VectorXd& a,
                             const Eigen::VectorXd& b, int n_terms, double kappa,
                             double lambda, double gamma) {
  json j{{"a", std::vector<double>(a.data(), a.data() + a.size())},
         {"b", std::vector<double>(b.data(), b.data() + b.size())},
         {"n_terms", n_terms},
         {"kappa", kappa},
         {"lambda", lambda},
         {"gamma", gamma}};
  std::ofstream(dir / "coefficients.json") << j.dump(2) << "\n";
}

struct CellResult {
  std::string status = "error";
  int iterations = 0;
  double l2_a = 0.0, l2_b = 0.0;
  double cost_a_final = 0.0, cost_b_final = 0.0;
  int exit_code = 0;
};

CellResult run_scenario_json(const json& cfg, const fs::path& out_dir,
                             const fs::path& config_dir, bool quiet) {
  const std::string mode = cfg.contains("mode") ? cfg["mode"].get<std::string>()
                                                : throw ConfigError("missing required key 'mode'");
  const double kappa = require_number(cfg, "kappa");
  const double lambda = require_number(cfg, "lambda");
  const int n_terms = int_or(cfg, "n_terms", 20);
  const double gamma = number_or(cfg, "gamma", 0.8);
  const double tolerance = number_or(cfg, "tolerance", 1e-6);
  const int max_iterations = int_or(cfg, "max_iterations", 100);
  const int grid_points = int_or(cfg, "grid_points_out", 201);

  fs::create_directories(out_dir);
  CellResult cell;
  json report;
  report["mode"] = mode;
  report["params"] = params_json(kappa, lambda, n_terms, gamma, tolerance, max_iterations);

  if (mode == "closed_form") {
    auto [a_eq, b_eq] = equilibrium_pair(kappa, lambda);
    write_strategies_csv(out_dir, grid_points, a_eq.value, b_eq.value, a_eq, b_eq);
    write_state_space_csv(out_dir, {});
    const StrategyCoeffs af = fit_from_function(a_eq.value, n_terms);
    const StrategyCoeffs bf = fit_from_function(b_eq.value, n_terms, lambda);
    write_coefficients_json(out_dir, af.coeffs, bf.coeffs, n_terms, kappa, lambda, gamma);
    report["status"] = "ok";
    cell.status = "ok";
    std::ofstream(out_dir / "report.json") << report.dump(2) << "\n";
    return cell;
  }

  if (mode == "best_response") {
    const Adversary adv = parse_adversary(cfg, kappa, lambda, config_dir);
    const StrategyCoeffs b_fit = fit_from_function(adv.curve.value, n_terms, lambda);
    const QuadraticCost qc = assemble_cost_a(b_fit, kappa, n_terms);
    const ConstraintSystem cs = compile(parse_constraints(cfg, "constraints_a"), n_terms);
    auto [x, rep] = posbuild::solve(qc, cs, {});
    const StrategyCoeffs a_star(x);

    const bool has_closed = adv.best_response.has_value() && cs.rows() == 0;
    std::optional<Curve> a_closed =
        has_closed ? adv.best_response : std::optional<Curve>{};
    std::optional<Curve> b_closed = has_closed ? std::optional<Curve>(adv.curve)
                                               : std::optional<Curve>{};
    write_strategies_csv(
        out_dir, grid_points, [&](double t) { return reconstruct(a_star, t); },
        [&](double t) { return reconstruct(b_fit, t); }, a_closed, b_closed);
    write_state_space_csv(out_dir, {});
    write_coefficients_json(out_dir, a_star.coeffs, b_fit.coeffs, n_terms, kappa, lambda,
                            gamma);
    report["solver"] = solver_json(rep);
    if (adv.best_response) {
      report["l2_a"] = l2_distance([&](double t) { return reconstruct(a_star, t); },
                                   adv.best_response->value);
      cell.l2_a = report["l2_a"].get<double>();
    }
    report["cost_a_final"] = rep.objective;
    cell.cost_a_final = rep.objective;
    const bool ok = rep.status == QpStatus::optimal;
    report["status"] = ok ? "ok" : "solver_failure";
    cell.status = report["status"];
    cell.iterations = rep.iterations;
    cell.exit_code = ok ? 0 : kExitSolverError;
    std::ofstream(out_dir / "report.json") << report.dump(2) << "\n";
    if (!quiet && !ok) std::cerr << "solver failure in best_response scenario\n";
    return cell;
  }

  if (mode == "equilibrium") {
    EquilibriumParams params;
    params.kappa = kappa;
    params.lambda = lambda;
    params.n_terms = n_terms;
    params.gamma = gamma;
    params.tolerance = tolerance;
    params.max_iterations = max_iterations;
    params.constraints_a = parse_constraints(cfg, "constraints_a");
    params.constraints_b = parse_constraints(cfg, "constraints_b");
    if (cfg.contains("adversary")) {
      const Adversary adv = parse_adversary(cfg, kappa, lambda, config_dir);
      params.initial_b = fit_from_function(adv.curve.value, n_terms).coeffs;
    }
    const EquilibriumResult res = run(params);

    auto [a_eq, b_eq] = equilibrium_pair(kappa, lambda);
    write_strategies_csv(
        out_dir, grid_points, [&](double t) { return reconstruct(res.a, t); },
        [&](double t) { return reconstruct(res.b, t); }, a_eq, b_eq);
    write_state_space_csv(out_dir, state_space_series(res.trace));
    write_coefficients_json(out_dir, res.a.coeffs, res.b.coeffs, n_terms, kappa, lambda,
                            gamma);
    const ComparisonReport cmp =
        compare_to_closed_form(res.a, res.b, kappa, lambda, res.trace);
    report["status"] = eq_status_name(res.trace.status);
    report["iterations"] = cmp.iterations;
    report["l2_a"] = cmp.l2_a;
    report["l2_b"] = cmp.l2_b;
    report["cost_a_init"] = cmp.cost_a_init;
    report["cost_b_init"] = cmp.cost_b_init;
    report["cost_a_final"] = cmp.cost_a_final;
    report["cost_b_final"] = cmp.cost_b_final;
    std::ofstream(out_dir / "report.json") << report.dump(2) << "\n";

    cell.status = eq_status_name(res.trace.status);
    cell.iterations = cmp.iterations;
    cell.l2_a = cmp.l2_a;
    cell.l2_b = cmp.l2_b;
    cell.cost_a_final = cmp.cost_a_final;
    cell.cost_b_final = cmp.cost_b_final;
    cell.exit_code = (res.trace.status == EqStatus::converged) ? 0 : kExitSolverError;
    if (!quiet && cell.exit_code != 0)
      std::cerr << "equilibrium run ended with status " << cell.status << "\n";
    return cell;
  }

  throw ConfigError("unknown mode '" + mode + "'");
}

int cmd_solve(const fs::path& config_path, const std::string& out_override, bool quiet) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config '" << config_path.string() << "'\n";
    return kExitConfigError;
  }
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON in '" << config_path.string() << "': " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    fs::path out_dir = out_override.empty()
                           ? fs::path(cfg.value("output", std::string("out")))
                           : fs::path(out_override);
    if (out_dir.is_relative() && out_override.empty())
      out_dir = config_path.parent_path() / out_dir;
    const CellResult res =
        run_scenario_json(cfg, out_dir, config_path.parent_path(), quiet);
    if (!quiet) std::cout << "status: " << res.status << "\n";
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

int cmd_sweep(const fs::path& config_path, const std::string& out_override, bool quiet) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config '" << config_path.string() << "'\n";
    return kExitConfigError;
  }
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON in '" << config_path.string() << "': " << e.what() << "\n";
    return kExitConfigError;
  }
  try {
    fs::path out_dir = out_override.empty()
                           ? fs::path(cfg.value("output", std::string("sweep_out")))
                           : fs::path(out_override);
    if (out_dir.is_relative() && out_override.empty())
      out_dir = config_path.parent_path() / out_dir;
    fs::create_directories(out_dir);

    auto axis = [&](const std::string& key, double fallback) -> std::vector<double> {
      if (cfg.contains("sweep") && cfg["sweep"].contains(key)) {
        if (!cfg["sweep"][key].is_array())
          throw ConfigError("sweep axis '" + key + "' must be an array");
        return cfg["sweep"][key].get<std::vector<double>>();
      }
      return {number_or(cfg, key, fallback)};
    };
    const std::vector<double> kappas = axis("kappa", 1.0);
    const std::vector<double> lambdas = axis("lambda", 1.0);
    const std::vector<double> gammas = axis("gamma", 0.8);
    const std::vector<double> ns = axis("n_terms", 20.0);

    struct Cell {
      double kappa, lambda, gamma;
      int n_terms;
      std::string dir_name;
      CellResult result;
    };
    std::vector<Cell> cells;
    for (double k : kappas)
      for (double l : lambdas)
        for (double g : gammas)
          for (double nd : ns) {
            Cell c{k, l, g, static_cast<int>(nd), "", {}};
            c.dir_name = "cell_k" + fmt(k) + "_l" + fmt(l) + "_g" + fmt(g) + "_N" +
                         std::to_string(c.n_terms);
            cells.push_back(std::move(c));
          }
    const int n_cells = static_cast<int>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_cells; ++i) {
      Cell& c = cells[i];
      json cell_cfg = cfg;
      cell_cfg["kappa"] = c.kappa;
      cell_cfg["lambda"] = c.lambda;
      cell_cfg["gamma"] = c.gamma;
      cell_cfg["n_terms"] = c.n_terms;
      if (!cell_cfg.contains("mode")) cell_cfg["mode"] = "equilibrium";
      if (cell_cfg["mode"] == "sweep") cell_cfg["mode"] = "equilibrium";
      cell_cfg.erase("sweep");
      try {
        c.result = run_scenario_json(cell_cfg, out_dir / c.dir_name,
                                     config_path.parent_path(), true);
      } catch (const std::exception& e) {
        c.result.status = "error";
        if (!quiet) {
#pragma omp critical
          std::cerr << "cell " << c.dir_name << ": " << e.what() << "\n";
        }
      }
    }

    std::ofstream summary(out_dir / "summary.csv");
    summary << "kappa,lambda,gamma,n_terms,status,iterations,l2_a,l2_b,cost_a_final,"
               "cost_b_final\n";
    for (const Cell& c : cells)
      summary << fmt(c.kappa) << ',' << fmt(c.lambda) << ',' << fmt(c.gamma) << ','
              << c.n_terms << ',' << c.result.status << ',' << c.result.iterations << ','
              << fmt(c.result.l2_a) << ',' << fmt(c.result.l2_b) << ','
              << fmt(c.result.cost_a_final) << ',' << fmt(c.result.cost_b_final) << "\n";
    if (!quiet) std::cout << "sweep finished: " << cells.size() << " cells\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained best-response and two-trader equilibrium computations"};
  app.require_subcommand(1);

  std::string config_file;
  std::string out_dir;
  bool quiet = false;
  bool seedless = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_file, "JSON scenario config")->required();
    sub->add_option("--out", out_dir, "output directory (overrides config)");
    sub->add_flag("--quiet", quiet, "suppress progress output");
    // Reserved: all computation is deterministic, there is no RNG to seed.
    sub->add_flag("--seedless", seedless,
                  "reserved flag; rejected (outputs are always deterministic)");
  };
  CLI::App* solve_cmd = app.add_subcommand("solve", "run one scenario");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
  add_common(solve_cmd);
  add_common(sweep_cmd);

  CLI11_PARSE(app, argc, argv);

  if (seedless) {
    std::cerr << "--seedless is reserved: there is no RNG; outputs are deterministic\n";
    return kExitConfigError;
  }

  if (solve_cmd->parsed()) return cmd_solve(config_file, out_dir, quiet);
  return cmd_sweep(config_file, out_dir, quiet);
}
