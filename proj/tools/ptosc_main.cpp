// ptosc: deterministic command-line front end for the shifted-contour
// oscillator library. Emits CSV (default) or JSON rows for offline
// analysis; every run with the same configuration produces byte-identical
// output.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-quality
// failure (quadrature truncation, filtered eigensolve coming up short,
// degenerate normalization).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptosc/contour_solver.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/model.hpp"
#include "ptosc/perturbation.hpp"
#include "ptosc/wavefunction.hpp"

#ifndef PTOSC_VERSION
#define PTOSC_VERSION "0.0.0"
#endif

namespace {

using ptosc::LevelIndex;
using ptosc::ModelParams;

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cell_to_string(const Cell& cell) {
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell))
    return format_double(std::get<double>(cell));
  return std::get<std::string>(cell);
}

struct RunConfig {
  std::string command;
  std::optional<double> alpha;
  std::optional<double> coupling;
  double shift = 1.0;
  std::optional<double> half_width;  // defaulted per alpha when absent
  int points = 1500;
  std::string scheme = "fd4";
  int levels = 8;
  int basis = 40;
  double quad_width = 12.0;
  int quad_points = 4000;
  double alpha_min = 0.1;
  double alpha_max = 3.0;
  double alpha_step = 0.1;
  int n_ceiling = 5;
  bool numeric = false;
  std::string format = "csv";
  std::string out_path;
  bool quiet = false;

  double resolved_alpha() const {
    return alpha ? *alpha : ptosc::alpha_from_coupling(*coupling);
  }
  ModelParams params() const {
    return ModelParams::from_alpha(resolved_alpha(), shift);
  }
  ptosc::Discretization grid() const {
    const double width =
        half_width ? *half_width : (resolved_alpha() >= 3.0 ? 12.0 : 10.0);
    return ptosc::Discretization{
        width, points,
        scheme == "fd2" ? ptosc::Scheme::FD2 : ptosc::Scheme::FD4};
  }
  ptosc::QuadratureSpec quadrature() const {
    return ptosc::QuadratureSpec{quad_width, quad_points,
                                 ptosc::QuadratureRule::Trapezoid};
  }

  std::vector<std::pair<std::string, std::string>> echo() const {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("command", command);
    if (command != "crossings" && command != "scan") {
      kv.emplace_back("alpha", format_double(resolved_alpha()));
      kv.emplace_back("G",
                      format_double(ptosc::coupling_from_alpha(resolved_alpha())));
    }
    if (command == "solve" || (command == "scan" && numeric)) {
      kv.emplace_back("c", format_double(shift));
      kv.emplace_back("L", format_double(grid().half_width));
      kv.emplace_back("N", std::to_string(points));
      kv.emplace_back("scheme", scheme);
    } else if (command == "perturb") {
      kv.emplace_back("c", format_double(shift));
      kv.emplace_back("basis", std::to_string(basis));
      kv.emplace_back("quad_width", format_double(quad_width));
      kv.emplace_back("quad_points", std::to_string(quad_points));
    } else if (command == "zeros") {
      kv.emplace_back("c", format_double(shift));
    }
    if (command == "scan") {
      kv.emplace_back("alpha_min", format_double(alpha_min));
      kv.emplace_back("alpha_max", format_double(alpha_max));
      kv.emplace_back("alpha_step", format_double(alpha_step));
      kv.emplace_back("numeric", numeric ? "1" : "0");
    }
    if (command == "crossings") {
      kv.emplace_back("alpha_max", format_double(alpha_max));
      kv.emplace_back("n_max", std::to_string(n_ceiling));
    }
    if (command != "crossings") kv.emplace_back("k", std::to_string(levels));
    return kv;
  }
};

void write_csv(const RunConfig& config, const Table& table, std::ostream& os) {
  os << "# ptosc " << PTOSC_VERSION << " schema=1";
  for (const auto& [key, value] : config.echo()) os << ' ' << key << '=' << value;
  os << '\n';
  for (const auto& note : table.notes) os << "# note: " << note << '\n';
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << cell_to_string(row[i]) << (i + 1 < row.size() ? "," : "");
    os << '\n';
  }
}

void write_json(const RunConfig& config, const Table& table,
                std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["tool"] = "ptosc";
  doc["version"] = PTOSC_VERSION;
  doc["schema"] = 1;
  nlohmann::ordered_json cfg;
  for (const auto& [key, value] : config.echo()) cfg[key] = value;
  doc["config"] = cfg;
  if (!table.notes.empty()) doc["notes"] = table.notes;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      if (std::holds_alternative<long long>(cell))
        obj[table.columns[i]] = std::get<long long>(cell);
      else if (std::holds_alternative<double>(cell))
        obj[table.columns[i]] = std::get<double>(cell);
      else
        obj[table.columns[i]] = std::get<std::string>(cell);
    }
    doc["rows"].push_back(obj);
  }
  os << doc.dump(2) << '\n';
}

void emit(const RunConfig& config, const Table& table) {
  const auto writer = [&](std::ostream& os) {
    if (config.format == "json")
      write_json(config, table, os);
    else
      write_csv(config, table, os);
  };
  if (config.out_path.empty()) {
    writer(std::cout);
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot open output file " + config.out_path);
    writer(file);
  }
}

void info(const RunConfig& config, const std::string& message) {
  if (!config.quiet) std::cerr << "ptosc: " << message << '\n';
}

Table run_spectrum(const RunConfig& config) {
  Table table;
  table.columns = {"q", "n", "E"};
  for (const auto& level : ptosc::spectrum(config.resolved_alpha(), config.levels))
    table.row({static_cast<long long>(level.level.q),
               static_cast<long long>(level.level.n), level.energy});
  return table;
}

Table run_solve(const RunConfig& config) {
  const auto params = config.params();
  const auto grid = config.grid();
  info(config, "dense eigensolve, N=" + std::to_string(grid.points));
  const auto result = ptosc::solve_spectrum(params, grid, config.levels);
  const auto report = ptosc::match_exact(result, params);

  Table table;
  table.columns = {"re_lambda", "im_lambda", "residual", "boundary_weight",
                   "q",         "n",         "E_exact",  "abs_error"};
  for (size_t i = 0; i < result.eigenvalues.size(); ++i) {
    const auto& entry = report.entries[i];
    table.row({result.eigenvalues[i].real(), result.eigenvalues[i].imag(),
               result.residuals[i], result.boundary_weights[i],
               static_cast<long long>(entry.level.q),
               static_cast<long long>(entry.level.n), entry.exact_energy,
               entry.abs_error});
  }
  if (report.ambiguous)
    for (const auto& note : report.notes) table.notes.push_back(note);
  return table;
}

Table run_zeros(const RunConfig& config) {
  Table table;
  table.columns = {"q", "n", "kind", "index", "re", "im"};
  const auto params = config.params();
  for (const auto& level : ptosc::spectrum(params.alpha(), config.levels)) {
    const ptosc::WaveFunctionSpec spec{level.level, params,
                                       ptosc::Normalization::Raw};
    const auto roots = ptosc::nodal_zeros(spec);
    const long long q = level.level.q, n = level.level.n;
    for (size_t i = 0; i < roots.poly_roots.size(); ++i)
      table.row({q, n, std::string("z_root"), static_cast<long long>(i),
                 roots.poly_roots[i].real(), roots.poly_roots[i].imag()});
    for (size_t i = 0; i < roots.x_zeros.size(); ++i)
      table.row({q, n, std::string("x_zero"), static_cast<long long>(i),
                 roots.x_zeros[i].real(), roots.x_zeros[i].imag()});
    if (roots.prefactor_zero)
      table.row({q, n, std::string("prefactor"), 0LL,
                 roots.prefactor_zero->real(), roots.prefactor_zero->imag()});
  }
  return table;
}

Table run_perturb(const RunConfig& config) {
  Table table;
  table.columns = {"q",        "n",  "e1",        "e1_oracle",
                   "e1_error", "e2", "e2_oracle", "e2_delta",  "basis"};
  const auto quad = config.quadrature();
  for (const auto& level : ptosc::spectrum(0.5, config.levels)) {
    const auto idx = level.level;
    const double e1 = ptosc::rs_first_order(idx, config.shift, quad);
    const auto rs2 = ptosc::rs_second_order(idx, config.shift, config.basis, quad);
    const double e1_oracle = -2.0 * idx.q;
    const double e2_oracle = 2.0 * idx.q;
    table.row({static_cast<long long>(idx.q), static_cast<long long>(idx.n),
               e1, e1_oracle, std::abs(e1 - e1_oracle), rs2.value, e2_oracle,
               rs2.basis_delta, static_cast<long long>(rs2.basis_size)});
  }
  return table;
}

Table run_crossings(const RunConfig& config) {
  Table table;
  table.columns = {"alpha", "q_upper", "n_upper", "q_lower", "n_lower", "E"};
  for (const auto& crossing :
       ptosc::crossings(config.alpha_max, config.n_ceiling)) {
    for (const auto& [upper, lower] : crossing.pairs)
      table.row({static_cast<long long>(crossing.alpha),
                 static_cast<long long>(upper.q),
                 static_cast<long long>(upper.n),
                 static_cast<long long>(lower.q),
                 static_cast<long long>(lower.n),
                 ptosc::exact_energy(upper, crossing.alpha)});
  }
  return table;
}

Table run_scan(const RunConfig& config) {
  if (!(config.alpha_step > 0.0))
    throw CLI::ValidationError("--alpha-step must be positive");
  if (config.alpha_max < config.alpha_min)
    throw CLI::ValidationError("--alpha-max must be >= --alpha-min");

  Table table;
  table.columns = {"alpha", "q", "n", "E"};
  if (config.numeric) {
    table.columns.push_back("re_lambda");
    table.columns.push_back("abs_error");
  }
  const int steps = static_cast<int>(
      std::floor((config.alpha_max - config.alpha_min) / config.alpha_step + 1e-9));
  for (int s = 0; s <= steps; ++s) {
    const double alpha = config.alpha_min + s * config.alpha_step;
    const auto levels = ptosc::spectrum(alpha, config.levels);
    if (!config.numeric) {
      for (const auto& level : levels)
        table.row({alpha, static_cast<long long>(level.level.q),
                   static_cast<long long>(level.level.n), level.energy});
      continue;
    }
    const auto params = ModelParams::from_alpha(alpha, config.shift);
    ptosc::Discretization grid = config.grid();
    if (!config.half_width && alpha >= 3.0) grid.half_width = 12.0;
    const auto result = ptosc::solve_spectrum(params, grid, config.levels);
    const auto report = ptosc::match_exact(result, params);
    for (size_t i = 0; i < report.entries.size(); ++i) {
      const auto& entry = report.entries[i];
      table.row({alpha, static_cast<long long>(entry.level.q),
                 static_cast<long long>(entry.level.n), entry.exact_energy,
                 entry.eigenvalue.real(), entry.abs_error});
    }
  }
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactly solvable oscillator with a complex-shifted "
               "inverse-square core: closed form, contour eigensolve, and "
               "perturbative cross-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PTOSC_VERSION);

  RunConfig config;

  auto add_model_options = [&](CLI::App* cmd) {
    auto* alpha_opt =
        cmd->add_option("--alpha", config.alpha, "core parameter alpha > 0");
    auto* g_opt = cmd->add_option("--G", config.coupling,
                                  "core coupling G = alpha^2 - 1/4");
    alpha_opt->excludes(g_opt);
    g_opt->excludes(alpha_opt);
    cmd->add_option("--c", config.shift, "contour shift c >= 0")
        ->capture_default_str();
    cmd->add_option("-k,--levels", config.levels, "number of levels")
        ->capture_default_str();
  };
  auto add_grid_options = [&](CLI::App* cmd) {
    cmd->add_option("--L", config.half_width,
                    "grid half-width (default 10, or 12 for alpha >= 3)");
    cmd->add_option("--N", config.points, "number of interior grid points")
        ->capture_default_str();
    cmd->add_option("--scheme", config.scheme, "finite-difference order")
        ->check(CLI::IsMember({"fd2", "fd4"}))
        ->capture_default_str();
  };
  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", config.out_path, "output path (default stdout)");
    cmd->add_flag("--quiet", config.quiet, "suppress progress notes");
  };
  auto require_model = [&](CLI::App* cmd) {
    cmd->parse_complete_callback([&config, cmd]() {
      if (cmd->count("--alpha") == 0 && cmd->count("--G") == 0)
        throw CLI::RequiredError("--alpha or --G");
    });
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "closed-form levels, ascending");
  add_model_options(spectrum);
  add_output_options(spectrum);
  require_model(spectrum);

  CLI::App* solve = app.add_subcommand(
      "solve", "finite-difference eigensolve with exact-level matching");
  add_model_options(solve);
  add_grid_options(solve);
  add_output_options(solve);
  require_model(solve);

  CLI::App* zeros = app.add_subcommand(
      "zeros", "nodal zeros of the lowest wave functions");
  add_model_options(zeros);
  add_output_options(zeros);
  require_model(zeros);

  CLI::App* perturb = app.add_subcommand(
      "perturb", "first and second perturbative coefficients vs oracle");
  perturb->add_option("--c", config.shift, "contour shift c > 0")
      ->capture_default_str();
  perturb->add_option("-k,--levels", config.levels, "number of levels")
      ->capture_default_str();
  perturb->add_option("--basis", config.basis, "intermediate-state count")
      ->capture_default_str();
  perturb->add_option("--quad-width", config.quad_width,
                      "quadrature half-width")
      ->capture_default_str();
  perturb->add_option("--quad-points", config.quad_points,
                      "quadrature point count")
      ->capture_default_str();
  add_output_options(perturb);

  CLI::App* crossings = app.add_subcommand(
      "crossings", "unavoided level crossings at integer alpha");
  crossings->add_option("--alpha-max", config.alpha_max,
                        "largest alpha to search")
      ->capture_default_str();
  crossings->add_option("--n-max", config.n_ceiling,
                        "largest n in the reported pairs")
      ->capture_default_str();
  add_output_options(crossings);

  CLI::App* scan = app.add_subcommand(
      "scan", "alpha sweep of the analytic (and optionally numeric) levels");
  scan->add_option("--alpha-min", config.alpha_min, "sweep start")
      ->capture_default_str();
  scan->add_option("--alpha-max", config.alpha_max, "sweep end")
      ->capture_default_str();
  scan->add_option("--alpha-step", config.alpha_step, "sweep step")
      ->capture_default_str();
  scan->add_flag("--numeric", config.numeric,
                 "also run the eigensolver at every sweep point");
  scan->add_option("--c", config.shift, "contour shift c >= 0")
      ->capture_default_str();
  scan->add_option("-k,--levels", config.levels, "number of levels")
      ->capture_default_str();
  add_grid_options(scan);
  add_output_options(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Table table;
    if (spectrum->parsed()) {
      config.command = "spectrum";
      table = run_spectrum(config);
    } else if (solve->parsed()) {
      config.command = "solve";
      table = run_solve(config);
    } else if (zeros->parsed()) {
      config.command = "zeros";
      table = run_zeros(config);
    } else if (perturb->parsed()) {
      config.command = "perturb";
      table = run_perturb(config);
    } else if (crossings->parsed()) {
      config.command = "crossings";
      table = run_crossings(config);
    } else if (scan->parsed()) {
      config.command = "scan";
      table = run_scan(config);
    }
    emit(config, table);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "ptosc: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const ptosc::InsufficientResolutionError& e) {
    std::cerr << "ptosc: numerical quality failure: " << e.what() << '\n';
    return 3;
  } catch (const ptosc::QuadratureTruncationError& e) {
    std::cerr << "ptosc: numerical quality failure: " << e.what() << '\n';
    return 3;
  } catch (const ptosc::NormDegeneracyError& e) {
    std::cerr << "ptosc: numerical quality failure: " << e.what() << '\n';
    return 3;
  } catch (const ptosc::NonConvergenceError& e) {
    std::cerr << "ptosc: numerical quality failure: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "ptosc: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ptosc: error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
