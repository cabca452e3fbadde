// Command-line front end: measurement construction, optimality diagnosis,
// weight sweeps, group-uniform SRM reports, and reference oracles.
//
// Exit codes: 0 success, 2 input validation, 3 precondition violation,
// 4 group-structure violation.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <srmkit/json_io.hpp>
#include <srmkit/srmkit.hpp>

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string group;
  std::string measurement;
  std::string kind;
  std::string weights_csv;
  bool weights_from_priors = false;
  std::string grid;
  double tol = 0.0;  // 0 selects the per-command default
  double rank_tol = srm::kRankRelTol;
  std::uint64_t seed = 1;
  std::string output;
};

srm::StateSet load_states(const std::string& path, double norm_tol) {
  return srm::load_state_set(srm::read_json_file(path), norm_tol);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw srm::ValidationError("cannot write output file: " + output_path);
  }
  out << text;
}

std::vector<double> parse_csv_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw srm::ValidationError(what + ": cannot parse number '" + item + "'");
    }
  }
  if (values.empty()) {
    throw srm::ValidationError(what + ": empty list");
  }
  return values;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ':')) {
    parts.push_back(item);
  }
  if (parts.size() != 3) {
    throw srm::ValidationError("grid must have the form start:stop:step, got '" + spec + "'");
  }
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    step = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw srm::ValidationError("grid must contain three numbers, got '" + spec + "'");
  }
  if (!(step > 0.0)) {
    throw srm::ValidationError("grid step must be positive");
  }
  if (stop < start) {
    throw srm::ValidationError("grid stop must not precede start");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    double p = start + k * step;
    if (p > stop + step * 1e-9) {
      break;
    }
    grid.push_back(p);
  }
  return grid;
}

srm::RealVector resolve_weights(const Options& opt, const srm::StateSet& states) {
  if (!opt.weights_csv.empty()) {
    std::vector<double> values = parse_csv_list(opt.weights_csv, "--weights");
    if (static_cast<int>(values.size()) != states.size()) {
      throw srm::ValidationError("--weights needs one entry per state, got " +
                                 std::to_string(values.size()) + " for " +
                                 std::to_string(states.size()) + " states");
    }
    return Eigen::Map<const srm::RealVector>(values.data(),
                                             static_cast<Eigen::Index>(values.size()));
  }
  if (opt.weights_from_priors) {
    return states.priors.array().sqrt().matrix();
  }
  throw srm::ValidationError("wlsm requires --weights or --weights-from-priors");
}

double completeness_residual(const srm::StateSet& states, const srm::Measurement& m,
                             double rank_tol) {
  if (m.kind == srm::MeasurementKind::orthogonal_lsm) {
    srm::Matrix eye = srm::Matrix::Identity(m.matrix.cols(), m.matrix.cols());
    return (m.matrix.adjoint() * m.matrix - eye).norm();
  }
  srm::Matrix span = srm::projector(srm::svd(states.states, rank_tol));
  return (m.matrix * m.matrix.adjoint() - span).norm();
}

int cmd_construct(const Options& opt) {
  double norm_tol = opt.tol > 0.0 ? opt.tol : srm::kNormTol;
  srm::StateSet states = load_states(opt.input, norm_tol);
  srm::Measurement m;
  srm::RealVector weights;
  if (opt.kind == "lsm") {
    m = srm::lsm(states, opt.rank_tol);
  } else if (opt.kind == "olsm") {
    m = srm::orthogonal_lsm(states, opt.rank_tol);
  } else if (opt.kind == "srm") {
    m = srm::srm(states, opt.rank_tol);
  } else if (opt.kind == "binary-srm") {
    m = srm::binary_srm(states);
  } else if (opt.kind == "cyclic-srm") {
    m = srm::cyclic_srm(states, states.size(), opt.rank_tol);
  } else if (opt.kind == "wlsm") {
    weights = resolve_weights(opt, states);
    m = srm::wlsm(states, weights, opt.rank_tol);
  } else {
    throw srm::ValidationError("unknown construction kind: " + opt.kind);
  }

  double residual = (m.kind == srm::MeasurementKind::wlsm)
                        ? srm::weighted_residual(states, weights)
                        : srm::residual_error(states, m);
  json summary = {
      {"kind", srm::to_string(m.kind)},
      {"rank", m.rank_used},
      {"residual_error", srm::round_sig12(residual)},
      {"completeness_residual",
       srm::round_sig12(completeness_residual(states, m, opt.rank_tol))},
  };
  std::cout << summary.dump() << "\n";
  if (!opt.output.empty()) {
    srm::write_json_file(opt.output, srm::measurement_to_json(m));
  }
  return 0;
}

int cmd_gu_srm(const Options& opt) {
  double gu_tol = opt.tol > 0.0 ? opt.tol : srm::kGuTol;
  srm::StateSet states = load_states(opt.input, srm::kNormTol);
  srm::GroupSpec group = srm::load_group_spec(srm::read_json_file(opt.group), gu_tol);
  srm::GroupFunction overlaps = srm::check_gu(states, group, gu_tol);
  srm::GroupFunction sigma = srm::gu_singular_values(overlaps, group);
  srm::Measurement m = srm::gu_srm(states, group, opt.rank_tol, gu_tol);
  srm::OptimalityReport report = srm::holevo_conditions(states, m);

  double w0 = sigma.values.real().sum() / static_cast<double>(group.size());
  json sigma_list = json::array();
  for (Eigen::Index i = 0; i < sigma.values.size(); ++i) {
    sigma_list.push_back(srm::round_sig12(sigma.values(i).real()));
  }
  json out = {
      {"kind", srm::to_string(m.kind)},
      {"rank", m.rank_used},
      {"sigma", sigma_list},
      {"w0", srm::round_sig12(w0)},
      {"p_error", srm::round_sig12(1.0 - w0 * w0)},
      {"residual_error", srm::round_sig12(srm::residual_error(states, m))},
      {"completeness_residual",
       srm::round_sig12(completeness_residual(states, m, opt.rank_tol))},
      {"verdict", srm::to_string(report.verdict)},
  };
  if (group.has_generators()) {
    out["symmetry_deviation"] = srm::round_sig12(srm::symmetry_check(m, group));
  }
  std::cout << out.dump() << "\n";
  if (!opt.output.empty()) {
    srm::write_json_file(opt.output, srm::measurement_to_json(m));
  }
  return 0;
}

int cmd_diagnose(const Options& opt) {
  srm::StateSet states = load_states(opt.input, srm::kNormTol);
  srm::Measurement m = srm::load_measurement(srm::read_json_file(opt.measurement));
  if (m.matrix.rows() != states.states.rows() || m.matrix.cols() != states.states.cols()) {
    throw srm::ValidationError(
        "measurement shape " + std::to_string(m.matrix.rows()) + "x" +
        std::to_string(m.matrix.cols()) + " does not match state set " +
        std::to_string(states.dim()) + "x" + std::to_string(states.size()));
  }
  double tol = opt.tol > 0.0 ? opt.tol : srm::kHolevoTol;
  srm::OptimalityReport report = srm::holevo_conditions(states, m, tol);
  json out = srm::report_to_json(report);
  out["completeness_residual"] =
      srm::round_sig12(completeness_residual(states, m, opt.rank_tol));
  out["srm_residual"] = srm::round_sig12(srm::verify_srm_implicit(states, m));
  bool sasaki_applicable =
      states.normalized && srm::numerical_rank(states, opt.rank_tol) == states.size();
  out["sasaki_applicable"] = sasaki_applicable;
  if (sasaki_applicable) {
    srm::SasakiResult sasaki = srm::sasaki_criterion(states, true);
    out["sasaki_spread"] = srm::round_sig12(sasaki.spread);
    out["sasaki_constant_diagonal"] = sasaki.constant_diagonal;
  }
  emit(out.dump() + "\n", opt.output);
  return 0;
}

int cmd_sweep(const Options& opt) {
  srm::StateSet states = load_states(opt.input, srm::kNormTol);
  std::vector<double> grid = parse_grid(opt.grid);
  auto rows = srm::weight_sweep(states, grid);
  std::ostringstream csv;
  csv << "p,E_w_min\n";
  for (const auto& [p, value] : rows) {
    csv << srm::format_sig12(p) << "," << srm::format_sig12(value) << "\n";
  }
  emit(csv.str(), opt.output);
  return 0;
}

int cmd_oracle(const Options& opt) {
  srm::StateSet states = load_states(opt.input, srm::kNormTol);
  srm::Measurement m = srm::lsm(states, opt.rank_tol);
  double e_min = srm::residual_error(states, m);
  json out = {{"e_min", srm::round_sig12(e_min)}};
  if (states.dim() <= 6 && states.size() <= 6) {
    double e_star = srm::brute_force_lsm_oracle(states, 20000, opt.seed);
    out["e_star"] = srm::round_sig12(e_star);
    out["gap"] = srm::round_sig12(e_star - e_min);
  }
  if (states.size() == 2) {
    out["helstrom_p_error"] = srm::round_sig12(srm::helstrom_oracle(states));
    out["lsm_p_error"] = srm::round_sig12(srm::error_probability(states, m));
  }
  emit(out.dump() + "\n", opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least-squares and square-root measurement toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* construct = app.add_subcommand(
      "construct", "Build a measurement from a state-set file");
  construct->add_option("--input", opt.input, "State-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  construct->add_option("--kind", opt.kind, "Construction kind")
      ->required()
      ->check(CLI::IsMember({"lsm", "olsm", "wlsm", "srm", "binary-srm", "cyclic-srm"}));
  CLI::Option* weights_opt = construct->add_option(
      "--weights", opt.weights_csv, "Comma-separated positive weights, one per state");
  construct
      ->add_flag("--weights-from-priors", opt.weights_from_priors,
                 "Use the square roots of the priors as weights")
      ->excludes(weights_opt);
  construct->add_option("--tol", opt.tol, "State normalization tolerance")
      ->check(CLI::PositiveNumber);
  construct->add_option("--rank-tol", opt.rank_tol, "Relative rank threshold")
      ->check(CLI::PositiveNumber);
  construct->add_option("--output", opt.output, "Measurement JSON file to write");

  CLI::App* gusrm = app.add_subcommand(
      "gu-srm", "Square-root measurement of a group-uniform state set");
  gusrm->add_option("--input", opt.input, "State-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  gusrm->add_option("--group", opt.group, "Group JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  gusrm->add_option("--tol", opt.tol, "Group-structure tolerance")
      ->check(CLI::PositiveNumber);
  gusrm->add_option("--rank-tol", opt.rank_tol, "Relative rank threshold")
      ->check(CLI::PositiveNumber);
  gusrm->add_option("--output", opt.output, "Measurement JSON file to write");

  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "Optimality report for a measurement against a state set");
  diagnose->add_option("--input", opt.input, "State-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  diagnose->add_option("--measurement", opt.measurement, "Measurement JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  diagnose->add_option("--tol", opt.tol, "Optimality-condition tolerance")
      ->check(CLI::PositiveNumber);
  diagnose->add_option("--rank-tol", opt.rank_tol, "Relative rank threshold")
      ->check(CLI::PositiveNumber);
  diagnose->add_option("--output", opt.output, "Report JSON file to write");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Weighted residual of a two-state set across priors");
  sweep->add_option("--input", opt.input, "State-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--grid", opt.grid, "Prior grid start:stop:step")->required();
  sweep->add_option("--output", opt.output, "CSV file to write");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Independent optimality oracles for a state set");
  oracle->add_option("--input", opt.input, "State-set JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--rank-tol", opt.rank_tol, "Relative rank threshold")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", opt.seed, "Random seed for the descent restarts");
  oracle->add_option("--output", opt.output, "Report JSON file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(opt);
    }
    if (gusrm->parsed()) {
      return cmd_gu_srm(opt);
    }
    if (diagnose->parsed()) {
      return cmd_diagnose(opt);
    }
    if (sweep->parsed()) {
      return cmd_sweep(opt);
    }
    if (oracle->parsed()) {
      return cmd_oracle(opt);
    }
  } catch (const srm::GroupStructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const srm::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const srm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
