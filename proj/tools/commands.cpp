#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace spintorus::cli {

namespace {

namespace fs = std::filesystem;

struct Outcome {
  Json body;
  bool failed = false;   // affects the exit code always
  bool degraded = false; // affects the exit code only with --strict
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::vector<Complex> random_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) {
    const double re = box(rng);
    const double im = box(rng);
    out.emplace_back(re, im);
  }
  return out;
}

Outcome verify(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  require_generic(spec);
  CheckOptions options;
  options.seed = config.rng_seed;
  const auto checks = run_verify_suite(spec, config.tolerances, options);

  Outcome out;
  Json list = Json::array();
  out.csv_header = {"name", "passed", "skipped", "max_residual", "tolerance"};
  for (const auto& c : checks) {
    list.push_back(check_json(c));
    out.failed = out.failed || !c.passed;
    out.csv_rows.push_back({c.name, c.passed ? "true" : "false", c.skipped ? "true" : "false", num(c.residual),
                            num(c.tolerance)});
  }
  out.body = {{"checks", list}, {"passed", !out.failed}};
  return out;
}

Outcome spectrum(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  require_generic(spec);
  if (spec.sites > 5) throw DimensionError("spectrum: N <= 5");
  SpectrumOptions options;
  options.eigen.seed = config.rng_seed;
  const auto records = brute_force_spectrum(spec, options);
  const double tol = tolerance_for(config.tolerances, "spectrum");

  Outcome out;
  Json list = Json::array();
  std::vector<int> sectors(static_cast<std::size_t>(spec.rank), 0);
  out.csv_header = {"record", "z_charge", "residual", "scale"};
  for (int j = 1; j <= spec.sites; ++j) {
    out.csv_header.push_back("re_lambda_theta" + std::to_string(j));
    out.csv_header.push_back("im_lambda_theta" + std::to_string(j));
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    list.push_back(record_json(r, false));
    ++sectors[static_cast<std::size_t>(r.z_charge)];
    if (!(r.residual < tol * std::max(1.0, r.scale))) out.degraded = true;
    std::vector<std::string> row{std::to_string(k), std::to_string(r.z_charge), num(r.residual), num(r.scale)};
    for (const auto& l : r.lambda_at_theta) {
      row.push_back(num(l.real()));
      row.push_back(num(l.imag()));
    }
    out.csv_rows.push_back(std::move(row));
  }
  out.body = {{"records", list}, {"sector_multiplicities", sectors}, {"residual_tolerance", tol}};
  return out;
}

Outcome bae(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  require_generic(spec);
  if (spec.rank != 3) throw SpecError("bae: the T-Q relation is implemented for su(3) only");
  if (spec.sites > 2) throw DimensionError("bae: N <= 2");
  SpectrumOptions sopt;
  sopt.eigen.seed = config.rng_seed;
  const auto records = brute_force_spectrum(spec, sopt);
  BaeOptions options;
  options.seeds = config.bae_seeds;
  options.rng_seed = config.rng_seed;
  const auto report = solve_bae(spec, records, options);

  // Full functional check away from the θ_j.
  const auto points = random_points(config.rng_seed + 1, 10);
  Json functional = Json::array();
  double worst = 0.0;
  for (const auto& s : report.solutions) {
    const auto& rec = records[static_cast<std::size_t>(s.record)];
    double err = 0.0;
    for (const auto& u : points) {
      const Complex bf = eigenvalue_at(rec, u, spec);
      err = std::max(err, std::abs(tq_lambda(u, s.solution, spec) - bf) / std::max(1.0, std::abs(bf)));
    }
    functional.push_back(err);
    worst = std::max(worst, err);
  }

  Outcome out;
  out.body = bae_report_json(report);
  out.body["functional_error"] = functional;
  out.body["functional_points"] = complex_list_json(points);
  out.failed = worst >= 1e-6;
  out.degraded = report.solutions.empty();
  out.csv_header = {"solution", "matched_record", "z_charge", "max_residual", "match_error", "functional_error"};
  for (std::size_t k = 0; k < report.solutions.size(); ++k) {
    const auto& s = report.solutions[k];
    out.csv_rows.push_back({std::to_string(k), std::to_string(s.record), std::to_string(s.z_charge),
                            num(s.residual), num(s.match_error), num(functional[k].get<double>())});
  }
  return out;
}

Outcome reconstruct_states(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  require_generic(spec);
  if (spec.rank != 3) throw SpecError("reconstruct: su(3) only");
  if (spec.sites > 4) throw DimensionError("reconstruct: N <= 4");
  SpectrumOptions sopt;
  sopt.eigen.seed = config.rng_seed;
  const auto records = brute_force_spectrum(spec, sopt);
  const auto points = random_points(config.rng_seed + 2, 5);
  std::vector<Operator> transfers;
  for (const auto& u : points) transfers.push_back(transfer(u, spec));
  const double tol = tolerance_for(config.tolerances, "reconstruction");

  Outcome out;
  Json states = Json::array();
  out.csv_header = {"record", "z_charge", "residual", "parallel_defect"};
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    const StateVector psi = reconstruct(r.lambda_at_theta, 1.0, spec);
    double residual = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Complex lam = eigenvalue_at(r, points[i], spec);
      residual = std::max(residual, (transfers[i] * psi - lam * psi).norm() / psi.norm());
    }
    const double cosine = std::abs(r.eigenvector.dot(psi)) / (r.eigenvector.norm() * psi.norm());
    const double defect = 1.0 - cosine;
    if (!(residual < tol)) out.failed = true;
    states.push_back({{"record", k},
                      {"z_charge", r.z_charge},
                      {"lambda_at_theta", complex_list_json(r.lambda_at_theta)},
                      {"residual", residual},
                      {"parallel_defect", defect},
                      {"psi_bar0", complex_json({1.0, 0.0})},
                      {"state", state_json(psi)}});
    out.csv_rows.push_back({std::to_string(k), std::to_string(r.z_charge), num(residual), num(defect)});
  }
  out.body = {{"states", states}, {"residual_points", complex_list_json(points)}, {"residual_tolerance", tol}};
  return out;
}

Outcome homog(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  if (spec.rank != 3) throw SpecError("homog: su(3) only");
  if (spec.sites > 3) throw DimensionError("homog: N <= 3");
  HomogeneousLimitOptions options;
  options.eps = config.homog_eps;
  options.direction = config.homog_direction.empty() ? spec.theta : config.homog_direction;
  options.spectrum.eigen.seed = config.rng_seed;
  const auto report = homogeneous_limit_study(spec.sites, spec.eta, options);

  Outcome out;
  out.body = homogeneous_report_json(report);
  const double tol = tolerance_for(config.tolerances, "homogeneous-angle");
  out.body["angle_tolerance"] = tol;
  out.degraded = !report.converged || (spec.sites == 2 && !(report.max_angle < tol));
  out.csv_header = {"state", "re_lambda0", "im_lambda0", "monotone", "last_distance", "closed_form_angle"};
  for (std::size_t k = 0; k < report.states.size(); ++k) {
    const auto& s = report.states[k];
    out.csv_rows.push_back({std::to_string(k), num(s.lambda0.real()), num(s.lambda0.imag()),
                            s.monotone ? "true" : "false", s.distances.empty() ? "" : num(s.distances.back()),
                            s.has_closed_form ? num(s.angle) : ""});
  }
  return out;
}

void write_csv(const fs::path& path, const Outcome& o) {
  std::ofstream f(path);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) f << (k ? "," : "") << cells[k];
    f << "\n";
  };
  line(o.csv_header);
  for (const auto& row : o.csv_rows) line(row);
}

}  // namespace

bool is_command(const std::string& name) {
  return name == "verify" || name == "spectrum" || name == "bae" || name == "reconstruct" || name == "homog";
}

CommandResult run_command(const std::string& command, const RunConfig& config, const CommandOptions& options,
                          std::ostream& err) {
  CommandResult result;
  if (!is_command(command)) {
    err << "unknown command '" << command << "'\n";
    result.exit_code = kConfigError;
    return result;
  }

  Outcome outcome;
  try {
    if (command == "verify") outcome = verify(config);
    if (command == "spectrum") outcome = spectrum(config);
    if (command == "bae") outcome = bae(config);
    if (command == "reconstruct") outcome = reconstruct_states(config);
    if (command == "homog") outcome = homog(config);
  } catch (const SpecError& e) {
    err << "config error: " << e.what() << "\n";
    result.exit_code = kConfigError;
    return result;
  } catch (const DimensionError& e) {
    err << "config error: " << e.what() << "\n";
    result.exit_code = kConfigError;
    return result;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    result.exit_code = kConfigError;
    return result;
  } catch (const Error& e) {
    err << command << " failed: " << e.what() << "\n";
    result.exit_code = kCheckFailure;
    return result;
  }

  result.report = Json{{"schema_version", kSchemaVersion}, {"command", command}, {"config", config.resolved_json()}};
  for (auto& [key, value] : outcome.body.items()) result.report[key] = value;

  fs::path path = config.output_path.empty() ? fs::path(command + ".json") : fs::path(config.output_path);
  if (!options.out_dir.empty()) {
    fs::create_directories(options.out_dir);
    path = fs::path(options.out_dir) / path.filename();
  } else if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "cannot write report '" << path.string() << "'\n";
      result.exit_code = kCheckFailure;
      return result;
    }
    f << dump(result.report);
  }
  result.report_path = path.string();
  if (options.csv) write_csv(fs::path(path).replace_extension(".csv"), outcome);

  if (outcome.failed || (options.strict && outcome.degraded)) result.exit_code = kCheckFailure;
  return result;
}

}  // namespace spintorus::cli
