// spincorr command-line front end.
//
// Subcommands: correlate, sweep, joint-probs, chsh, audit. Records go to
// stdout as CSV or JSON; verdicts and errors go to stderr. Exit code is 0
// iff all requested audits pass and no errors occurred.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincorr/analytic.hpp"
#include "spincorr/diagnostics.hpp"
#include "spincorr/estimator.hpp"
#include "spincorr/models.hpp"
#include "spincorr/output.hpp"

namespace {

using namespace spincorr;

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct CommonOpts {
  std::string model_name = "complete";
  std::vector<double> bloch = {0.0, 0.0, 0.6};
  std::int64_t trials = 1'000'000;
  int shards = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  double z_threshold = 5.0;
};

void add_common_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model_name, "hidden-variable model to run")
      ->check(CLI::IsMember({"single_spin", "sufficient_condition", "complete",
                             "local_baseline"}))
      ->capture_default_str();
  cmd->add_option("--bloch", o.bloch, "Bloch vector for the single_spin model")
      ->expected(3)
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per estimate")
      ->check(CLI::Range(std::int64_t{1}, kMaxTrials))
      ->capture_default_str();
  cmd->add_option("--shards", o.shards, "independent RNG streams (also the parallel grain)")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

ModelSpec parse_model(const CommonOpts& o) {
  return ModelSpec::parse(o.model_name, Vec3{o.bloch[0], o.bloch[1], o.bloch[2]});
}

std::string common_suffix(const CommonOpts& o) {
  return " --trials " + std::to_string(o.trials) + " --shards " +
         std::to_string(o.shards) + " --seed " + std::to_string(o.seed) +
         " --format " + o.format;
}

std::string model_clause(const ModelSpec& model, const CommonOpts& o) {
  std::string s = " --model " + model.name();
  if (model.kind() == ModelKind::kSingleSpin) {
    s += " --bloch " + format_double(o.bloch[0]) + "," + format_double(o.bloch[1]) +
         "," + format_double(o.bloch[2]);
  }
  return s;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(records).dump(2) << "\n";
  } else {
    std::cout << to_csv(records);
  }
}

SettingPair settings_at(const ModelSpec& model, double theta_rad) {
  if (model.kind() == ModelKind::kSingleSpin) {
    // One party: measure along the planar direction at theta.
    const UnitVec3 a = planar_direction(theta_rad);
    return {a, a};
  }
  return planar_setting_pair(theta_rad);
}

OutputRecord correlation_record(const std::string& command, const ModelSpec& model,
                                const CommonOpts& o, double theta_deg) {
  const double theta_rad = theta_deg * kDegToRad;
  RunConfig cfg{model, settings_at(model, theta_rad), o.trials, o.seed, o.shards, 0};
  const EstimateWithError est = correlation_estimate(run_trials(cfg));

  OutputRecord rec;
  rec.command = command;
  rec.model = model.name();
  rec.theta_deg = theta_deg;
  rec.quantity = model.kind() == ModelKind::kSingleSpin ? "mean_x" : "correlation";
  rec.value = est.value;
  rec.std_error = est.std_error;
  rec.n = est.n;
  rec.seed = o.seed;
  attach_reference(rec, model_correlation_reference(model, theta_rad));
  return rec;
}

std::vector<OutputRecord> joint_cell_records(const std::string& command,
                                             const ModelSpec& model, const CommonOpts& o,
                                             double theta_deg) {
  const double theta_rad = theta_deg * kDegToRad;
  RunConfig cfg{model, settings_at(model, theta_rad), o.trials, o.seed, o.shards, 0};
  const JointCounts counts = run_trials(cfg);

  const JointProbabilities ref =
      model.kind() == ModelKind::kComplete
          ? singlet_joint_probabilities(std::cos(theta_rad))
          : joint_from_correlation(model_correlation_reference(model, theta_rad));

  const std::array<std::pair<const char*, std::int64_t>, 4> cells = {
      std::make_pair("p_pp", counts.n_pp), std::make_pair("p_pm", counts.n_pm),
      std::make_pair("p_mp", counts.n_mp), std::make_pair("p_mm", counts.n_mm)};
  const std::array<double, 4> refs = {ref.pp, ref.pm, ref.mp, ref.mm};

  std::vector<OutputRecord> records;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const EstimateWithError est =
        proportion_estimate(cells[i].second, counts.total, o.seed);
    OutputRecord rec;
    rec.command = command;
    rec.model = model.name();
    rec.theta_deg = theta_deg;
    rec.quantity = cells[i].first;
    rec.value = est.value;
    rec.std_error = est.std_error;
    rec.n = est.n;
    rec.seed = o.seed;
    attach_reference(rec, refs[i]);
    records.push_back(rec);
  }
  return records;
}

std::vector<double> parse_theta_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0.0 || stop < start) {
      throw CLI::ValidationError("--theta-grid", "expected START:STOP:STEP with STEP > 0");
    }
    for (double t = start; t <= stop + 1e-9; t += step) grid.push_back(t);
  } else {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t next = spec.find(',', pos);
      if (next == std::string::npos) next = spec.size();
      grid.push_back(std::stod(spec.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  if (grid.empty()) throw CLI::ValidationError("--theta-grid", "empty angle grid");
  for (double t : grid) {
    if (!(t >= 0.0 && t <= 180.0)) {
      throw CLI::ValidationError("--theta-grid", "angles must lie in [0, 180]");
    }
  }
  return grid;
}

std::string canonical_grid(const std::vector<double>& grid) {
  std::string s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) s += ',';
    s += format_double(grid[i]);
  }
  return s;
}

double setting_angle_deg(const UnitVec3& u, const UnitVec3& v) {
  return std::acos(std::clamp(dot(u, v), -1.0, 1.0)) / kDegToRad;
}

int run_correlate(const CommonOpts& o, double theta_deg) {
  const ModelSpec model = parse_model(o);
  const std::string command = "correlate" + model_clause(model, o) + " --theta " +
                              format_double(theta_deg) + common_suffix(o);
  emit({correlation_record(command, model, o, theta_deg)}, o.format);
  return 0;
}

int run_sweep(const CommonOpts& o, const std::string& grid_spec, bool cells_only) {
  const ModelSpec model = parse_model(o);
  const std::vector<double> grid = parse_theta_grid(grid_spec);
  if (cells_only && !model.produces_pairs()) {
    throw UnsupportedModelError("joint-probs: model '" + model.name() +
                                "' resolves no (X, Y) pairs, so no joint "
                                "probabilities can be tabulated");
  }
  const std::string command = std::string(cells_only ? "joint-probs" : "sweep") +
                              model_clause(model, o) + " --theta-grid " +
                              canonical_grid(grid) + common_suffix(o);
  std::vector<OutputRecord> records;
  for (double theta_deg : grid) {
    if (!cells_only) records.push_back(correlation_record(command, model, o, theta_deg));
    if (model.produces_pairs()) {
      const auto cells = joint_cell_records(command, model, o, theta_deg);
      records.insert(records.end(), cells.begin(), cells.end());
    }
  }
  emit(records, o.format);
  return 0;
}

int run_chsh(const CommonOpts& o, const std::vector<double>& angles_deg) {
  const ModelSpec model = parse_model(o);
  const ChshSettings settings{planar_direction(angles_deg[0] * kDegToRad),
                              planar_direction(angles_deg[1] * kDegToRad),
                              planar_direction(angles_deg[2] * kDegToRad),
                              planar_direction(angles_deg[3] * kDegToRad)};
  std::string command = "chsh" + model_clause(model, o) + " --angles ";
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    if (i) command += ',';
    command += format_double(angles_deg[i]);
  }
  command += common_suffix(o);

  const ChshEstimate scan = chsh_scan(model, settings, o.trials, o.seed, o.shards);
  const CorrelationFn oracle = correlation_oracle(model);
  const double s_ref = chsh_value(oracle, settings);

  const std::array<SettingPair, 4> pairs = {
      SettingPair{settings.a, settings.b}, SettingPair{settings.a, settings.b_prime},
      SettingPair{settings.a_prime, settings.b},
      SettingPair{settings.a_prime, settings.b_prime}};
  const std::array<const char*, 4> names = {"e_ab", "e_ab_prime", "e_a_prime_b",
                                            "e_a_prime_b_prime"};

  std::vector<OutputRecord> records;
  for (std::size_t k = 0; k < 4; ++k) {
    const EstimateWithError& est = scan.correlations[k];
    OutputRecord rec;
    rec.command = command;
    rec.model = model.name();
    rec.theta_deg = setting_angle_deg(pairs[k].a, pairs[k].b);
    rec.quantity = names[k];
    rec.value = est.value;
    rec.std_error = est.std_error;
    rec.n = est.n;
    rec.seed = o.seed;
    attach_reference(rec, oracle(pairs[k]));
    records.push_back(rec);
  }

  OutputRecord signed_rec;
  signed_rec.command = command;
  signed_rec.model = model.name();
  signed_rec.quantity = "chsh";
  signed_rec.value = scan.value.value;
  signed_rec.std_error = scan.value.std_error;
  signed_rec.n = scan.value.n;
  signed_rec.seed = o.seed;
  attach_reference(signed_rec, s_ref);
  records.push_back(signed_rec);

  OutputRecord mag_rec = signed_rec;
  mag_rec.quantity = "chsh_magnitude";
  mag_rec.value = std::abs(scan.value.value);
  mag_rec.z_score.reset();
  attach_reference(mag_rec, std::abs(s_ref));
  records.push_back(mag_rec);

  emit(records, o.format);
  return 0;
}

int run_audit_signaling(const CommonOpts& o, int directions, const std::string& command) {
  const ModelSpec model = parse_model(o);
  const UnitVec3 a(0.0, 0.0, 1.0);
  const std::vector<UnitVec3> b_grid = fibonacci_directions(directions);
  const SignalingAudit audit =
      no_signaling_audit(model, a, b_grid, o.trials, o.seed, o.z_threshold, o.shards);

  std::vector<OutputRecord> records;
  for (std::size_t i = 0; i < b_grid.size(); ++i) {
    const EstimateWithError& est = audit.mean_x[i];
    OutputRecord rec;
    rec.command = command;
    rec.model = model.name();
    rec.theta_deg = setting_angle_deg(a, b_grid[i]);
    rec.quantity = "mean_x";
    rec.value = est.value;
    rec.std_error = est.std_error;
    rec.n = est.n;
    rec.seed = o.seed;
    attach_reference(rec, 0.0);
    records.push_back(rec);
  }
  OutputRecord zrec;
  zrec.command = command;
  zrec.model = model.name();
  zrec.quantity = "max_pairwise_z";
  zrec.value = audit.max_pairwise_z;
  zrec.n = o.trials;
  zrec.seed = o.seed;
  records.push_back(zrec);

  OutputRecord verdict;
  verdict.command = command;
  verdict.model = model.name();
  verdict.quantity = "audit_pass";
  verdict.value = audit.pass ? 1.0 : 0.0;
  verdict.n = o.trials;
  verdict.seed = o.seed;
  records.push_back(verdict);

  emit(records, o.format);
  std::cerr << "audit signaling: " << (audit.pass ? "PASS" : "FAIL")
            << " (max pairwise z = " << audit.max_pairwise_z << ", threshold "
            << audit.threshold << ")\n";
  return audit.pass ? 0 : 1;
}

int run_audit_outcome_dependence(const CommonOpts& o, double theta_deg,
                                 const std::string& command) {
  const ModelSpec model = parse_model(o);
  const double theta_rad = theta_deg * kDegToRad;
  const SettingPair s = settings_at(model, theta_rad);
  const OutcomeDependenceReport report =
      outcome_dependence_audit(model, s, o.trials, o.seed, o.shards);

  const double e_ref = model_correlation_reference(model, theta_rad);
  const double p_plus_ref = (1.0 + e_ref) / 2.0;   // P(Y=+1 | X=+1)
  const double p_minus_ref = (1.0 - e_ref) / 2.0;  // P(Y=+1 | X=-1)

  std::vector<OutputRecord> records;
  auto push = [&](const char* quantity, const EstimateWithError& est, double ref) {
    OutputRecord rec;
    rec.command = command;
    rec.model = model.name();
    rec.theta_deg = theta_deg;
    rec.quantity = quantity;
    rec.value = est.value;
    rec.std_error = est.std_error;
    rec.n = est.n;
    rec.seed = o.seed;
    attach_reference(rec, ref);
    records.push_back(rec);
  };
  push("p_y_plus_given_x_plus", report.p_y_plus_given_x_plus, p_plus_ref);
  push("p_y_plus_given_x_minus", report.p_y_plus_given_x_minus, p_minus_ref);

  OutputRecord gap_rec;
  gap_rec.command = command;
  gap_rec.model = model.name();
  gap_rec.theta_deg = theta_deg;
  gap_rec.quantity = "gap";
  gap_rec.value = report.gap;
  gap_rec.std_error = report.gap_std_error;
  gap_rec.n = o.trials;
  gap_rec.seed = o.seed;
  attach_reference(gap_rec, std::abs(e_ref));
  records.push_back(gap_rec);

  const bool pass = !gap_rec.z_score.has_value() || *gap_rec.z_score < o.z_threshold;
  OutputRecord verdict = gap_rec;
  verdict.quantity = "audit_pass";
  verdict.value = pass ? 1.0 : 0.0;
  verdict.std_error.reset();
  verdict.analytic.reset();
  verdict.z_score.reset();
  records.push_back(verdict);

  emit(records, o.format);
  std::cerr << "audit outcome-dependence: " << (pass ? "PASS" : "FAIL") << " (gap = "
            << report.gap << ", expected " << std::abs(e_ref) << ", threshold "
            << o.z_threshold << " sigma)\n";
  return pass ? 0 : 1;
}

int run_audit_asymmetry(const CommonOpts& o, const std::string& command) {
  const ModelSpec model = parse_model(o);
  const AsymmetryProbe probe = asymmetry_probe_of(model, o.trials, o.seed);

  std::vector<OutputRecord> records;
  const EstimateWithError x_rate = proportion_estimate(probe.x_flips, probe.trials, o.seed);
  const EstimateWithError y_rate = proportion_estimate(probe.y_flips, probe.trials, o.seed);

  OutputRecord xrec;
  xrec.command = command;
  xrec.model = model.name();
  xrec.quantity = "x_flip_rate_under_b_change";
  xrec.value = x_rate.value;
  xrec.std_error = x_rate.std_error;
  xrec.n = probe.trials;
  xrec.seed = o.seed;
  attach_reference(xrec, 0.0);
  records.push_back(xrec);

  OutputRecord yrec = xrec;
  yrec.quantity = "y_flip_rate_under_a_change";
  yrec.value = y_rate.value;
  yrec.std_error = y_rate.std_error;
  yrec.analytic.reset();
  yrec.z_score.reset();
  records.push_back(yrec);

  // X must be local in every catalog pair model. Y flips are the complete
  // model's signature and must vanish for the baseline.
  const bool expect_y_flips = model.kind() == ModelKind::kComplete;
  const bool pass = probe.x_flips == 0 &&
                    (expect_y_flips ? probe.y_flips > 0 : probe.y_flips == 0);
  OutputRecord verdict = yrec;
  verdict.quantity = "audit_pass";
  verdict.value = pass ? 1.0 : 0.0;
  verdict.std_error.reset();
  records.push_back(verdict);

  emit(records, o.format);
  std::cerr << "audit asymmetry: " << (pass ? "PASS" : "FAIL")
            << " (x flip rate = " << x_rate.value << ", y flip rate = " << y_rate.value
            << ")\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo laboratory for deterministic hidden-variable spin models"};
  app.require_subcommand(1);

  CommonOpts correlate_opts;
  double correlate_theta = 60.0;
  CLI::App* correlate = app.add_subcommand(
      "correlate", "estimate the correlation at one planar angle");
  add_common_options(correlate, correlate_opts);
  correlate->add_option("--theta", correlate_theta, "angle between settings, degrees")
      ->check(CLI::Range(0.0, 180.0))
      ->capture_default_str();

  CommonOpts sweep_opts;
  std::string sweep_grid = "0:180:15";
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate estimates over an angle grid");
  add_common_options(sweep, sweep_opts);
  sweep->add_option("--theta-grid", sweep_grid,
                    "angles in degrees, START:STOP:STEP or comma list")
      ->capture_default_str();

  CommonOpts jp_opts;
  std::string jp_grid = "0:180:15";
  CLI::App* joint_probs = app.add_subcommand(
      "joint-probs", "tabulate the four joint outcome probabilities over an angle grid");
  add_common_options(joint_probs, jp_opts);
  joint_probs->add_option("--theta-grid", jp_grid,
                          "angles in degrees, START:STOP:STEP or comma list")
      ->capture_default_str();

  CommonOpts chsh_opts;
  std::vector<double> chsh_angles = {0.0, 90.0, 45.0, 135.0};
  CLI::App* chsh = app.add_subcommand("chsh", "estimate the CHSH combination");
  add_common_options(chsh, chsh_opts);
  chsh->add_option("--angles", chsh_angles, "planar angles a,a',b,b' in degrees")
      ->expected(4)
      ->delimiter(',')
      ->capture_default_str();

  CommonOpts audit_opts;
  std::string audit_kind;
  int audit_directions = 16;
  double audit_theta = 60.0;
  CLI::App* audit = app.add_subcommand("audit", "run a diagnostics audit");
  audit->add_option("kind", audit_kind, "signaling | outcome-dependence | asymmetry")
      ->required()
      ->check(CLI::IsMember({"signaling", "outcome-dependence", "asymmetry"}));
  add_common_options(audit, audit_opts);
  audit->add_option("--directions", audit_directions, "size of the b grid (signaling)")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
  audit->add_option("--theta", audit_theta, "angle in degrees (outcome-dependence)")
      ->check(CLI::Range(0.0, 180.0))
      ->capture_default_str();
  audit->add_option("--z-threshold", audit_opts.z_threshold, "audit pass threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (correlate->parsed()) return run_correlate(correlate_opts, correlate_theta);
    if (sweep->parsed()) return run_sweep(sweep_opts, sweep_grid, false);
    if (joint_probs->parsed()) return run_sweep(jp_opts, jp_grid, true);
    if (chsh->parsed()) return run_chsh(chsh_opts, chsh_angles);
    if (audit->parsed()) {
      const ModelSpec model = parse_model(audit_opts);
      std::string command = "audit " + audit_kind + model_clause(model, audit_opts);
      if (audit_kind == "signaling") {
        command += " --directions " + std::to_string(audit_directions);
      }
      if (audit_kind == "outcome-dependence") {
        command += " --theta " + format_double(audit_theta);
      }
      command += common_suffix(audit_opts) + " --z-threshold " +
                 format_double(audit_opts.z_threshold);
      if (audit_kind == "signaling") {
        return run_audit_signaling(audit_opts, audit_directions, command);
      }
      if (audit_kind == "outcome-dependence") {
        return run_audit_outcome_dependence(audit_opts, audit_theta, command);
      }
      return run_audit_asymmetry(audit_opts, command);
    }
  } catch (const UnsupportedModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
