#include "spincorr/diagnostics.hpp"

#include <cmath>
#include <numbers>

namespace spincorr {

PairKernel pair_kernel_of(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::kComplete:
      return [](SeededRng& rng, const SettingPair& s) {
        const UnitVec3 l1 = sample_unit_vector(rng);
        const UnitVec3 l2 = sample_unit_vector(rng);
        return complete_outcomes({l1, l2}, s);
      };
    case ModelKind::kLocalBaseline:
      return [](SeededRng& rng, const SettingPair& s) {
        return local_baseline_outcomes(sample_unit_vector(rng), s);
      };
    case ModelKind::kSufficientCondition:
      throw UnsupportedModelError(
          "the product-only model resolves no individual outcomes and defines "
          "no marginals");
    case ModelKind::kSingleSpin:
      throw UnsupportedModelError("the single-spin model has no second party");
  }
  throw std::logic_error("pair_kernel_of: unknown model kind");
}

ChshEstimate chsh_scan(const ModelSpec& model, const ChshSettings& settings,
                       std::int64_t trials_per_pair, std::uint64_t seed, int shards) {
  if (model.arity() == OutcomeArity::kSingle) {
    throw UnsupportedModelError("chsh_scan: the single-spin model produces no products");
  }
  const std::array<SettingPair, 4> pairs = {
      SettingPair{settings.a, settings.b},
      SettingPair{settings.a, settings.b_prime},
      SettingPair{settings.a_prime, settings.b},
      SettingPair{settings.a_prime, settings.b_prime},
  };

  ChshEstimate out;
  for (int k = 0; k < 4; ++k) {
    RunConfig cfg{model, pairs[static_cast<std::size_t>(k)], trials_per_pair, seed,
                  shards, static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(shards)};
    out.correlations[static_cast<std::size_t>(k)] = correlation_estimate(run_trials(cfg));
  }

  const auto& e = out.correlations;
  const double s_value = e[0].value - e[1].value + e[2].value + e[3].value;
  const double s_err = std::sqrt(e[0].std_error * e[0].std_error +
                                 e[1].std_error * e[1].std_error +
                                 e[2].std_error * e[2].std_error +
                                 e[3].std_error * e[3].std_error);
  out.value = {s_value, s_err, 4 * trials_per_pair, seed};
  return out;
}

namespace {

SignalingAudit signaling_audit_impl(const PairKernel& kernel, const UnitVec3& a,
                                    const std::vector<UnitVec3>& b_grid,
                                    std::int64_t trials, std::uint64_t seed,
                                    double threshold, int shards) {
  if (b_grid.size() < 2) {
    throw std::invalid_argument("no_signaling_audit: need at least two b directions");
  }
  SignalingAudit audit;
  audit.b_grid = b_grid;
  audit.threshold = threshold;
  for (std::size_t i = 0; i < b_grid.size(); ++i) {
    const SettingPair s{a, b_grid[i]};
    const JointCounts counts =
        tally_pair_kernel(kernel, s, trials, seed, shards,
                          static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(shards));
    audit.mean_x.push_back(marginal_estimates(counts).first);
  }
  double max_z = 0.0;
  for (std::size_t i = 0; i < audit.mean_x.size(); ++i) {
    for (std::size_t j = i + 1; j < audit.mean_x.size(); ++j) {
      const double se = std::sqrt(audit.mean_x[i].std_error * audit.mean_x[i].std_error +
                                  audit.mean_x[j].std_error * audit.mean_x[j].std_error);
      max_z = std::max(max_z, z_score(audit.mean_x[i].value, audit.mean_x[j].value, se));
    }
  }
  audit.max_pairwise_z = max_z;
  audit.pass = max_z < threshold;
  return audit;
}

}  // namespace

SignalingAudit no_signaling_audit(const ModelSpec& model, const UnitVec3& a,
                                  const std::vector<UnitVec3>& b_grid,
                                  std::int64_t trials, std::uint64_t seed,
                                  double threshold, int shards) {
  return signaling_audit_impl(pair_kernel_of(model), a, b_grid, trials, seed, threshold,
                              shards);
}

SignalingAudit no_signaling_audit_kernel(const PairKernel& kernel, const UnitVec3& a,
                                         const std::vector<UnitVec3>& b_grid,
                                         std::int64_t trials, std::uint64_t seed,
                                         double threshold, int shards) {
  return signaling_audit_impl(kernel, a, b_grid, trials, seed, threshold, shards);
}

OutcomeDependenceReport outcome_dependence_audit(const ModelSpec& model,
                                                 const SettingPair& s,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 int shards) {
  if (!model.produces_pairs()) {
    throw UnsupportedModelError(
        "outcome_dependence_audit: conditioning requires full (X, Y) pairs");
  }
  RunConfig cfg{model, s, trials, seed, shards, 0};
  const JointCounts counts = run_trials(cfg);

  const std::int64_t n_x_plus = counts.n_pp + counts.n_pm;
  const std::int64_t n_x_minus = counts.n_mp + counts.n_mm;
  if (n_x_plus == 0 || n_x_minus == 0) {
    throw InsufficientDataError(
        "outcome_dependence_audit: a conditioning cell received no trials");
  }

  OutcomeDependenceReport report;
  report.cos_theta = s.cos_theta_ab();
  report.p_y_plus_given_x_plus = proportion_estimate(counts.n_pp, n_x_plus, seed);
  report.p_y_plus_given_x_minus = proportion_estimate(counts.n_mp, n_x_minus, seed);
  report.gap = std::abs(report.p_y_plus_given_x_plus.value -
                        report.p_y_plus_given_x_minus.value);
  report.gap_std_error =
      std::sqrt(report.p_y_plus_given_x_plus.std_error * report.p_y_plus_given_x_plus.std_error +
                report.p_y_plus_given_x_minus.std_error * report.p_y_plus_given_x_minus.std_error);
  return report;
}

AsymmetryProbe asymmetry_probe(std::int64_t trials, std::uint64_t seed) {
  return asymmetry_probe_of(ModelSpec::complete(), trials, seed);
}

AsymmetryProbe asymmetry_probe_of(const ModelSpec& model, std::int64_t trials,
                                  std::uint64_t seed) {
  if (!model.produces_pairs()) {
    throw UnsupportedModelError("asymmetry_probe: model resolves no (X, Y) pairs");
  }
  if (trials < 1) throw std::invalid_argument("asymmetry_probe: trials must be >= 1");

  AsymmetryProbe probe;
  probe.trials = trials;
  SeededRng rng(seed, 0);

  const bool complete = model.kind() == ModelKind::kComplete;
  for (std::int64_t i = 0; i < trials; ++i) {
    // Fixed draw order: hidden variables first, then settings, then the
    // counterfactual settings.
    const UnitVec3 l1 = sample_unit_vector(rng);
    const UnitVec3 l2 = complete ? sample_unit_vector(rng) : l1;
    const UnitVec3 a = sample_unit_vector(rng);
    const UnitVec3 b = sample_unit_vector(rng);
    const UnitVec3 a_prime = sample_unit_vector(rng);
    const UnitVec3 b_prime = sample_unit_vector(rng);

    PairOutcome base{0, 0}, b_changed{0, 0}, a_changed{0, 0};
    if (complete) {
      const HiddenPair h{l1, l2};
      base = complete_outcomes(h, {a, b});
      b_changed = complete_outcomes(h, {a, b_prime});
      a_changed = complete_outcomes(h, {a_prime, b});
    } else {
      base = local_baseline_outcomes(l1, {a, b});
      b_changed = local_baseline_outcomes(l1, {a, b_prime});
      a_changed = local_baseline_outcomes(l1, {a_prime, b});
    }
    probe.x_flips += (base.x != b_changed.x);
    probe.y_flips += (base.y != a_changed.y);
  }

  probe.x_flip_rate_under_b_change =
      static_cast<double>(probe.x_flips) / static_cast<double>(trials);
  probe.y_flip_rate_under_a_change =
      static_cast<double>(probe.y_flips) / static_cast<double>(trials);
  return probe;
}

std::vector<UnitVec3> fibonacci_directions(int count) {
  if (count < 1) throw std::invalid_argument("fibonacci_directions: count must be >= 1");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<UnitVec3> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

}  // namespace spincorr
