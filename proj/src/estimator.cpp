#include "spincorr/estimator.hpp"

namespace spincorr {

namespace {

JointCounts run_dispatch(const RunConfig& cfg, bool parallel) {
  validate(cfg);
  const SettingPair s = cfg.settings;

  switch (cfg.model.kind()) {
    case ModelKind::kSingleSpin: {
      const Vec3 bloch = cfg.model.bloch_vector();
      const UnitVec3 a = s.a;
      return detail::run_sharded(
          cfg.trials, cfg.master_seed, cfg.shards, cfg.stream_offset,
          /*pair_resolved=*/false, parallel,
          [bloch, a](SeededRng& rng, JointCounts& local, std::int64_t&) {
            const UnitVec3 lambda = sample_unit_vector(rng);
            detail::tally_sign(local, single_spin_outcome(bloch, lambda, a));
          });
    }
    case ModelKind::kSufficientCondition:
      return detail::run_sharded(
          cfg.trials, cfg.master_seed, cfg.shards, cfg.stream_offset,
          /*pair_resolved=*/false, parallel,
          [s](SeededRng& rng, JointCounts& local, std::int64_t&) {
            const UnitVec3 l1 = sample_unit_vector(rng);
            const UnitVec3 l2 = sample_unit_vector(rng);
            detail::tally_sign(local, sufficient_condition_product({l1, l2}, s));
          });
    case ModelKind::kComplete:
      return detail::run_sharded(
          cfg.trials, cfg.master_seed, cfg.shards, cfg.stream_offset,
          /*pair_resolved=*/true, parallel,
          [s](SeededRng& rng, JointCounts& local, std::int64_t& violations) {
            const UnitVec3 l1 = sample_unit_vector(rng);
            const UnitVec3 l2 = sample_unit_vector(rng);
            const HiddenPair h{l1, l2};
            const PairOutcome o = complete_outcomes(h, s);
            // Product law, checked on every trial.
            violations += (o.x * o.y != sufficient_condition_product(h, s));
            detail::tally_pair(local, o);
          });
    case ModelKind::kLocalBaseline:
      return detail::run_sharded(
          cfg.trials, cfg.master_seed, cfg.shards, cfg.stream_offset,
          /*pair_resolved=*/true, parallel,
          [s](SeededRng& rng, JointCounts& local, std::int64_t&) {
            const UnitVec3 lambda = sample_unit_vector(rng);
            detail::tally_pair(local, local_baseline_outcomes(lambda, s));
          });
  }
  throw std::logic_error("run_trials: unknown model kind");
}

}  // namespace

TrialOutcome evaluate_trial(const ModelSpec& model, const SettingPair& s, SeededRng& rng) {
  switch (model.kind()) {
    case ModelKind::kSingleSpin: {
      const UnitVec3 lambda = sample_unit_vector(rng);
      return SingleOutcome{single_spin_outcome(model.bloch_vector(), lambda, s.a)};
    }
    case ModelKind::kSufficientCondition: {
      const UnitVec3 l1 = sample_unit_vector(rng);
      const UnitVec3 l2 = sample_unit_vector(rng);
      return ProductOutcome{sufficient_condition_product({l1, l2}, s)};
    }
    case ModelKind::kComplete: {
      const UnitVec3 l1 = sample_unit_vector(rng);
      const UnitVec3 l2 = sample_unit_vector(rng);
      return complete_outcomes({l1, l2}, s);
    }
    case ModelKind::kLocalBaseline:
      return local_baseline_outcomes(sample_unit_vector(rng), s);
  }
  throw std::logic_error("evaluate_trial: unknown model kind");
}

JointCounts run_trials(const RunConfig& cfg) { return run_dispatch(cfg, true); }

JointCounts run_trials_serial(const RunConfig& cfg) { return run_dispatch(cfg, false); }

EstimateWithError correlation_estimate(const JointCounts& counts) {
  if (counts.total <= 0) throw EmptyRunError("correlation_estimate: empty run");
  return sign_mean_estimate(counts.n_plus, counts.n_minus, counts.master_seed);
}

std::pair<EstimateWithError, EstimateWithError> marginal_estimates(const JointCounts& counts) {
  if (counts.total <= 0) throw EmptyRunError("marginal_estimates: empty run");
  if (!counts.pair_resolved) {
    throw UnsupportedModelError(
        "marginal_estimates: tally resolves no (X, Y) pairs; the product-only "
        "model provides no means to calculate marginal probabilities");
  }
  return {sign_mean_estimate(counts.n_pp + counts.n_pm, counts.n_mp + counts.n_mm,
                             counts.master_seed),
          sign_mean_estimate(counts.n_pp + counts.n_mp, counts.n_pm + counts.n_mm,
                             counts.master_seed)};
}

}  // namespace spincorr
