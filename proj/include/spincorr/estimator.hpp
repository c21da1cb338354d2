#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spincorr/errors.hpp"
#include "spincorr/models.hpp"
#include "spincorr/rng.hpp"
#include "spincorr/sphere.hpp"

namespace spincorr {

/// One Monte Carlo job: a model, fixed settings, and the trial/seed/shard
/// layout. The layout is part of the configuration: two runs with the same
/// RunConfig produce bit-identical counts no matter how many workers execute
/// them. Shard s covers trials [s*ceil(N/shards), ...) and owns the stream
/// with index stream_offset + s.
struct RunConfig {
  ModelSpec model;
  SettingPair settings;
  std::int64_t trials = 1'000'000;
  std::uint64_t master_seed = 0;
  int shards = 1;
  std::uint64_t stream_offset = 0;
};

inline constexpr std::int64_t kMaxTrials = std::int64_t{1} << 62;

inline void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("RunConfig: trials must be >= 1");
  if (cfg.trials > kMaxTrials) throw std::invalid_argument("RunConfig: trials exceed 2^62 cap");
  if (cfg.shards < 1) throw std::invalid_argument("RunConfig: shards must be >= 1");
  if (cfg.shards > cfg.trials) throw std::invalid_argument("RunConfig: more shards than trials");
}

/// Outcome tallies over N trials. Pair models fill the four (X, Y) cells and
/// the product tallies both; product-only and single-outcome models fill
/// n_plus / n_minus alone.
struct JointCounts {
  std::int64_t n_pp = 0;
  std::int64_t n_pm = 0;
  std::int64_t n_mp = 0;
  std::int64_t n_mm = 0;
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  std::int64_t total = 0;
  bool pair_resolved = false;
  std::uint64_t master_seed = 0;

  JointCounts& operator+=(const JointCounts& o) {
    if (pair_resolved != o.pair_resolved || master_seed != o.master_seed) {
      throw std::invalid_argument("JointCounts: merging tallies from different runs");
    }
    n_pp += o.n_pp;
    n_pm += o.n_pm;
    n_mp += o.n_mp;
    n_mm += o.n_mm;
    n_plus += o.n_plus;
    n_minus += o.n_minus;
    total += o.total;
    return *this;
  }
};

/// A point estimate with its standard error and provenance.
struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  std::uint64_t master_seed = 0;
};

/// Mean of a +1/-1 observable. The exact variance of a sign variable is
/// 1 - E^2, so the plug-in standard error is sqrt((1 - value^2)/n), clamped
/// at zero when |value| reaches 1.
inline EstimateWithError sign_mean_estimate(std::int64_t n_plus, std::int64_t n_minus,
                                            std::uint64_t master_seed) {
  const std::int64_t n = n_plus + n_minus;
  if (n <= 0) throw EmptyRunError("sign_mean_estimate: no trials tallied");
  const double value = static_cast<double>(n_plus - n_minus) / static_cast<double>(n);
  const double var = std::max(0.0, 1.0 - value * value);
  return {value, std::sqrt(var / static_cast<double>(n)), n, master_seed};
}

/// Binomial proportion with its standard error.
inline EstimateWithError proportion_estimate(std::int64_t successes, std::int64_t n,
                                             std::uint64_t master_seed) {
  if (n <= 0) throw EmptyRunError("proportion_estimate: no trials tallied");
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  return {p, std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n)), n,
          master_seed};
}

/// |value - reference| in units of the standard error. Zero error with a
/// matching value is z = 0; zero error with a mismatch is infinite.
inline double z_score(double value, double reference, double std_error) {
  const double diff = std::abs(value - reference);
  if (std_error > 0.0) return diff / std_error;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

namespace detail {

/// Sharded tally loop. Each shard owns its generator and local tally; the
/// merge is an integer fold, so totals do not depend on scheduling or worker
/// count. TrialFn is (SeededRng&, JointCounts&, std::int64_t& violations).
template <typename TrialFn>
JointCounts run_sharded(std::int64_t trials, std::uint64_t master_seed, int shards,
                        std::uint64_t stream_offset, bool pair_resolved, bool parallel,
                        TrialFn&& trial) {
  const std::int64_t chunk = (trials + shards - 1) / shards;
  std::vector<JointCounts> partial(static_cast<std::size_t>(shards));
  std::int64_t violations = 0;

#pragma omp parallel for schedule(static) reduction(+ : violations) if (parallel)
  for (int s = 0; s < shards; ++s) {
    SeededRng rng(master_seed, stream_offset + static_cast<std::uint64_t>(s));
    JointCounts local;
    local.pair_resolved = pair_resolved;
    local.master_seed = master_seed;
    const std::int64_t begin = static_cast<std::int64_t>(s) * chunk;
    const std::int64_t end = std::min(trials, begin + chunk);
    std::int64_t bad = 0;
    for (std::int64_t i = begin; i < end; ++i) {
      trial(rng, local, bad);
    }
    local.total = std::max<std::int64_t>(0, end - begin);
    partial[static_cast<std::size_t>(s)] = local;
    violations += bad;
  }

  JointCounts out;
  out.pair_resolved = pair_resolved;
  out.master_seed = master_seed;
  for (const JointCounts& p : partial) out += p;
  if (violations != 0) {
    throw std::logic_error("per-trial product law violated: x*y != sgn(l1.l2 - a.b)");
  }
  return out;
}

inline void tally_sign(JointCounts& c, Sign v) {
  ++(v > 0 ? c.n_plus : c.n_minus);
}

inline void tally_pair(JointCounts& c, PairOutcome o) {
  if (o.x > 0) {
    ++(o.y > 0 ? c.n_pp : c.n_pm);
  } else {
    ++(o.y > 0 ? c.n_mp : c.n_mm);
  }
  ++(o.x == o.y ? c.n_plus : c.n_minus);
}

}  // namespace detail

/// Evaluates one trial of the given model, drawing its hidden variables from
/// the stream in the fixed order lambda1 then lambda2, so streams stay
/// comparable across models sharing a seed.
TrialOutcome evaluate_trial(const ModelSpec& model, const SettingPair& s, SeededRng& rng);

/// Runs the configured Monte Carlo job, drawing each trial's hidden
/// variables (lambda1 then lambda2 for the two-variable models), evaluating
/// the model, and tallying. Shards run concurrently when OpenMP is enabled.
JointCounts run_trials(const RunConfig& cfg);

/// Reference implementation: same layout, same streams, no parallelism.
/// Kept for testing; must produce counts bit-identical to run_trials.
JointCounts run_trials_serial(const RunConfig& cfg);

/// Mean of the product observable (or of the lone outcome for single-spin).
EstimateWithError correlation_estimate(const JointCounts& counts);

/// (<X>, <Y>) from a pair-resolving tally. Product-only tallies carry no
/// marginal information and are rejected.
std::pair<EstimateWithError, EstimateWithError> marginal_estimates(const JointCounts& counts);

/// Tallies a custom pair-outcome kernel with the same shard/stream layout as
/// run_trials. Used by audits and tests that need models outside the catalog.
template <typename PairFn>
JointCounts tally_pair_kernel(PairFn&& kernel, const SettingPair& settings,
                              std::int64_t trials, std::uint64_t master_seed,
                              int shards = 1, std::uint64_t stream_offset = 0,
                              bool parallel = true) {
  if (trials < 1) throw std::invalid_argument("tally_pair_kernel: trials must be >= 1");
  if (shards < 1 || shards > trials) {
    throw std::invalid_argument("tally_pair_kernel: bad shard count");
  }
  return detail::run_sharded(
      trials, master_seed, shards, stream_offset, /*pair_resolved=*/true, parallel,
      [&kernel, &settings](SeededRng& rng, JointCounts& local, std::int64_t&) {
        detail::tally_pair(local, kernel(rng, settings));
      });
}

}  // namespace spincorr
