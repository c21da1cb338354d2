#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "spincorr/analytic.hpp"
#include "spincorr/estimator.hpp"
#include "spincorr/models.hpp"

namespace spincorr {

/// CHSH scan result: the four correlation estimates and their signed
/// combination E(a,b) - E(a,b') + E(a',b) + E(a',b'), errors in quadrature.
struct ChshEstimate {
  std::array<EstimateWithError, 4> correlations;  // ab, ab', a'b, a'b'
  EstimateWithError value;
};

/// Statistical parameter-independence audit: <X> estimated for every b in a
/// grid with the distant setting varying and everything else fixed. The
/// audit passes when no two marginals differ by more than `threshold`
/// standard errors.
struct SignalingAudit {
  std::vector<UnitVec3> b_grid;
  std::vector<EstimateWithError> mean_x;
  double max_pairwise_z = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Conditional outcome distributions of Y given X at fixed settings.
struct OutcomeDependenceReport {
  double cos_theta = 0.0;
  EstimateWithError p_y_plus_given_x_plus;
  EstimateWithError p_y_plus_given_x_minus;
  double gap = 0.0;
  double gap_std_error = 0.0;
};

/// Deterministic-level locality probe: flip rates of each party's outcome
/// when only the other party's setting changes.
struct AsymmetryProbe {
  std::int64_t trials = 0;
  std::int64_t x_flips = 0;
  std::int64_t y_flips = 0;
  double x_flip_rate_under_b_change = 0.0;
  double y_flip_rate_under_a_change = 0.0;
};

using PairKernel = std::function<PairOutcome(SeededRng&, const SettingPair&)>;

/// Per-trial kernel of a catalog model that resolves full (X, Y) pairs; the
/// kernel draws the model's hidden variables itself. Product-only and
/// single-outcome models are rejected.
PairKernel pair_kernel_of(const ModelSpec& model);

/// Estimates the four CHSH correlations with independent streams (sub-run k
/// uses stream block k*shards) and combines them. Any model that resolves at
/// least products is accepted.
ChshEstimate chsh_scan(const ModelSpec& model, const ChshSettings& settings,
                       std::int64_t trials_per_pair, std::uint64_t seed,
                       int shards = 1);

SignalingAudit no_signaling_audit(const ModelSpec& model, const UnitVec3& a,
                                  const std::vector<UnitVec3>& b_grid,
                                  std::int64_t trials, std::uint64_t seed,
                                  double threshold = 5.0, int shards = 1);

/// Same audit over an arbitrary pair kernel; lets test fixtures outside the
/// catalog be audited with identical machinery.
SignalingAudit no_signaling_audit_kernel(const PairKernel& kernel, const UnitVec3& a,
                                         const std::vector<UnitVec3>& b_grid,
                                         std::int64_t trials, std::uint64_t seed,
                                         double threshold = 5.0, int shards = 1);

OutcomeDependenceReport outcome_dependence_audit(const ModelSpec& model,
                                                 const SettingPair& s,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 int shards = 1);

/// Probes the complete model: per trial draws (lambda1, lambda2, a, b) and
/// independent (a', b'), then asks whether X changes when b -> b' with a
/// fixed, and whether Y changes when a -> a' with b fixed.
AsymmetryProbe asymmetry_probe(std::int64_t trials, std::uint64_t seed);

/// Same probe for any pair model in the catalog.
AsymmetryProbe asymmetry_probe_of(const ModelSpec& model, std::int64_t trials,
                                  std::uint64_t seed);

/// Deterministic, roughly even spread of directions (Fibonacci lattice).
std::vector<UnitVec3> fibonacci_directions(int count);

}  // namespace spincorr
