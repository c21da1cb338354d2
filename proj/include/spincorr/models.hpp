#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>

#include "spincorr/vec3.hpp"

namespace spincorr {

/// The two hidden unit vectors shared by the parties.
struct HiddenPair {
  UnitVec3 lambda1;
  UnitVec3 lambda2;
};

/// Measurement directions chosen by the two parties.
struct SettingPair {
  UnitVec3 a;
  UnitVec3 b;

  double cos_theta_ab() const { return std::clamp(dot(a, b), -1.0, 1.0); }
};

struct PairOutcome {
  Sign x;
  Sign y;
};

struct ProductOutcome {
  Sign xy;
};

struct SingleOutcome {
  Sign x;
};

/// Per-trial result: a full (X, Y) pair, a bare product XY, or a lone X for
/// the one-party model.
using TrialOutcome = std::variant<PairOutcome, ProductOutcome, SingleOutcome>;

enum class ModelKind {
  kSingleSpin,
  kSufficientCondition,
  kComplete,
  kLocalBaseline,
};

/// What a model resolves per trial.
enum class OutcomeArity { kSingle, kProductOnly, kPair };

constexpr OutcomeArity arity_of(ModelKind kind) {
  switch (kind) {
    case ModelKind::kSingleSpin:
      return OutcomeArity::kSingle;
    case ModelKind::kSufficientCondition:
      return OutcomeArity::kProductOnly;
    case ModelKind::kComplete:
    case ModelKind::kLocalBaseline:
      return OutcomeArity::kPair;
  }
  return OutcomeArity::kPair;  // unreachable
}

/// Which hidden-variable model to run, with its parameters. The Bloch vector
/// is meaningful only for the single-spin model.
class ModelSpec {
 public:
  static ModelSpec single_spin(const Vec3& bloch) {
    if (!(norm(bloch) <= 1.0 + 1e-12)) {
      throw std::domain_error("ModelSpec: Bloch vector norm exceeds 1");
    }
    return ModelSpec(ModelKind::kSingleSpin, bloch);
  }
  static ModelSpec sufficient_condition() {
    return ModelSpec(ModelKind::kSufficientCondition, {});
  }
  static ModelSpec complete() { return ModelSpec(ModelKind::kComplete, {}); }
  static ModelSpec local_baseline() {
    return ModelSpec(ModelKind::kLocalBaseline, {});
  }

  ModelKind kind() const { return kind_; }
  const Vec3& bloch_vector() const { return bloch_; }
  OutcomeArity arity() const { return arity_of(kind_); }
  bool produces_pairs() const { return arity() == OutcomeArity::kPair; }

  std::string name() const {
    switch (kind_) {
      case ModelKind::kSingleSpin: return "single_spin";
      case ModelKind::kSufficientCondition: return "sufficient_condition";
      case ModelKind::kComplete: return "complete";
      case ModelKind::kLocalBaseline: return "local_baseline";
    }
    return "?";
  }

  /// Parses the CLI spelling; the Bloch vector applies to single_spin only.
  static ModelSpec parse(const std::string& name, const Vec3& bloch = {}) {
    if (name == "single_spin") return single_spin(bloch);
    if (name == "sufficient_condition") return sufficient_condition();
    if (name == "complete") return complete();
    if (name == "local_baseline") return local_baseline();
    throw std::invalid_argument("unknown model: " + name);
  }

 private:
  ModelSpec(ModelKind kind, const Vec3& bloch) : kind_(kind), bloch_(bloch) {}
  ModelKind kind_;
  Vec3 bloch_;
};

/// Single-spin rule: the sign of (P + lambda).a decides the outcome.
inline Sign single_spin_outcome(const Vec3& bloch, const UnitVec3& lambda,
                                const UnitVec3& a) {
  if (!(norm(bloch) <= 1.0 + 1e-12)) {
    throw std::domain_error("single_spin_outcome: Bloch vector norm exceeds 1");
  }
  return sgn(dot(bloch + lambda.vec(), a));
}

/// Product-only rule XY = sgn(lambda1.lambda2 - a.b). Deliberately returns
/// the bare product: this model resolves no individual X or Y, and the
/// return type makes asking for them impossible.
inline Sign sufficient_condition_product(const HiddenPair& h, const SettingPair& s) {
  return sgn(dot(h.lambda1, h.lambda2) - dot(s.a, s.b));
}

/// Complete rule: X = sgn(a.lambda1) is a function of local data only, and
/// Y = sgn(lambda1.lambda2 - a.b) * X, so the product law above holds per
/// trial while both outcomes are resolved.
inline PairOutcome complete_outcomes(const HiddenPair& h, const SettingPair& s) {
  const Sign x = sgn(dot(s.a, h.lambda1));
  const Sign y = sgn(dot(h.lambda1, h.lambda2) - dot(s.a, s.b)) * x;
  return {x, y};
}

/// Local deterministic baseline: one shared lambda, each outcome a function
/// of its own setting alone, anticorrelated at coincident settings.
inline PairOutcome local_baseline_outcomes(const UnitVec3& lambda, const SettingPair& s) {
  return {sgn(dot(s.a, lambda)), -sgn(dot(s.b, lambda))};
}

}  // namespace spincorr
