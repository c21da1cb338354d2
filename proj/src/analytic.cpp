#include "spincorr/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spincorr/errors.hpp"
#include "spincorr/sphere.hpp"

namespace spincorr {

namespace {
constexpr double kPi = std::numbers::pi;
}

UnitVec3 planar_direction(double theta_rad) {
  return UnitVec3(std::sin(theta_rad), 0.0, std::cos(theta_rad));
}

SettingPair planar_setting_pair(double theta_rad) {
  return {planar_direction(0.0), planar_direction(theta_rad)};
}

ChshSettings standard_chsh_settings() {
  return {planar_direction(0.0), planar_direction(kPi / 2.0),
          planar_direction(kPi / 4.0), planar_direction(3.0 * kPi / 4.0)};
}

double singlet_correlation(const SettingPair& s) { return -dot(s.a, s.b); }

JointProbabilities singlet_joint_probabilities(double cos_theta) {
  if (!(cos_theta >= -1.0 && cos_theta <= 1.0)) {
    throw std::domain_error("singlet_joint_probabilities: cosine outside [-1, 1]");
  }
  const double same = (1.0 - cos_theta) / 4.0;
  const double diff = (1.0 + cos_theta) / 4.0;
  return {same, diff, diff, same};
}

double singlet_conditional(Sign y_given, Sign x, double cos_theta) {
  if (!(cos_theta >= -1.0 && cos_theta <= 1.0)) {
    throw std::domain_error("singlet_conditional: cosine outside [-1, 1]");
  }
  return (1.0 - x * y_given * cos_theta) / 2.0;
}

double single_spin_expectation(const Vec3& bloch, const UnitVec3& a) {
  if (!(norm(bloch) <= 1.0 + 1e-12)) {
    throw std::domain_error("single_spin_expectation: Bloch vector norm exceeds 1");
  }
  return dot(bloch, a);
}

double inner_integral_reduction(const SettingPair& s) {
  const double c = s.cos_theta_ab();
  return (cap_solid_angle_above(c) - cap_solid_angle_below(c)) / (4.0 * kPi);
}

double local_baseline_correlation(double theta_rad) {
  if (!(theta_rad >= 0.0 && theta_rad <= kPi + 1e-12)) {
    throw std::domain_error("local_baseline_correlation: angle outside [0, pi]");
  }
  return -1.0 + 2.0 * theta_rad / kPi;
}

JointProbabilities joint_from_correlation(double correlation) {
  const double same = (1.0 + correlation) / 4.0;
  const double diff = (1.0 - correlation) / 4.0;
  return {same, diff, diff, same};
}

double chsh_value(const CorrelationFn& correlation, const ChshSettings& settings) {
  return correlation({settings.a, settings.b}) -
         correlation({settings.a, settings.b_prime}) +
         correlation({settings.a_prime, settings.b}) +
         correlation({settings.a_prime, settings.b_prime});
}

double model_correlation_reference(const ModelSpec& model, double theta_rad) {
  switch (model.kind()) {
    case ModelKind::kSingleSpin:
      return single_spin_expectation(model.bloch_vector(), planar_direction(theta_rad));
    case ModelKind::kSufficientCondition:
    case ModelKind::kComplete:
      return singlet_correlation(planar_setting_pair(theta_rad));
    case ModelKind::kLocalBaseline:
      return local_baseline_correlation(theta_rad);
  }
  throw std::logic_error("model_correlation_reference: unknown model kind");
}

CorrelationFn correlation_oracle(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::kSufficientCondition:
    case ModelKind::kComplete:
      return [](const SettingPair& s) { return singlet_correlation(s); };
    case ModelKind::kLocalBaseline:
      return [](const SettingPair& s) {
        return local_baseline_correlation(std::acos(s.cos_theta_ab()));
      };
    case ModelKind::kSingleSpin:
      throw UnsupportedModelError(
          "correlation_oracle: the single-spin model has no two-party correlation");
  }
  throw std::logic_error("correlation_oracle: unknown model kind");
}

}  // namespace spincorr
