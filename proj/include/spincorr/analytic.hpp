#pragma once

#include <functional>

#include "spincorr/models.hpp"
#include "spincorr/vec3.hpp"

namespace spincorr {

/// Exact joint outcome probabilities for the two-party models.
struct JointProbabilities {
  double pp = 0.0;  // P(X=+1, Y=+1)
  double pm = 0.0;  // P(X=+1, Y=-1)
  double mp = 0.0;  // P(X=-1, Y=+1)
  double mm = 0.0;  // P(X=-1, Y=-1)

  double correlation() const { return pp + mm - pm - mp; }
};

/// Standard Bell-test configuration: two settings per party.
struct ChshSettings {
  UnitVec3 a;
  UnitVec3 a_prime;
  UnitVec3 b;
  UnitVec3 b_prime;
};

/// Direction in the xz-plane at polar angle theta from +z.
UnitVec3 planar_direction(double theta_rad);

/// Planar setting pair with a along +z and b at angle theta from it.
SettingPair planar_setting_pair(double theta_rad);

/// The planar settings a=0, a'=90, b=45, b'=135 degrees, shared by every
/// CHSH test in the project.
ChshSettings standard_chsh_settings();

/// Exact singlet correlation, -a.b.
double singlet_correlation(const SettingPair& s);

/// The four exact joint probabilities at a given cos(theta_ab):
/// pp = mm = (1 - c)/4, pm = mp = (1 + c)/4.
JointProbabilities singlet_joint_probabilities(double cos_theta);

/// P(Y = y | X = x) for the singlet statistics: (1 - x*y*cos_theta)/2.
/// Division of the joint cell by the uniform marginal 1/2 forces this form.
double singlet_conditional(Sign y_given, Sign x, double cos_theta);

/// Exact single-spin expectation, P.a.
double single_spin_expectation(const Vec3& bloch, const UnitVec3& a);

/// Semi-analytic route to the singlet correlation: the difference of the two
/// cap solid angles over 4pi. Must agree with -a.b to 1e-12; this is the
/// independent check that the cap reduction reproduces the closed form.
double inner_integral_reduction(const SettingPair& s);

/// Exact correlation of the local baseline model, -1 + 2*theta/pi.
double local_baseline_correlation(double theta_rad);

/// Joint probabilities of any pair model with uniform marginals and the
/// (+,+) <-> (-,-) symmetry, expressed through its correlation E.
JointProbabilities joint_from_correlation(double correlation);

using CorrelationFn = std::function<double(const SettingPair&)>;

/// CHSH combination E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh_value(const CorrelationFn& correlation, const ChshSettings& settings);

/// Closed-form correlation of a catalog model at planar angle theta, used as
/// the reference column in CLI records. For the single-spin model this is
/// the expectation P.a(theta) of the lone outcome.
double model_correlation_reference(const ModelSpec& model, double theta_rad);

/// Closed-form correlation of a two-party catalog model as a function of
/// arbitrary settings. Rejects the single-spin model.
CorrelationFn correlation_oracle(const ModelSpec& model);

}  // namespace spincorr
