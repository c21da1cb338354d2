#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spincorr/models.hpp"
#include "spincorr/rng.hpp"
#include "spincorr/sphere.hpp"

using namespace spincorr;

namespace {
const UnitVec3 kZ(0, 0, 1);
const UnitVec3 kX(1, 0, 0);
}  // namespace

TEST_CASE("single-spin outcomes") {
  CHECK(single_spin_outcome({0, 0, 1}, kZ, kZ) == +1);
  CHECK(single_spin_outcome({0, 0, 0}, UnitVec3(0, 0, -1), kZ) == -1);
  CHECK_THROWS_AS(single_spin_outcome({0, 0, 1.5}, kZ, kZ), std::domain_error);
  CHECK_THROWS_AS(ModelSpec::single_spin({1.0, 1.0, 0.0}), std::domain_error);
}

TEST_CASE("single-spin mean reproduces P.a") {
  const Vec3 bloch{0, 0, 0.6};
  const int n = 1'000'000;
  SeededRng rng(101, 0);
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    sum += single_spin_outcome(bloch, sample_unit_vector(rng), kZ);
  }
  const double mean = static_cast<double>(sum) / n;
  const double sigma = std::sqrt((1.0 - 0.36) / n);
  CHECK(std::abs(mean - 0.6) < 4.0 * sigma);
}

TEST_CASE("product-only rule") {
  const SettingPair orthogonal{kZ, kX};
  CHECK(sufficient_condition_product({kZ, kZ}, orthogonal) == +1);
  CHECK(sufficient_condition_product({kZ, UnitVec3(0, 0, -1)}, orthogonal) == -1);
}

TEST_CASE("product mean reproduces -a.b") {
  const double theta = std::numbers::pi / 3.0;
  const SettingPair s{kZ, UnitVec3(std::sin(theta), 0, std::cos(theta))};
  const int n = 1'000'000;
  SeededRng rng(102, 0);
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    const UnitVec3 l1 = sample_unit_vector(rng);
    const UnitVec3 l2 = sample_unit_vector(rng);
    sum += sufficient_condition_product({l1, l2}, s);
  }
  const double mean = static_cast<double>(sum) / n;
  const double sigma = std::sqrt((1.0 - 0.25) / n);
  CHECK(std::abs(mean - (-0.5)) < 4.0 * sigma);
}

TEST_CASE("complete-model outcomes") {
  const SettingPair s{kZ, kX};
  const PairOutcome o1 = complete_outcomes({kZ, kZ}, s);
  CHECK(o1.x == +1);
  CHECK(o1.y == +1);

  const PairOutcome o2 = complete_outcomes({UnitVec3(0, 0, -1), kZ}, s);
  CHECK(o2.x == -1);
  CHECK(o2.y == +1);
}

TEST_CASE("per-trial product consistency is exact") {
  SeededRng rng(103, 0);
  for (int i = 0; i < 100000; ++i) {
    const HiddenPair h{sample_unit_vector(rng), sample_unit_vector(rng)};
    const SettingPair s{sample_unit_vector(rng), sample_unit_vector(rng)};
    const PairOutcome o = complete_outcomes(h, s);
    CHECK(o.x * o.y == sufficient_condition_product(h, s));
  }
}

TEST_CASE("X of the complete model is a function of (a, lambda1) alone") {
  SeededRng rng(104, 0);
  for (int i = 0; i < 50000; ++i) {
    const UnitVec3 l1 = sample_unit_vector(rng);
    const UnitVec3 a = sample_unit_vector(rng);
    const HiddenPair h1{l1, sample_unit_vector(rng)};
    const HiddenPair h2{l1, sample_unit_vector(rng)};
    const SettingPair s1{a, sample_unit_vector(rng)};
    const SettingPair s2{a, sample_unit_vector(rng)};
    CHECK(complete_outcomes(h1, s1).x == complete_outcomes(h2, s2).x);
  }
}

TEST_CASE("Y of the complete model depends on the distant setting") {
  SeededRng rng(105, 0);
  int flips = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const HiddenPair h{sample_unit_vector(rng), sample_unit_vector(rng)};
    const UnitVec3 b = sample_unit_vector(rng);
    const SettingPair s1{sample_unit_vector(rng), b};
    const SettingPair s2{sample_unit_vector(rng), b};
    flips += (complete_outcomes(h, s1).y != complete_outcomes(h, s2).y);
  }
  CHECK(flips > 0);
}

TEST_CASE("baseline outcomes and locality") {
  const SettingPair coincident{kZ, kZ};
  const PairOutcome o = local_baseline_outcomes(kZ, coincident);
  CHECK(o.x == +1);
  CHECK(o.y == -1);

  SeededRng rng(106, 0);
  for (int i = 0; i < 50000; ++i) {
    const UnitVec3 lambda = sample_unit_vector(rng);
    const UnitVec3 a = sample_unit_vector(rng);
    const UnitVec3 b = sample_unit_vector(rng);
    const SettingPair s1{a, sample_unit_vector(rng)};
    const SettingPair s2{a, sample_unit_vector(rng)};
    CHECK(local_baseline_outcomes(lambda, s1).x == local_baseline_outcomes(lambda, s2).x);
    const SettingPair s3{sample_unit_vector(rng), b};
    const SettingPair s4{sample_unit_vector(rng), b};
    CHECK(local_baseline_outcomes(lambda, s3).y == local_baseline_outcomes(lambda, s4).y);
  }
}

TEST_CASE("baseline is perfectly anticorrelated at coincident settings") {
  SeededRng rng(107, 0);
  const SettingPair s{kZ, kZ};
  for (int i = 0; i < 10000; ++i) {
    const PairOutcome o = local_baseline_outcomes(sample_unit_vector(rng), s);
    CHECK(o.y == -o.x);
  }
}

TEST_CASE("baseline correlation vanishes at orthogonal settings") {
  const SettingPair s{kZ, kX};
  const int n = 1'000'000;
  SeededRng rng(108, 0);
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    const PairOutcome o = local_baseline_outcomes(sample_unit_vector(rng), s);
    sum += o.x * o.y;
  }
  const double mean = static_cast<double>(sum) / n;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("model spec parsing and arity") {
  CHECK(ModelSpec::parse("complete").kind() == ModelKind::kComplete);
  CHECK(ModelSpec::parse("sufficient_condition").arity() == OutcomeArity::kProductOnly);
  CHECK(ModelSpec::parse("local_baseline").produces_pairs());
  CHECK(ModelSpec::parse("single_spin", {0, 0, 0.5}).arity() == OutcomeArity::kSingle);
  CHECK_THROWS_AS(ModelSpec::parse("bohm"), std::invalid_argument);
  CHECK_FALSE(ModelSpec::sufficient_condition().produces_pairs());
}
