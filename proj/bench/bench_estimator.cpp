// Throughput comparison of the parallel shard loop against the serial
// reference, and a check that both produce identical counts.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>

#include "spincorr/analytic.hpp"
#include "spincorr/estimator.hpp"

using namespace spincorr;

namespace {

struct Timing {
  JointCounts counts;
  double seconds = 0.0;
};

template <typename RunFn>
Timing timed(RunFn&& run, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  JointCounts counts = run(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  return {counts, std::chrono::duration<double>(t1 - t0).count()};
}

bool identical(const JointCounts& a, const JointCounts& b) {
  return a.n_pp == b.n_pp && a.n_pm == b.n_pm && a.n_mp == b.n_mp && a.n_mm == b.n_mm &&
         a.n_plus == b.n_plus && a.n_minus == b.n_minus && a.total == b.total;
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t trials = argc > 1 ? std::stoll(argv[1]) : 4'000'000;
  const int shards = argc > 2 ? std::stoi(argv[2]) : 16;

  const SettingPair settings = planar_setting_pair(std::numbers::pi / 3.0);
  const ModelSpec models[] = {ModelSpec::complete(), ModelSpec::sufficient_condition(),
                              ModelSpec::local_baseline(),
                              ModelSpec::single_spin({0.0, 0.0, 0.6})};

  std::printf("%-22s %12s %12s %10s %8s\n", "model", "serial Mt/s", "parallel Mt/s",
              "speedup", "match");
  bool all_match = true;
  for (const ModelSpec& model : models) {
    RunConfig cfg{model, settings, trials, 42, shards, 0};
    const Timing serial = timed(run_trials_serial, cfg);
    const Timing parallel = timed(run_trials, cfg);
    const bool match = identical(serial.counts, parallel.counts);
    all_match = all_match && match;
    const double mt = static_cast<double>(trials) / 1e6;
    std::printf("%-22s %12.2f %12.2f %9.2fx %8s\n", model.name().c_str(),
                mt / serial.seconds, mt / parallel.seconds,
                serial.seconds / parallel.seconds, match ? "yes" : "NO");
  }
  std::printf("\ntrials per model: %lld, shards: %d\n",
              static_cast<long long>(trials), shards);
  return all_match ? 0 : 1;
}
