#pragma once

// Trial harness and the machine-readable report every suite returns.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybmap/field.hpp"

namespace ybmap {

inline constexpr const char* kReportSchema = "ybmap-lab/1";

struct Report {
  std::string suite;
  std::string target;
  int trials = 0;
  int passes = 0;
  std::vector<nlohmann::json> failures;  // replayable witnesses, in trial order
  int singular_resamples = 0;
  int aborted = 0;  // trials that hit the resample bound
  std::uint64_t seed = 0;
  int height = kDefaultHeight;
  double wall_seconds = 0.0;
  /// Unasserted suites are reported but never fail a run.
  bool asserted = true;
  nlohmann::json details = nlohmann::json::object();

  int failure_count() const { return static_cast<int>(failures.size()); }
  bool ok() const { return !asserted || failures.empty(); }
  nlohmann::json to_json(bool with_time = true) const;
};

struct TrialOutcome {
  bool passed = false;
  nlohmann::json witness;  // inputs (and observed values) in canonical serialization
};

/// One trial. Throwing SingularInput requests a resample from the same stream.
using TrialFn = std::function<TrialOutcome(Rng& rng, int height)>;

/// Runs `trials` trials on a worker pool. Trial t draws from Rng(seed).split(t),
/// so the report depends only on (seed, trials, height).
Report run_trials(std::string suite, std::string target, int trials, std::uint64_t seed, int height,
                  const TrialFn& trial);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const RVector& v);

}  // namespace ybmap
