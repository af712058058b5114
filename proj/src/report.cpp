#include "ybmap/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <thread>

namespace ybmap {

nlohmann::json to_json(const Scalar& s) { return s.str(); }

nlohmann::json to_json(const RVector& v) { return to_string(v); }

nlohmann::json Report::to_json(bool with_time) const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["target"] = target;
  j["trials"] = trials;
  j["passes"] = passes;
  j["failure_count"] = failure_count();
  j["failures"] = failures;
  j["singular_resamples"] = singular_resamples;
  j["aborted"] = aborted;
  j["seed"] = seed;
  j["height"] = height;
  j["asserted"] = asserted;
  j["ok"] = ok();
  if (!details.empty()) j["details"] = details;
  if (with_time) j["wall_seconds"] = wall_seconds;
  return j;
}

namespace {

struct Slot {
  std::optional<TrialOutcome> outcome;  // empty when aborted
  int resamples = 0;
};

Slot run_one(const TrialFn& trial, std::uint64_t seed, int index, int height) {
  Rng rng = Rng(seed).split(static_cast<std::uint64_t>(index));
  Slot slot;
  for (;;) {
    try {
      slot.outcome = trial(rng, height);
      return slot;
    } catch (const SingularInput&) {
      if (++slot.resamples > kMaxResamples) return slot;
    }
  }
}

}  // namespace

Report run_trials(std::string suite, std::string target, int trials, std::uint64_t seed, int height,
                  const TrialFn& trial) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Slot> slots(static_cast<std::size_t>(std::max(trials, 0)));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < trials;) slots[t] = run_one(trial, seed, t, height);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int n_workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(std::max(trials, 1))));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  Report r;
  r.suite = std::move(suite);
  r.target = std::move(target);
  r.trials = trials;
  r.seed = seed;
  r.height = height;
  for (std::size_t t = 0; t < slots.size(); ++t) {
    const Slot& s = slots[t];
    r.singular_resamples += s.resamples;
    if (!s.outcome) {
      ++r.aborted;
    } else if (s.outcome->passed) {
      ++r.passes;
    } else {
      nlohmann::json w = s.outcome->witness;
      w["trial"] = t;
      r.failures.push_back(std::move(w));
    }
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ybmap
