#pragma once

// Randomized verification suites. Each returns a Report whose witnesses
// replay the failing trial without the RNG.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybmap/bridge.hpp"
#include "ybmap/quad.hpp"
#include "ybmap/report.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap {

inline constexpr int kDefaultMapTrials = 1000;
inline constexpr int kDefaultCube3Trials = 500;
inline constexpr int kDefaultCube4Trials = 200;
inline constexpr int kDefaultBridgeTrials = 200;
inline constexpr int kDefaultEquivalenceTrials = 500;
inline constexpr int kDefaultTetrahedronTrials = 100;

/// dim 3: all three far-face evaluations agree and match the closed form when
/// there is one. dim 4 (dpKdV only): six evaluations, the cyclic-sum closed
/// form, and its invariance under 10 sampled index permutations per trial.
/// Throws std::invalid_argument for any other dimension or model.
Report consistency_suite(const QuadModel& model, int dim, int trials, std::uint64_t seed,
                         int height = kDefaultHeight);

/// Points and parameters are sampled for `spec`; `map` is what gets checked.
Report yb_suite(const YbMapSpec& spec, const BinaryMap& map, int trials, std::uint64_t seed,
                int height = kDefaultHeight);
Report yb_suite(const YbMapSpec& spec, int trials, std::uint64_t seed, int height = kDefaultHeight);

/// Unasserted for pBSQ.
Report reversibility_suite(const YbMapSpec& spec, int trials, std::uint64_t seed,
                           int height = kDefaultHeight);

/// Checks map_relations(spec) on the output of `map`.
Report conservation_suite(const YbMapSpec& spec, const BinaryMap& map, int trials, std::uint64_t seed,
                          int height = kDefaultHeight);
Report conservation_suite(const YbMapSpec& spec, int trials, std::uint64_t seed,
                          int height = kDefaultHeight);

enum class Equivalence { F3Table1, HarrisonF1 };
std::string equivalence_name(Equivalence e);  // "f3-table1", "harrison-f1"
Report equivalence_suite(Equivalence e, int trials, std::uint64_t seed, int height = kDefaultHeight);

/// Known outcome: holds for dpKdV and Calapso, fails for dmBSQ.
std::optional<bool> expected_tetrahedron(const QuadModel& model);
Report tetrahedron_suite(const QuadModel& model, int trials, std::uint64_t seed,
                         int height = kDefaultHeight);

/// Every model, map, scheme and equivalence at its default trial count, or
/// at `trials` for all of them when given.
std::vector<Report> run_all(std::optional<int> trials, std::uint64_t seed, int height = kDefaultHeight);

/// {"schema", "suite", "ok", "failed": [...], "reports": [...]}.
nlohmann::json aggregate_report(const std::string& suite, const std::vector<Report>& reports,
                                std::uint64_t seed, bool with_time = true);

}  // namespace ybmap
