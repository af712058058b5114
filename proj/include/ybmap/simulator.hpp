#pragma once

// Row-major lattice evolution from staircase data, grid audits and export,
// and transfer-map chains.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybmap/quad.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap {

/// A plaquette solve hit a zero denominator. row/col name the corner being
/// solved.
class SingularPlaquette : public SingularInput {
 public:
  SingularPlaquette(std::size_t row, std::size_t col, const std::string& why);
  std::size_t row, col;
};

/// Values f(i, 0) for i < M and f(0, j) for j < N; axis1[0] and axis2[0] are
/// both the origin. For dpBSQ the origin is (f, g, h) and every other entry
/// is (f, g).
struct Staircase {
  QuadModel model;
  std::vector<SiteValue> axis1;
  std::vector<SiteValue> axis2;
  Scalar alpha1, alpha2;

  /// Throws std::invalid_argument when shapes do not fit the model.
  void validate() const;
};

struct Grid {
  QuadModel model;
  std::size_t rows = 0, cols = 0;
  std::vector<SiteValue> sites;  // row-major, f(i, j) at i * cols + j
  Scalar alpha1, alpha2;
  /// Largest bit height on each anti-diagonal i + j.
  std::vector<std::size_t> diagonal_height;

  const SiteValue& at(std::size_t i, std::size_t j) const { return sites[i * cols + j]; }
};

/// Fills the M x N grid by increasing i then j. Throws SingularPlaquette.
Grid evolve(const Staircase& staircase);

Staircase random_staircase(const QuadModel& model, std::size_t rows, std::size_t cols, Rng& rng,
                           int height = kDefaultHeight);

struct RandomEvolution {
  Staircase staircase;
  Grid grid;
  int resamples = 0;
};

/// Draws staircases from Rng(seed) until one fills without a singular
/// plaquette (at most kMaxResamples redraws).
RandomEvolution evolve_random(const QuadModel& model, std::size_t rows, std::size_t cols,
                              std::uint64_t seed, int height = kDefaultHeight);

struct GridAudit {
  std::size_t plaquettes = 0;
  std::size_t violations = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
  bool ok() const { return violations == 0; }
};

/// Recomputes the relation residual of every plaquette. For dpBSQ this
/// covers the edge relations too.
GridAudit audit_grid(const Grid& grid);

/// One line per row i; cells hold the value serialization, quoted when they
/// contain commas.
std::string to_csv(const Grid& grid);
nlohmann::json to_json(const Grid& grid, std::optional<std::uint64_t> seed = std::nullopt);

/// {"model"?, "alpha1", "alpha2", "axis1": [...], "axis2": [...]} with values
/// as "p/q" or "[p/q,...]". A "model" key, if present, must match `model`.
Staircase parse_staircase(const nlohmann::json& j, const QuadModel& model);

struct ChainResult {
  std::vector<TransferState> trajectory;
  std::optional<std::string> error;  // set when a step was singular
};

/// Iterates transfer_step `steps` times; a singular step ends the trajectory.
ChainResult evolve_chain(const YbMapSpec& spec, const TransferState& initial, int steps);

}  // namespace ybmap
