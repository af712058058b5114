#pragma once

// Face-by-face fills of 3- and 4-cubes, comparison of evaluation orders, and
// the tetrahedron property.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ybmap/field.hpp"
#include "ybmap/quad.hpp"

namespace ybmap {

/// Values on the vertices {0,1}^d. Vertex masks use bit (i-1) for direction i,
/// so vertex(0b101) is f_{1,3}.
struct HypercubeData {
  int dimension = 0;
  std::vector<std::optional<SiteValue>> vertices;
  DirectionParams alphas;

  HypercubeData() = default;
  HypercubeData(int d, DirectionParams params);

  bool filled(unsigned mask) const { return vertices.at(mask).has_value(); }
  bool complete() const;
  const SiteValue& at(unsigned mask) const;
  void set(unsigned mask, SiteValue v) { vertices.at(mask) = std::move(v); }
};

/// Vertex mask from 1-based direction indices, e.g. mask_of({1, 3}) == 0b101.
unsigned mask_of(std::initializer_list<int> directions);
/// "f", "f_1", "f_1,2,4", ...
std::string vertex_label(unsigned mask);

struct CandidateValue {
  SiteValue value;
  std::string path;  // which face produced it
};

struct ConsistencyReport {
  std::vector<CandidateValue> candidates;
  bool consistent = false;
  std::optional<bool> closed_form_match;
  bool singular_encountered = false;
  std::string singular_reason;
};

/// Fills the 3-cube from f, f_1, f_2, f_3 and evaluates f_123 on each of the
/// three far faces. Singular faces are flagged in the report, not thrown.
ConsistencyReport check_3d(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                           const SiteValue& f2, const SiteValue& f3,
                           const std::array<Scalar, 3>& alphas);

/// Fills all 8 vertices of a 3-cube from f and f_1, f_2, f_3; f_123 comes
/// from the (1,2) face over f_3. Throws SingularInput.
HypercubeData fill_cube_3d(const QuadModel& model, const SiteValue& f, const std::array<SiteValue, 3>& fs,
                           const std::array<Scalar, 3>& alphas);

/// Fills all 16 vertices of the dpKdV 4-cube. f_{ijk} comes from the first
/// far face of each 3-cube and f_1234 from the (1,2) face. Throws SingularInput.
HypercubeData fill_hypercube_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                                const std::array<Scalar, 4>& alphas);

/// The six evaluations of f_1234 (one per 2-face through the top vertex) and a
/// comparison against closed_quad_e1.
ConsistencyReport check_4d_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                              const std::array<Scalar, 4>& alphas);

/// Counts 2-faces of a filled cube whose relation residual is nonzero.
std::size_t count_face_violations(const QuadModel& model, const HypercubeData& cube);

struct TetrahedronWitness {
  SiteValue f_a, f_b;
  std::array<SiteValue, 3> fs;
  std::array<Scalar, 3> alphas;
  SiteValue far_a, far_b;
};

struct TetrahedronResult {
  bool holds = true;
  std::optional<TetrahedronWitness> witness;
  int trials_run = 0;
  int singular_resamples = 0;
};

/// Property holds iff f_123 does not depend on f for every sampled
/// (f_i, alpha_i) and pair of distinct initial values f.
TetrahedronResult tetrahedron_test(const QuadModel& model, Rng& rng, int trials,
                                   int height = kDefaultHeight);

}  // namespace ybmap
