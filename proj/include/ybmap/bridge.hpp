#pragma once

// Symmetry invariants of solved lattice data, cross-checked against the YB
// map they are supposed to satisfy.
//
// Each scheme fixes a source equation, the invariants read off its solved
// data (edge values on Z^2, face values on Z^3 and Z^4), and the catalog map
// that must carry (x, y) to (u, v). The invariants are the ones already known
// for each equation; nothing here derives them from symmetry generators.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybmap/consistency.hpp"
#include "ybmap/quad.hpp"
#include "ybmap/report.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap {

enum class SchemeId {
  E1Translation,
  E1Scaling,
  E2Scaling,
  E3Scaling,
  Z3SubgroupH,
  Z4FullG,
  MBsqScalings,
  PBsqV1V2,
  CalapsoTranslation,
  SigmaConstrained,
};

struct InvariantScheme {
  SchemeId id = SchemeId::E1Translation;
  QuadModel source;
  YbMapSpec target;
  int dimension = 2;

  static InvariantScheme make(SchemeId id, Scalar delta = 1, std::size_t n = 3);
  /// e1-translation, e1-scaling, e2-scaling[(delta)], e3-scaling, z3-subgroup-h,
  /// z4-full-g, mbsq-scalings, pbsq-v1v2, calapso-translation[(n)],
  /// sigma-constrained[(n)]
  std::string name() const;
  static std::optional<InvariantScheme> parse(std::string_view name);
};

/// Every scheme; e2-scaling appears for delta = 0 and delta = 1.
std::vector<InvariantScheme> all_schemes(std::size_t vector_dim = 3);

struct EdgeInvariants {
  YbPoint x, y, u, v;
};

/// Invariants on the edges of one solved quadrilateral (d = 2). For dpBSQ the
/// face holds full (f, g, h) triples at all four vertices.
EdgeInvariants extract_edge_invariants(const InvariantScheme& scheme, const HypercubeData& face);

/// x = f1 - f3, y = f12 - f13, u = f12 - f23, v = f2 - f3 on a filled dpKdV 3-cube.
EdgeInvariants extract_z3_invariants(const HypercubeData& cube);

/// x = (f1 - f3)/(f2 - f3), v = (f1 - f4)/(f2 - f4), y = v shifted along 3,
/// u = x shifted along 4, on a filled dpKdV 4-cube.
EdgeInvariants extract_z4_invariants(const HypercubeData& hypercube);

EdgeInvariants extract_invariants(const InvariantScheme& scheme, const HypercubeData& data);

/// Map parameters the scheme derives from the lattice parameters: alphas,
/// alpha^2, alpha_i - alpha_3, or the cross-ratios gamma_1, gamma_2.
std::pair<Scalar, Scalar> scheme_map_params(const InvariantScheme& scheme, const DirectionParams& alphas);

struct BridgeWitness {
  HypercubeData lattice;
  EdgeInvariants extracted;
  Scalar p1, p2;
  YbPoint mapped_u, mapped_v;
  std::vector<NamedResidual> relation_residuals;
  bool match = false;

  nlohmann::json to_json() const;
};

/// Extracts, applies the target map and evaluates every functional relation.
BridgeWitness bridge_check(const InvariantScheme& scheme, const HypercubeData& data);

/// Samples initial data for the scheme and fills it with the source model.
/// Throws SingularInput when the fill or the extraction hits a zero denominator.
HypercubeData sample_lattice(const InvariantScheme& scheme, Rng& rng, int height);

Report cross_validate(const InvariantScheme& scheme, std::uint64_t seed, int trials,
                      int height = kDefaultHeight);

}  // namespace ybmap
