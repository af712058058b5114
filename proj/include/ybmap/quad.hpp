#pragma once

// Corner solvers for the quad-graph equations and their closed-form
// multi-cube values.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ybmap/field.hpp"

namespace ybmap {

/// A lattice-site value: one field (length 1), (f, g), (f, g, h), or a vector.
using SiteValue = RVector;

enum class QuadFamily { E1, E2, E3, MBsq, PBsq, Calapso };

/// One of the lattice equations. `delta` is used by E2 only, `n` by Calapso only.
struct QuadModel {
  QuadFamily family = QuadFamily::E1;
  Scalar delta;
  std::size_t n = 1;

  static QuadModel e1() { return {QuadFamily::E1, Scalar(0), 1}; }
  static QuadModel e2(Scalar delta) { return {QuadFamily::E2, std::move(delta), 1}; }
  static QuadModel e3() { return {QuadFamily::E3, Scalar(0), 1}; }
  static QuadModel mbsq() { return {QuadFamily::MBsq, Scalar(0), 1}; }
  static QuadModel pbsq() { return {QuadFamily::PBsq, Scalar(0), 1}; }
  static QuadModel calapso(std::size_t n = 3) { return {QuadFamily::Calapso, Scalar(0), n}; }

  /// Number of Scalars per site.
  std::size_t arity() const;
  /// Stable identifier: e1, e2, e2(1), e3, mbsq, pbsq, calapso(n).
  std::string id() const;
  /// Inverse of id(); also accepts "e2:1", "calapso:2" and bare "calapso" (n = 3).
  static std::optional<QuadModel> parse(std::string_view id);

  friend bool operator==(const QuadModel&, const QuadModel&) = default;
};

/// Per-direction lattice parameters alpha_1..alpha_d.
using DirectionParams = std::vector<Scalar>;

/// Solves the model's quad relation for f12. Not defined for dpBSQ, which
/// needs the staircase data of solve_pbsq_staircase.
SiteValue solve_corner(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                       const SiteValue& f2, const Scalar& a1, const Scalar& a2);

/// Residual of the model's defining relation (denominators cleared). All
/// components are zero exactly when the relation holds. For dpBSQ the sites
/// are full triples and the residual stacks both edge relations, their shifts,
/// and the plaquette relation.
RVector quad_residual(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                      const SiteValue& f2, const SiteValue& f12, const Scalar& a1,
                      const Scalar& a2);

struct PbsqCorner {
  Scalar h1;
  Scalar h2;
  SiteValue f12;  // (f12, g12, h12)
};

/// Staircase Cauchy step for dpBSQ: f is (f, g, h), f1 and f2 are (f, g) pairs.
PbsqCorner solve_pbsq_staircase(const SiteValue& f, const SiteValue& f1, const SiteValue& f2,
                                const Scalar& a1, const Scalar& a2);

/// Far corner of a dpKdV 3-cube from f, f_i and alpha_i. Symmetric in the
/// index pairs and independent of f.
Scalar closed_triple_e1(const Scalar& f, const Scalar& f1, const Scalar& f2, const Scalar& f3,
                        const Scalar& a1, const Scalar& a2, const Scalar& a3);

/// Far corner of a dpKdV 4-cube via the cyclic-sum formula over
/// (i,j,k) = (2,3,4), (4,2,3), (3,4,2).
Scalar closed_quad_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                      const std::array<Scalar, 4>& alphas);

/// (f123, g123) for dmBSQ from (f, g) and the three (f_i, g_i).
SiteValue closed_triple_mbsq(const SiteValue& fg, const std::array<SiteValue, 3>& fgs,
                             const std::array<Scalar, 3>& alphas);

SiteValue closed_triple_calapso(const SiteValue& f, const std::array<SiteValue, 3>& fs,
                                const std::array<Scalar, 3>& alphas);

/// Closed form for any model that has one (E1, dmBSQ, Calapso).
std::optional<SiteValue> closed_triple(const QuadModel& model, const SiteValue& f,
                                       const std::array<SiteValue, 3>& fs,
                                       const std::array<Scalar, 3>& alphas);

}  // namespace ybmap
