#pragma once

// Catalog of parametric Yang-Baxter maps, the R^{ij} action on n-tuples, and
// the YB / reversibility / equivalence checkers.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybmap/field.hpp"

namespace ybmap {

/// Element of a map's carrier set: scalar (length 1), pair, triple or vector.
using YbPoint = RVector;

enum class MapFamily { Adler, F4, F3, Harrison, E2Table, E3Table, F1, MBsq, PBsq, Calapso, Sigma };

/// Which parameter each slot carries. Gamma is alpha^2 for the E2/E3 tables
/// and a cross-ratio of alphas for Harrison; Beta is alpha_i - alpha_3.
enum class ParamKind { Alpha, Gamma, Beta, None };

struct YbMapSpec {
  MapFamily family = MapFamily::Adler;
  Scalar delta;       // E2 table only
  std::size_t n = 3;  // Calapso and Sigma only

  static YbMapSpec adler() { return {MapFamily::Adler, 0, 1}; }
  static YbMapSpec f4() { return {MapFamily::F4, 0, 1}; }
  static YbMapSpec f3() { return {MapFamily::F3, 0, 1}; }
  static YbMapSpec harrison() { return {MapFamily::Harrison, 0, 1}; }
  static YbMapSpec e2_table(Scalar delta) { return {MapFamily::E2Table, std::move(delta), 1}; }
  static YbMapSpec e3_table() { return {MapFamily::E3Table, 0, 1}; }
  static YbMapSpec f1() { return {MapFamily::F1, 0, 1}; }
  static YbMapSpec mbsq() { return {MapFamily::MBsq, 0, 2}; }
  static YbMapSpec pbsq() { return {MapFamily::PBsq, 0, 3}; }
  static YbMapSpec calapso(std::size_t n = 3) { return {MapFamily::Calapso, 0, n}; }
  static YbMapSpec sigma(std::size_t n = 3) { return {MapFamily::Sigma, 0, n}; }

  std::size_t point_arity() const;
  ParamKind param_kind() const;
  /// adler, f4, f3, harrison, e2, e2(1), e3, f1, mbsq, pbsq, calapso(n), sigma(n)
  std::string id() const;
  static std::optional<YbMapSpec> parse(std::string_view id);

  friend bool operator==(const YbMapSpec&, const YbMapSpec&) = default;
};

/// Every catalog family, with E2 at delta 0 and 1 and the given vector size.
std::vector<YbMapSpec> catalog(std::size_t vector_dim = 3);

/// Named intermediates of one evaluation (Q, P, A, B, Gamma, ...).
struct EvalTrace {
  std::vector<std::pair<std::string, Scalar>> entries;

  void put(std::string name, Scalar value) { entries.emplace_back(std::move(name), std::move(value)); }
  std::optional<Scalar> get(std::string_view name) const;
};

struct MapResult {
  YbPoint u;
  YbPoint v;
  EvalTrace trace;
};

/// (u, v) = R(p1, p2)(x, y). Throws SingularInput naming the vanishing denominator.
MapResult apply(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y, const Scalar& p1,
                const Scalar& p2);

/// Any parametric map X x X -> X x X. The checkers take this so that mutated
/// formulas can be fed through the same machinery as catalog maps.
using BinaryMap = std::function<std::pair<YbPoint, YbPoint>(const YbPoint&, const YbPoint&,
                                                             const Scalar&, const Scalar&)>;
BinaryMap as_binary_map(const YbMapSpec& spec);

/// Points x^1..x^n and the parameter carried by each slot.
struct TransferState {
  std::vector<YbPoint> points;
  std::vector<Scalar> params;

  friend bool operator==(const TransferState&, const TransferState&) = default;
};

/// R^{ij} with 1-based slots. For i < j slot i gets f(x^i, x^j) and slot j
/// gets g(x^i, x^j); for i > j slot j gets g(x^i, x^j) and slot i gets
/// f(x^i, x^j). The map is evaluated with parameters (p_i, p_j).
TransferState apply_rij(const BinaryMap& map, std::size_t i, std::size_t j, TransferState state);

struct YbSides {
  std::vector<YbPoint> lhs;  // R23 R13 R12 (x, y, z)
  std::vector<YbPoint> rhs;  // R12 R13 R23 (x, y, z)
  bool equal() const { return lhs == rhs; }
};

YbSides yb_sides(const BinaryMap& map, const YbPoint& x, const YbPoint& y, const YbPoint& z,
                 const Scalar& a1, const Scalar& a2, const Scalar& a3);
bool check_yb(const BinaryMap& map, const YbPoint& x, const YbPoint& y, const YbPoint& z,
              const Scalar& a1, const Scalar& a2, const Scalar& a3);
bool check_yb(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y, const YbPoint& z,
              const Scalar& a1, const Scalar& a2, const Scalar& a3);

/// R^{21}(a2, a1) R(a1, a2) (x, y) == (x, y).
bool check_reversibility(const BinaryMap& map, const YbPoint& x, const YbPoint& y,
                         const Scalar& a1, const Scalar& a2);
bool check_reversibility(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y,
                         const Scalar& a1, const Scalar& a2);

/// Change of variables from a source map's (x, y, u, v) to a target map's.
struct Substitution {
  std::function<Scalar(const Scalar&)> x, y, u, v;
};

/// target(sub.x(x), sub.y(y)) == (sub.u(u), sub.v(v)) where (u, v) = source(x, y).
bool verify_conjugation(const BinaryMap& source, const BinaryMap& target, const Substitution& sub,
                        const Scalar& p1, const Scalar& p2, const Scalar& x, const Scalar& y);

/// X = -1/x, Y = y/beta2, U = u/beta1, V = -1/v.
Substitution f3_to_table1_substitution(const Scalar& beta1, const Scalar& beta2);
/// X = 1/x, Y = gamma2 y, U = gamma1 u, V = 1/v.
Substitution harrison_to_f1_substitution(const Scalar& gamma1, const Scalar& gamma2);

/// F3 map conjugated into the delta = 0 E2-table map with gamma_i = beta_i.
bool verify_equivalence_f3_table1(const Scalar& beta1, const Scalar& beta2, const Scalar& x,
                                  const Scalar& y);
/// Harrison map conjugated into the F_I map.
bool verify_equivalence_harrison_f1(const Scalar& gamma1, const Scalar& gamma2, const Scalar& x,
                                    const Scalar& y);

/// Monodromy-style sweep R^{1,2}, R^{1,3}, ..., R^{1,n}.
TransferState transfer_step(const BinaryMap& map, TransferState state);

struct NamedResidual {
  std::string name;
  Scalar value;
};

/// Functional relations each family satisfies between (x, y) and (u, v):
/// the conserved sum or product and the lattice relation written in the YB
/// variables. Denominators are cleared; a correct map gives all zeros.
std::vector<NamedResidual> map_relations(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y,
                                         const YbPoint& u, const YbPoint& v, const Scalar& p1,
                                         const Scalar& p2);
bool relations_hold(const std::vector<NamedResidual>& residuals);

/// Uniformly sampled carrier point for the family.
YbPoint sample_point(const YbMapSpec& spec, Rng& rng, int height);

}  // namespace ybmap
