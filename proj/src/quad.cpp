#include "ybmap/quad.hpp"

#include "ids.hpp"

namespace ybmap {
namespace {

void expect_arity(const SiteValue& v, std::size_t arity, const char* name) {
  if (v.size() != arity)
    throw std::invalid_argument(std::string("site value ") + name + " has " +
                                std::to_string(v.size()) + " components, expected " +
                                std::to_string(arity));
}

Scalar sq(const Scalar& x) { return x * x; }

}  // namespace

std::size_t QuadModel::arity() const {
  switch (family) {
    case QuadFamily::E1:
    case QuadFamily::E2:
    case QuadFamily::E3: return 1;
    case QuadFamily::MBsq: return 2;
    case QuadFamily::PBsq: return 3;
    case QuadFamily::Calapso: return n;
  }
  return 1;
}

std::string QuadModel::id() const {
  switch (family) {
    case QuadFamily::E1: return "e1";
    case QuadFamily::E2: return delta.is_zero() ? "e2" : "e2(" + detail::id_param(delta) + ")";
    case QuadFamily::E3: return "e3";
    case QuadFamily::MBsq: return "mbsq";
    case QuadFamily::PBsq: return "pbsq";
    case QuadFamily::Calapso: return "calapso(" + std::to_string(n) + ")";
  }
  return "?";
}


std::optional<QuadModel> QuadModel::parse(std::string_view id) {
  auto [name, arg] = detail::split_id(id);
  if (name == "e1" && !arg) return e1();
  if (name == "e3" && !arg) return e3();
  if (name == "mbsq" && !arg) return mbsq();
  if (name == "pbsq" && !arg) return pbsq();
  if (name == "e2") {
    if (!arg) return e2(Scalar(0));
    try {
      return e2(Scalar::parse(*arg));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  if (name == "calapso") {
    if (!arg) return calapso();
    auto n = detail::parse_dim(*arg);
    if (!n || *n < 1) return std::nullopt;
    return calapso(*n);
  }
  return std::nullopt;
}

SiteValue solve_corner(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                       const SiteValue& f2, const Scalar& a1, const Scalar& a2) {
  const std::size_t k = model.arity();
  expect_arity(f, k, "f");
  expect_arity(f1, k, "f1");
  expect_arity(f2, k, "f2");
  switch (model.family) {
    case QuadFamily::E1:
      return {f[0] + divide(a1 - a2, f1[0] - f2[0], "f1 - f2")};
    case QuadFamily::E2: {
      // a1 (f f1 + f2 f12) - a2 (f f2 + f1 f12) + delta (a1^2 - a2^2) = 0
      const Scalar num = a2 * f[0] * f2[0] - a1 * f[0] * f1[0] - model.delta * (sq(a1) - sq(a2));
      return {divide(num, a1 * f2[0] - a2 * f1[0], "a1 f2 - a2 f1")};
    }
    case QuadFamily::E3: {
      const Scalar A = (1 - sq(a2)) * (f1[0] - a1 * f[0]);
      const Scalar B = (1 - sq(a1)) * (f2[0] - a2 * f[0]);
      return {divide(B * f1[0] - A * f2[0], B * a2 - A * a1, "E3 corner coefficient")};
    }
    case QuadFamily::MBsq: {
      const Scalar &fv = f[0], &g = f[1];
      const Scalar &fa = f1[0], &ga = f1[1], &fb = f2[0], &gb = f2[1];
      const Scalar den = a1 * ga - a2 * gb;
      const Scalar f12 = g * divide(a1 * fb - a2 * fa, den, "a1 g1 - a2 g2");
      const Scalar g12 = divide(g, fv, "f") * divide(a1 * fa * gb - a2 * fb * ga, den, "a1 g1 - a2 g2");
      return {f12, g12};
    }
    case QuadFamily::Calapso: {
      const RVector d = f1 - f2;
      return f + divide(a1 - a2, d.norm2(), "|f1 - f2|^2") * d;
    }
    case QuadFamily::PBsq:
      throw std::invalid_argument("dpBSQ corners are solved from staircase data only");
  }
  throw std::logic_error("unknown quad family");
}

RVector quad_residual(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                      const SiteValue& f2, const SiteValue& f12, const Scalar& a1,
                      const Scalar& a2) {
  const std::size_t k = model.arity();
  expect_arity(f, k, "f");
  expect_arity(f1, k, "f1");
  expect_arity(f2, k, "f2");
  expect_arity(f12, k, "f12");
  switch (model.family) {
    case QuadFamily::E1:
      return {(f12[0] - f[0]) * (f1[0] - f2[0]) - a1 + a2};
    case QuadFamily::E2:
      return {a1 * (f[0] * f1[0] + f2[0] * f12[0]) - a2 * (f[0] * f2[0] + f1[0] * f12[0]) +
              model.delta * (sq(a1) - sq(a2))};
    case QuadFamily::E3:
      return {(1 - sq(a2)) * (f1[0] - a1 * f[0]) * (f2[0] - a1 * f12[0]) -
              (1 - sq(a1)) * (f2[0] - a2 * f[0]) * (f1[0] - a2 * f12[0])};
    case QuadFamily::MBsq: {
      const Scalar den = a1 * f1[1] - a2 * f2[1];
      return {f12[0] * den - f[1] * (a1 * f2[0] - a2 * f1[0]),
              f[0] * f12[1] * den - f[1] * (a1 * f1[0] * f2[1] - a2 * f2[0] * f1[1])};
    }
    case QuadFamily::Calapso: {
      const RVector d = f1 - f2;
      return d.norm2() * (f12 - f) - (a1 - a2) * d;
    }
    case QuadFamily::PBsq: {
      // h1 = f f1 - g, h2 = f f2 - g, their shifts to the far corner, and
      // (h - f f12 + g12)(f1 - f2) + (a1 - a2) = 0.
      const Scalar &fv = f[0], &g = f[1], &h = f[2];
      return {f1[2] - fv * f1[0] + g,
              f2[2] - fv * f2[0] + g,
              f12[2] - f2[0] * f12[0] + f2[1],
              f12[2] - f1[0] * f12[0] + f1[1],
              (h - fv * f12[0] + f12[1]) * (f1[0] - f2[0]) + (a1 - a2)};
    }
  }
  throw std::logic_error("unknown quad family");
}

PbsqCorner solve_pbsq_staircase(const SiteValue& f, const SiteValue& f1, const SiteValue& f2,
                                const Scalar& a1, const Scalar& a2) {
  expect_arity(f, 3, "f");
  expect_arity(f1, 2, "f1");
  expect_arity(f2, 2, "f2");
  const Scalar &fv = f[0], &g = f[1], &h = f[2];
  const Scalar df = f1[0] - f2[0];
  PbsqCorner out;
  out.h1 = fv * f1[0] - g;
  out.h2 = fv * f2[0] - g;
  const Scalar f12 = divide(f1[1] - f2[1], df, "f1 - f2");
  const Scalar h12 = f2[0] * f12 - f2[1];
  const Scalar g12 = fv * f12 - h - divide(a1 - a2, df, "f1 - f2");
  out.f12 = {f12, g12, h12};
  return out;
}

Scalar closed_triple_e1(const Scalar& /*f*/, const Scalar& f1, const Scalar& f2, const Scalar& f3,
                        const Scalar& a1, const Scalar& a2, const Scalar& a3) {
  const Scalar num = (a1 - a2) * f1 * f2 + (a3 - a1) * f1 * f3 + (a2 - a3) * f2 * f3;
  const Scalar den = (a2 - a1) * f3 + (a1 - a3) * f2 + (a3 - a2) * f1;
  return divide(num, den, "3-cube closed-form denominator");
}

Scalar closed_quad_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                      const std::array<Scalar, 4>& alphas) {
  auto pair = [&](std::size_t i, std::size_t j) {
    return f + divide(alphas[i] - alphas[j], fs[i] - fs[j], "f_i - f_j");
  };
  static constexpr std::array<std::array<std::size_t, 3>, 3> kCycle{{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}};
  Scalar num, den;
  for (const auto& [i, j, k] : kCycle) {
    const Scalar w = (fs[0] - fs[i]) * (fs[j] - fs[k]);
    num += (alphas[0] * alphas[i] * pair(0, i) + alphas[j] * alphas[k] * pair(j, k)) * w;
    den += (alphas[0] * alphas[i] + alphas[j] * alphas[k]) * w;
  }
  return divide(num, den, "4-cube closed-form denominator");
}

SiteValue closed_triple_mbsq(const SiteValue& fg, const std::array<SiteValue, 3>& fgs,
                             const std::array<Scalar, 3>& a) {
  expect_arity(fg, 2, "(f, g)");
  for (const auto& p : fgs) expect_arity(p, 2, "(f_i, g_i)");
  auto F = [&](std::size_t i) -> const Scalar& { return fgs[i][0]; };
  auto G = [&](std::size_t i) -> const Scalar& { return fgs[i][1]; };
  static constexpr std::array<std::array<std::size_t, 3>, 3> kCycle{{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}};
  Scalar num_f, num_g, den;
  for (const auto& [i, j, k] : kCycle) {
    num_f += a[i] * a[j] * F(k) * (a[i] * G(i) - a[j] * G(j));
    num_g += a[i] * a[j] * G(k) * (a[i] * F(j) - a[j] * F(i));
    den += a[i] * a[j] * (a[i] * F(i) * G(j) - a[j] * F(j) * G(i));
  }
  return {fg[0] * divide(num_f, den, "dmBSQ closed-form denominator"),
          fg[1] * divide(num_g, den, "dmBSQ closed-form denominator")};
}

SiteValue closed_triple_calapso(const SiteValue& f, const std::array<SiteValue, 3>& fs,
                                const std::array<Scalar, 3>& a) {
  for (const auto& v : fs) expect_arity(v, f.size(), "f_i");
  const Scalar lambda = (a[0] - a[1]) * (a[0] - a[2]);
  const Scalar mu = (a[0] - a[1]) * (a[1] - a[2]);
  const Scalar nu = (a[0] - a[2]) * (a[1] - a[2]);
  const Scalar c1 = lambda * (fs[1] - fs[2]).norm2();
  const Scalar c2 = -mu * (fs[0] - fs[2]).norm2();
  const Scalar c3 = nu * (fs[0] - fs[1]).norm2();
  const Scalar den = c1 + c2 + c3;
  return divide(1, den, "Calapso closed-form denominator") * (c1 * fs[0] + c2 * fs[1] + c3 * fs[2]);
}

std::optional<SiteValue> closed_triple(const QuadModel& model, const SiteValue& f,
                                       const std::array<SiteValue, 3>& fs,
                                       const std::array<Scalar, 3>& a) {
  switch (model.family) {
    case QuadFamily::E1:
      return SiteValue{closed_triple_e1(f[0], fs[0][0], fs[1][0], fs[2][0], a[0], a[1], a[2])};
    case QuadFamily::MBsq: return closed_triple_mbsq(f, fs, a);
    case QuadFamily::Calapso: return closed_triple_calapso(f, fs, a);
    default: return std::nullopt;
  }
}

}  // namespace ybmap
