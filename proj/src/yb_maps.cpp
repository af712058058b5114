#include "ybmap/yb_maps.hpp"

#include "ids.hpp"

namespace ybmap {
namespace {

void expect_arity(const YbPoint& p, std::size_t k, const char* name) {
  if (p.size() != k)
    throw std::invalid_argument(std::string("YB point ") + name + " has " + std::to_string(p.size()) +
                                " components, expected " + std::to_string(k));
}

Scalar sq(const Scalar& x) { return x * x; }

}  // namespace

std::size_t YbMapSpec::point_arity() const {
  switch (family) {
    case MapFamily::MBsq: return 2;
    case MapFamily::PBsq: return 3;
    case MapFamily::Calapso:
    case MapFamily::Sigma: return n;
    default: return 1;
  }
}

ParamKind YbMapSpec::param_kind() const {
  switch (family) {
    case MapFamily::F3: return ParamKind::Beta;
    case MapFamily::Harrison:
    case MapFamily::E2Table:
    case MapFamily::E3Table:
    case MapFamily::F1: return ParamKind::Gamma;
    case MapFamily::Sigma: return ParamKind::None;
    default: return ParamKind::Alpha;
  }
}

std::string YbMapSpec::id() const {
  switch (family) {
    case MapFamily::Adler: return "adler";
    case MapFamily::F4: return "f4";
    case MapFamily::F3: return "f3";
    case MapFamily::Harrison: return "harrison";
    case MapFamily::E2Table: return delta.is_zero() ? "e2" : "e2(" + detail::id_param(delta) + ")";
    case MapFamily::E3Table: return "e3";
    case MapFamily::F1: return "f1";
    case MapFamily::MBsq: return "mbsq";
    case MapFamily::PBsq: return "pbsq";
    case MapFamily::Calapso: return "calapso(" + std::to_string(n) + ")";
    case MapFamily::Sigma: return "sigma(" + std::to_string(n) + ")";
  }
  return "?";
}

std::optional<YbMapSpec> YbMapSpec::parse(std::string_view id) {
  auto [name, arg] = detail::split_id(id);
  if (!arg) {
    if (name == "adler") return adler();
    if (name == "f4") return f4();
    if (name == "f3") return f3();
    if (name == "harrison") return harrison();
    if (name == "e2") return e2_table(0);
    if (name == "e3") return e3_table();
    if (name == "f1") return f1();
    if (name == "mbsq") return mbsq();
    if (name == "pbsq") return pbsq();
    if (name == "calapso") return calapso();
    if (name == "sigma") return sigma();
    return std::nullopt;
  }
  if (name == "e2") {
    try {
      return e2_table(Scalar::parse(*arg));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  if (name == "calapso" || name == "sigma") {
    auto n = detail::parse_dim(*arg);
    if (!n || *n < 1 || (name == "sigma" && *n < 2)) return std::nullopt;
    return name == "calapso" ? calapso(*n) : sigma(*n);
  }
  return std::nullopt;
}

std::vector<YbMapSpec> catalog(std::size_t vector_dim) {
  return {YbMapSpec::adler(),    YbMapSpec::f4(),          YbMapSpec::f3(),
          YbMapSpec::harrison(), YbMapSpec::e2_table(0),   YbMapSpec::e2_table(1),
          YbMapSpec::e3_table(), YbMapSpec::f1(),          YbMapSpec::mbsq(),
          YbMapSpec::pbsq(),     YbMapSpec::calapso(vector_dim), YbMapSpec::sigma(vector_dim)};
}

std::optional<Scalar> EvalTrace::get(std::string_view name) const {
  for (const auto& [k, v] : entries)
    if (k == name) return v;
  return std::nullopt;
}

namespace {

// u = y Q, v = x / Q with the ratio shared by Harrison and the E3 table map.
MapResult harrison_like(const Scalar& x, const Scalar& y, const Scalar& g1, const Scalar& g2) {
  const Scalar num = (1 - g2) + (g2 - g1) * x + g2 * (g1 - 1) * x * y;
  const Scalar den = (1 - g1) + (g1 - g2) * y + g1 * (g2 - 1) * x * y;
  const Scalar q = divide(num, den, "Q denominator");
  MapResult r{{y * q}, {divide(x, q, "Q")}, {}};
  r.trace.put("Q", q);
  return r;
}

}  // namespace

MapResult apply(const YbMapSpec& spec, const YbPoint& xp, const YbPoint& yp, const Scalar& p1,
                const Scalar& p2) {
  const std::size_t k = spec.point_arity();
  expect_arity(xp, k, "x");
  expect_arity(yp, k, "y");
  switch (spec.family) {
    case MapFamily::Adler: {
      const Scalar &x = xp[0], &y = yp[0];
      const Scalar c = divide(p1 - p2, x + y, "x + y");
      return {{y + c}, {x - c}, {}};
    }
    case MapFamily::F4: {
      const Scalar &x = xp[0], &y = yp[0];
      const Scalar k4 = 1 + divide(p1 - p2, x - y, "x - y");
      return {{y * k4}, {x * k4}, {}};
    }
    case MapFamily::F3: {
      const Scalar &x = xp[0], &y = yp[0];
      const Scalar pv = divide(p1 + x * y, p2 + x * y, "beta2 + x y");
      MapResult r{{y * pv}, {divide(x, pv, "P")}, {}};
      r.trace.put("P", pv);
      return r;
    }
    case MapFamily::Harrison:
    case MapFamily::E3Table:
      return harrison_like(xp[0], yp[0], p1, p2);
    case MapFamily::E2Table: {
      const Scalar &x = xp[0], &y = yp[0];
      const Scalar k2 = divide(p1 * (x + spec.delta) - p2 * (y + spec.delta), x - y, "x - y");
      return {{divide(y, p1, "gamma1") * k2}, {divide(x, p2, "gamma2") * k2}, {}};
    }
    case MapFamily::F1: {
      const Scalar &x = xp[0], &y = yp[0];
      const Scalar num = (1 - p2) * x + p2 - p1 + (p1 - 1) * y;
      const Scalar den = p2 * (1 - p1) * x + (p1 - p2) * x * y + p1 * (p2 - 1) * y;
      const Scalar q = divide(num, den, "Q~ denominator");
      MapResult r{{p1 * y * q}, {p2 * x * q}, {}};
      r.trace.put("Q~", q);
      return r;
    }
    case MapFamily::MBsq: {
      const Scalar &x1 = xp[0], &x2 = xp[1], &y1 = yp[0], &y2 = yp[1];
      const Scalar num = sq(p1) * x1 + sq(p2) * x1 * x2 * y1 + p1 * p2 * x2 * y2;
      const Scalar a = divide(num, p1 * p2 * x1 + sq(p1) * x1 * x2 * y1 + sq(p2) * x2 * y2, "A denominator");
      const Scalar b = divide(num, sq(p2) * x1 + p1 * p2 * x1 * x2 * y1 + sq(p1) * x2 * y2, "B denominator");
      MapResult r{{y1 * a, y2 * b}, {divide(x1, a, "A"), divide(x2, b, "B")}, {}};
      r.trace.put("A", a);
      r.trace.put("B", b);
      return r;
    }
    case MapFamily::PBsq: {
      const Scalar &x1 = xp[0], &x2 = xp[1], &x3 = xp[2];
      const Scalar &y1 = yp[0], &y2 = yp[1], &y3 = yp[2];
      const Scalar d = p1 - p2;
      const Scalar gamma = x2 - x3 + x1 * y1 + y2;
      const Scalar ig = inverse(gamma, "Gamma");
      MapResult r{{y1 - d * ig, y2 + d * (d - 2 * y1 * gamma) * ig * ig,
                   y3 + d * (d + (x1 - y1) * gamma) * ig * ig},
                  {x1 + d * ig, x2 + d * (x1 + y1) * ig, x3},
                  {}};
      r.trace.put("Gamma", gamma);
      return r;
    }
    case MapFamily::Calapso: {
      const RVector s = xp + yp;
      const Scalar c = divide(p1 - p2, s.norm2(), "|x + y|^2");
      MapResult r{yp + c * s, xp - c * s, {}};
      r.trace.put("coefficient", c);
      return r;
    }
    case MapFamily::Sigma: {
      const RVector s = xp + yp;
      const Scalar c = divide(xp.norm2() - yp.norm2(), s.norm2(), "|x + y|^2");
      MapResult r{yp + c * s, xp - c * s, {}};
      r.trace.put("coefficient", c);
      return r;
    }
  }
  throw std::logic_error("unknown map family");
}

BinaryMap as_binary_map(const YbMapSpec& spec) {
  return [spec](const YbPoint& x, const YbPoint& y, const Scalar& p1, const Scalar& p2) {
    MapResult r = apply(spec, x, y, p1, p2);
    return std::pair{std::move(r.u), std::move(r.v)};
  };
}

TransferState apply_rij(const BinaryMap& map, std::size_t i, std::size_t j, TransferState state) {
  const std::size_t n = state.points.size();
  if (state.params.size() != n) throw std::invalid_argument("one parameter per slot");
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::out_of_range("R^{ij} slot indices out of range");
  const std::size_t a = i - 1, b = j - 1;
  auto [fv, gv] = map(state.points[a], state.points[b], state.params[a], state.params[b]);
  // Either ordering leaves f(x^i, x^j) in slot i and g(x^i, x^j) in slot j.
  state.points[a] = std::move(fv);
  state.points[b] = std::move(gv);
  return state;
}

YbSides yb_sides(const BinaryMap& map, const YbPoint& x, const YbPoint& y, const YbPoint& z,
                 const Scalar& a1, const Scalar& a2, const Scalar& a3) {
  const TransferState start{{x, y, z}, {a1, a2, a3}};
  const TransferState left = apply_rij(map, 2, 3, apply_rij(map, 1, 3, apply_rij(map, 1, 2, start)));
  const TransferState right = apply_rij(map, 1, 2, apply_rij(map, 1, 3, apply_rij(map, 2, 3, start)));
  return {left.points, right.points};
}

bool check_yb(const BinaryMap& map, const YbPoint& x, const YbPoint& y, const YbPoint& z,
              const Scalar& a1, const Scalar& a2, const Scalar& a3) {
  return yb_sides(map, x, y, z, a1, a2, a3).equal();
}

bool check_yb(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y, const YbPoint& z,
              const Scalar& a1, const Scalar& a2, const Scalar& a3) {
  return check_yb(as_binary_map(spec), x, y, z, a1, a2, a3);
}

bool check_reversibility(const BinaryMap& map, const YbPoint& x, const YbPoint& y,
                         const Scalar& a1, const Scalar& a2) {
  const TransferState start{{x, y}, {a1, a2}};
  return apply_rij(map, 2, 1, apply_rij(map, 1, 2, start)) == start;
}

bool check_reversibility(const YbMapSpec& spec, const YbPoint& x, const YbPoint& y,
                         const Scalar& a1, const Scalar& a2) {
  return check_reversibility(as_binary_map(spec), x, y, a1, a2);
}

bool verify_conjugation(const BinaryMap& source, const BinaryMap& target, const Substitution& sub,
                        const Scalar& p1, const Scalar& p2, const Scalar& x, const Scalar& y) {
  const auto [u, v] = source(YbPoint{x}, YbPoint{y}, p1, p2);
  const auto [tu, tv] = target(YbPoint{sub.x(x)}, YbPoint{sub.y(y)}, p1, p2);
  return tu == YbPoint{sub.u(u[0])} && tv == YbPoint{sub.v(v[0])};
}

Substitution f3_to_table1_substitution(const Scalar& beta1, const Scalar& beta2) {
  return {[](const Scalar& x) { return -inverse(x, "x"); },
          [beta2](const Scalar& y) { return divide(y, beta2, "beta2"); },
          [beta1](const Scalar& u) { return divide(u, beta1, "beta1"); },
          [](const Scalar& v) { return -inverse(v, "v"); }};
}

Substitution harrison_to_f1_substitution(const Scalar& gamma1, const Scalar& gamma2) {
  return {[](const Scalar& x) { return inverse(x, "x"); },
          [gamma2](const Scalar& y) { return gamma2 * y; },
          [gamma1](const Scalar& u) { return gamma1 * u; },
          [](const Scalar& v) { return inverse(v, "v"); }};
}

bool verify_equivalence_f3_table1(const Scalar& beta1, const Scalar& beta2, const Scalar& x,
                                  const Scalar& y) {
  return verify_conjugation(as_binary_map(YbMapSpec::f3()), as_binary_map(YbMapSpec::e2_table(0)),
                            f3_to_table1_substitution(beta1, beta2), beta1, beta2, x, y);
}

bool verify_equivalence_harrison_f1(const Scalar& gamma1, const Scalar& gamma2, const Scalar& x,
                                    const Scalar& y) {
  return verify_conjugation(as_binary_map(YbMapSpec::harrison()), as_binary_map(YbMapSpec::f1()),
                            harrison_to_f1_substitution(gamma1, gamma2), gamma1, gamma2, x, y);
}

TransferState transfer_step(const BinaryMap& map, TransferState state) {
  const std::size_t n = state.points.size();
  if (n < 2) throw std::invalid_argument("transfer step needs at least two slots");
  for (std::size_t j = 2; j <= n; ++j) state = apply_rij(map, 1, j, std::move(state));
  return state;
}

std::vector<NamedResidual> map_relations(const YbMapSpec& spec, const YbPoint& xp, const YbPoint& yp,
                                         const YbPoint& up, const YbPoint& vp, const Scalar& p1,
                                         const Scalar& p2) {
  const std::size_t k = spec.point_arity();
  expect_arity(xp, k, "x");
  expect_arity(yp, k, "y");
  expect_arity(up, k, "u");
  expect_arity(vp, k, "v");
  std::vector<NamedResidual> out;
  auto vector_rel = [&out](const std::string& name, const RVector& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back({name + "[" + std::to_string(i) + "]", r[i]});
  };
  switch (spec.family) {
    case MapFamily::Adler: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"x+y=u+v", x + y - u - v});
      out.push_back({"(x+y)(x-v)=a1-a2", (x + y) * (x - v) - (p1 - p2)});
      break;
    }
    case MapFamily::F4: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"xu=yv", x * u - y * v});
      out.push_back({"y+v-x-u=a1-a2", y + v - x - u - (p1 - p2)});
      break;
    }
    case MapFamily::F3: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"uv=xy", u * v - x * y});
      out.push_back({"u-b1/x=y-b2/v", x * v * (u - y) - (p1 * v - p2 * x)});
      break;
    }
    case MapFamily::Harrison:
    case MapFamily::E3Table: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"xy=uv", x * y - u * v});
      out.push_back({"(1-g2)(1-1/x)(1-g1 u)=(1-g1)(1-1/v)(1-g2 y)",
                     (1 - p2) * (x - 1) * v * (1 - p1 * u) - (1 - p1) * (v - 1) * x * (1 - p2 * y)});
      break;
    }
    case MapFamily::E2Table: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"g1 x u=g2 y v", p1 * x * u - p2 * y * v});
      out.push_back({"g1(x+u+d)=g2(y+v+d)", p1 * (x + u + spec.delta) - p2 * (y + v + spec.delta)});
      break;
    }
    case MapFamily::F1: {
      const Scalar &x = xp[0], &y = yp[0], &u = up[0], &v = vp[0];
      out.push_back({"g2 x u=g1 y v", p2 * x * u - p1 * y * v});
      out.push_back({"(1-g2)(1-x)(1-u)=(1-g1)(1-v)(1-y)",
                     (1 - p2) * (1 - x) * (1 - u) - (1 - p1) * (1 - v) * (1 - y)});
      break;
    }
    case MapFamily::MBsq: {
      const Scalar &x1 = xp[0], &x2 = xp[1], &y1 = yp[0], &y2 = yp[1];
      const Scalar &u1 = up[0], &u2 = up[1], &v1 = vp[0], &v2 = vp[1];
      const Scalar den = p1 * x2 - p2 * v2;
      out.push_back({"x1y1=u1v1", x1 * y1 - u1 * v1});
      out.push_back({"x2y2=u2v2", x2 * y2 - u2 * v2});
      out.push_back({"u1v1 lattice", u1 * v1 * den - (p1 * v1 - p2 * x1)});
      out.push_back({"u2v2 lattice", u2 * v2 * den - (p1 * x1 * v2 - p2 * v1 * x2)});
      break;
    }
    case MapFamily::PBsq: {
      const Scalar &x1 = xp[0], &x2 = xp[1], &x3 = xp[2];
      const Scalar &y1 = yp[0], &y2 = yp[1], &y3 = yp[2];
      const Scalar &u1 = up[0], &u2 = up[1], &u3 = up[2];
      const Scalar &v1 = vp[0], &v2 = vp[1], &v3 = vp[2];
      const Scalar d = p1 - p2;
      const Scalar w = x1 - v1;
      out.push_back({"u1+v1=x1+y1", u1 + v1 - x1 - y1});
      out.push_back({"u2+v2=x2+y2+x1y1-u1v1", u2 + v2 - (x2 + y2 + x1 * y1 - u1 * v1)});
      out.push_back({"u3+v3=x3+y3+x1y1-u1v1", u3 + v3 - (x3 + y3 + x1 * y1 - u1 * v1)});
      out.push_back({"x1 lattice", (x1 + y1) * w - (x2 - v2)});
      out.push_back({"x3 lattice", (x3 - x2 - y2 - x1 * y1) * w - d});
      out.push_back({"v3 lattice", (v3 - u2 - v2 - u1 * v1) * w - d});
      break;
    }
    case MapFamily::Calapso: {
      const RVector s = xp + yp;
      vector_rel("x+y=u+v", s - up - vp);
      vector_rel("(u-y)|x+y|^2=(a1-a2)(x+y)", s.norm2() * (up - yp) - (p1 - p2) * s);
      break;
    }
    case MapFamily::Sigma:
      out.push_back({"|u|^2=|x|^2", up.norm2() - xp.norm2()});
      out.push_back({"|v|^2=|y|^2", vp.norm2() - yp.norm2()});
      vector_rel("x+y=u+v", xp + yp - up - vp);
      break;
  }
  return out;
}

bool relations_hold(const std::vector<NamedResidual>& residuals) {
  for (const auto& r : residuals)
    if (!r.value.is_zero()) return false;
  return true;
}

YbPoint sample_point(const YbMapSpec& spec, Rng& rng, int height) {
  return sample_vector(rng, spec.point_arity(), height);
}

}  // namespace ybmap
