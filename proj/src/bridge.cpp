#include "ybmap/bridge.hpp"

#include "ids.hpp"

namespace ybmap {

InvariantScheme InvariantScheme::make(SchemeId id, Scalar delta, std::size_t n) {
  switch (id) {
    case SchemeId::E1Translation: return {id, QuadModel::e1(), YbMapSpec::adler(), 2};
    case SchemeId::E1Scaling: return {id, QuadModel::e1(), YbMapSpec::f4(), 2};
    case SchemeId::E2Scaling: return {id, QuadModel::e2(delta), YbMapSpec::e2_table(delta), 2};
    case SchemeId::E3Scaling: return {id, QuadModel::e3(), YbMapSpec::e3_table(), 2};
    case SchemeId::Z3SubgroupH: return {id, QuadModel::e1(), YbMapSpec::f3(), 3};
    case SchemeId::Z4FullG: return {id, QuadModel::e1(), YbMapSpec::harrison(), 4};
    case SchemeId::MBsqScalings: return {id, QuadModel::mbsq(), YbMapSpec::mbsq(), 2};
    case SchemeId::PBsqV1V2: return {id, QuadModel::pbsq(), YbMapSpec::pbsq(), 2};
    case SchemeId::CalapsoTranslation: return {id, QuadModel::calapso(n), YbMapSpec::calapso(n), 2};
    case SchemeId::SigmaConstrained: return {id, QuadModel::calapso(n), YbMapSpec::sigma(n), 2};
  }
  throw std::logic_error("unknown scheme");
}

std::string InvariantScheme::name() const {
  switch (id) {
    case SchemeId::E1Translation: return "e1-translation";
    case SchemeId::E1Scaling: return "e1-scaling";
    case SchemeId::E2Scaling: return "e2-scaling(" + detail::id_param(source.delta) + ")";
    case SchemeId::E3Scaling: return "e3-scaling";
    case SchemeId::Z3SubgroupH: return "z3-subgroup-h";
    case SchemeId::Z4FullG: return "z4-full-g";
    case SchemeId::MBsqScalings: return "mbsq-scalings";
    case SchemeId::PBsqV1V2: return "pbsq-v1v2";
    case SchemeId::CalapsoTranslation: return "calapso-translation(" + std::to_string(source.n) + ")";
    case SchemeId::SigmaConstrained: return "sigma-constrained(" + std::to_string(source.n) + ")";
  }
  return "?";
}

std::optional<InvariantScheme> InvariantScheme::parse(std::string_view text) {
  auto [name, arg] = detail::split_id(text);
  auto plain = [&](SchemeId id) -> std::optional<InvariantScheme> {
    if (arg) return std::nullopt;
    return make(id);
  };
  if (name == "e1-translation") return plain(SchemeId::E1Translation);
  if (name == "e1-scaling") return plain(SchemeId::E1Scaling);
  if (name == "e3-scaling") return plain(SchemeId::E3Scaling);
  if (name == "z3-subgroup-h") return plain(SchemeId::Z3SubgroupH);
  if (name == "z4-full-g") return plain(SchemeId::Z4FullG);
  if (name == "mbsq-scalings" || name == "mbsq") return plain(SchemeId::MBsqScalings);
  if (name == "pbsq-v1v2" || name == "pbsq") return plain(SchemeId::PBsqV1V2);
  if (name == "e2-scaling") {
    if (!arg) return make(SchemeId::E2Scaling);
    try {
      return make(SchemeId::E2Scaling, Scalar::parse(*arg));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  if (name == "calapso-translation" || name == "calapso" || name == "sigma-constrained") {
    const SchemeId id = name == "sigma-constrained" ? SchemeId::SigmaConstrained : SchemeId::CalapsoTranslation;
    if (!arg) return make(id);
    auto n = detail::parse_dim(*arg);
    if (!n || *n < 1 || (id == SchemeId::SigmaConstrained && *n < 2)) return std::nullopt;
    return make(id, 1, *n);
  }
  return std::nullopt;
}

std::vector<InvariantScheme> all_schemes(std::size_t vector_dim) {
  return {InvariantScheme::make(SchemeId::E1Translation),
          InvariantScheme::make(SchemeId::E1Scaling),
          InvariantScheme::make(SchemeId::E2Scaling, 0),
          InvariantScheme::make(SchemeId::E2Scaling, 1),
          InvariantScheme::make(SchemeId::E3Scaling),
          InvariantScheme::make(SchemeId::Z3SubgroupH),
          InvariantScheme::make(SchemeId::Z4FullG),
          InvariantScheme::make(SchemeId::MBsqScalings),
          InvariantScheme::make(SchemeId::PBsqV1V2),
          InvariantScheme::make(SchemeId::CalapsoTranslation, 1, vector_dim),
          InvariantScheme::make(SchemeId::SigmaConstrained, 1, vector_dim)};
}

EdgeInvariants extract_edge_invariants(const InvariantScheme& scheme, const HypercubeData& face) {
  if (face.dimension != 2) throw std::invalid_argument(scheme.name() + " reads a single quadrilateral");
  const SiteValue &f = face.at(0), &f1 = face.at(1), &f2 = face.at(2), &f12 = face.at(3);
  const Scalar &a1 = face.alphas[0], &a2 = face.alphas[1];
  switch (scheme.id) {
    case SchemeId::E1Translation:
    case SchemeId::CalapsoTranslation:
    case SchemeId::SigmaConstrained:
      return {f1 - f, f12 - f1, f12 - f2, f2 - f};
    case SchemeId::E1Scaling:
      return {{f[0] * f1[0]}, {f1[0] * f12[0]}, {f2[0] * f12[0]}, {f[0] * f2[0]}};
    case SchemeId::E2Scaling:
      return {{divide(f[0] * f1[0], a1, "alpha1")},
              {divide(f1[0] * f12[0], a2, "alpha2")},
              {divide(f2[0] * f12[0], a1, "alpha1")},
              {divide(f[0] * f2[0], a2, "alpha2")}};
    case SchemeId::E3Scaling:
      return {{divide(f1[0], a1 * f[0], "alpha1 f")},
              {divide(f12[0], a2 * f1[0], "alpha2 f1")},
              {divide(f12[0], a1 * f2[0], "alpha1 f2")},
              {divide(f2[0], a2 * f[0], "alpha2 f")}};
    case SchemeId::MBsqScalings: {
      auto ratio = [](const SiteValue& top, const SiteValue& bottom) {
        return YbPoint{divide(top[0], bottom[0], "f"), divide(top[1], bottom[1], "g")};
      };
      return {ratio(f1, f), ratio(f12, f1), ratio(f12, f2), ratio(f2, f)};
    }
    case SchemeId::PBsqV1V2: {
      // Invariants of (f, g, h) -> (f + e, g + e f + e^2/2, h + e f + e^2/2)
      // and (f, g, h) -> (f, g + e, h - e) along the edge from `a` to `b`.
      auto edge = [](const SiteValue& a, const SiteValue& b) {
        const Scalar df = b[0] - a[0];
        return YbPoint{df, b[1] - a[1] - a[0] * df, b[2] - a[2] - a[0] * df};
      };
      return {edge(f, f1), edge(f1, f12), edge(f2, f12), edge(f, f2)};
    }
    case SchemeId::Z3SubgroupH:
    case SchemeId::Z4FullG:
      break;
  }
  throw std::invalid_argument(scheme.name() + " does not live on edges");
}

EdgeInvariants extract_z3_invariants(const HypercubeData& cube) {
  if (cube.dimension != 3) throw std::invalid_argument("Z^3 invariants need a 3-cube");
  auto at = [&](std::initializer_list<int> dirs) -> const Scalar& { return cube.at(mask_of(dirs))[0]; };
  return {{at({1}) - at({3})}, {at({1, 2}) - at({1, 3})}, {at({1, 2}) - at({2, 3})}, {at({2}) - at({3})}};
}

EdgeInvariants extract_z4_invariants(const HypercubeData& hc) {
  if (hc.dimension != 4) throw std::invalid_argument("Z^4 invariants need a 4-cube");
  // (f_a - f_c) / (f_b - f_c) with every vertex shifted by `shift`.
  auto ratio = [&](int a, int b, int c, unsigned shift, const char* name) {
    const Scalar& fa = hc.at(mask_of({a}) | shift)[0];
    const Scalar& fb = hc.at(mask_of({b}) | shift)[0];
    const Scalar& fc = hc.at(mask_of({c}) | shift)[0];
    return divide(fa - fc, fb - fc, name);
  };
  const unsigned s3 = mask_of({3}), s4 = mask_of({4});
  return {{ratio(1, 2, 3, 0, "f2 - f3")},
          {ratio(1, 2, 4, s3, "(f2 - f4)_3")},
          {ratio(1, 2, 3, s4, "(f2 - f3)_4")},
          {ratio(1, 2, 4, 0, "f2 - f4")}};
}

EdgeInvariants extract_invariants(const InvariantScheme& scheme, const HypercubeData& data) {
  switch (scheme.id) {
    case SchemeId::Z3SubgroupH: return extract_z3_invariants(data);
    case SchemeId::Z4FullG: return extract_z4_invariants(data);
    default: return extract_edge_invariants(scheme, data);
  }
}

std::pair<Scalar, Scalar> scheme_map_params(const InvariantScheme& scheme, const DirectionParams& a) {
  switch (scheme.id) {
    case SchemeId::E2Scaling:
    case SchemeId::E3Scaling: return {a[0] * a[0], a[1] * a[1]};
    case SchemeId::Z3SubgroupH: return {a[0] - a[2], a[1] - a[2]};
    case SchemeId::Z4FullG:
      return {divide(a[1] - a[2], a[0] - a[2], "alpha1 - alpha3"),
              divide(a[1] - a[3], a[0] - a[3], "alpha1 - alpha4")};
    default: return {a[0], a[1]};
  }
}

nlohmann::json BridgeWitness::to_json() const {
  nlohmann::json j;
  nlohmann::json vertices = nlohmann::json::object();
  for (unsigned m = 0; m < lattice.vertices.size(); ++m)
    if (lattice.filled(m)) vertices[vertex_label(m)] = to_string(lattice.at(m));
  j["lattice"] = vertices;
  nlohmann::json alphas = nlohmann::json::array();
  for (const auto& a : lattice.alphas) alphas.push_back(a.str());
  j["alphas"] = alphas;
  j["params"] = {p1.str(), p2.str()};
  j["extracted"] = {{"x", to_string(extracted.x)}, {"y", to_string(extracted.y)},
                    {"u", to_string(extracted.u)}, {"v", to_string(extracted.v)}};
  j["mapped"] = {{"u", to_string(mapped_u)}, {"v", to_string(mapped_v)}};
  nlohmann::json bad = nlohmann::json::object();
  for (const auto& r : relation_residuals)
    if (!r.value.is_zero()) bad[r.name] = r.value.str();
  j["nonzero_residuals"] = bad;
  j["match"] = match;
  return j;
}

BridgeWitness bridge_check(const InvariantScheme& scheme, const HypercubeData& data) {
  BridgeWitness w;
  w.lattice = data;
  w.extracted = extract_invariants(scheme, data);
  std::tie(w.p1, w.p2) = scheme_map_params(scheme, data.alphas);
  MapResult mapped = apply(scheme.target, w.extracted.x, w.extracted.y, w.p1, w.p2);
  w.mapped_u = std::move(mapped.u);
  w.mapped_v = std::move(mapped.v);
  const EdgeInvariants& e = w.extracted;
  w.relation_residuals = map_relations(scheme.target, e.x, e.y, e.u, e.v, w.p1, w.p2);
  if (scheme.id == SchemeId::SigmaConstrained) {
    w.relation_residuals.push_back({"|x|^2=2+a1", e.x.norm2() - 2 - data.alphas[0]});
    w.relation_residuals.push_back({"|y|^2=2+a2", e.y.norm2() - 2 - data.alphas[1]});
  }
  w.match = w.mapped_u == e.u && w.mapped_v == e.v && relations_hold(w.relation_residuals);
  return w;
}

HypercubeData sample_lattice(const InvariantScheme& scheme, Rng& rng, int height) {
  const QuadModel& model = scheme.source;
  const std::size_t k = model.arity();
  switch (scheme.id) {
    case SchemeId::Z3SubgroupH: {
      const SiteValue f = sample_vector(rng, 1, height);
      const std::array<SiteValue, 3> fs{sample_vector(rng, 1, height), sample_vector(rng, 1, height),
                                        sample_vector(rng, 1, height)};
      const std::array<Scalar, 3> a{sample_scalar(rng, height), sample_scalar(rng, height),
                                    sample_scalar(rng, height)};
      return fill_cube_3d(model, f, fs, a);
    }
    case SchemeId::Z4FullG: {
      const Scalar f = sample_scalar(rng, height);
      std::array<Scalar, 4> fs, a;
      for (auto& v : fs) v = sample_scalar(rng, height);
      for (auto& v : a) v = sample_scalar(rng, height);
      return fill_hypercube_e1(f, fs, a);
    }
    case SchemeId::PBsqV1V2: {
      const SiteValue f = sample_vector(rng, 3, height);
      const SiteValue f1 = sample_vector(rng, 2, height);
      const SiteValue f2 = sample_vector(rng, 2, height);
      const Scalar a1 = sample_scalar(rng, height), a2 = sample_scalar(rng, height);
      const PbsqCorner c = solve_pbsq_staircase(f, f1, f2, a1, a2);
      HypercubeData face(2, {a1, a2});
      face.set(0, f);
      face.set(1, {f1[0], f1[1], c.h1});
      face.set(2, {f2[0], f2[1], c.h2});
      face.set(3, c.f12);
      return face;
    }
    case SchemeId::SigmaConstrained: {
      // Points on the unit sphere; the lattice parameters follow from
      // -2 f.f1 = alpha1 and -2 f.f2 = alpha2.
      const SiteValue f = sample_unit_vector(rng, k, height);
      const SiteValue f1 = sample_unit_vector(rng, k, height);
      const SiteValue f2 = sample_unit_vector(rng, k, height);
      const Scalar a1 = -2 * f.dot(f1), a2 = -2 * f.dot(f2);
      HypercubeData face(2, {a1, a2});
      face.set(0, f);
      face.set(1, f1);
      face.set(2, f2);
      face.set(3, solve_corner(model, f, f1, f2, a1, a2));
      return face;
    }
    default: {
      const SiteValue f = sample_vector(rng, k, height);
      const SiteValue f1 = sample_vector(rng, k, height);
      const SiteValue f2 = sample_vector(rng, k, height);
      const Scalar a1 = sample_scalar(rng, height), a2 = sample_scalar(rng, height);
      HypercubeData face(2, {a1, a2});
      face.set(0, f);
      face.set(1, f1);
      face.set(2, f2);
      face.set(3, solve_corner(model, f, f1, f2, a1, a2));
      return face;
    }
  }
}

Report cross_validate(const InvariantScheme& scheme, std::uint64_t seed, int trials, int height) {
  Report r = run_trials("bridge", scheme.name(), trials, seed, height, [&scheme](Rng& rng, int h) {
    const HypercubeData data = sample_lattice(scheme, rng, h);
    const BridgeWitness w = bridge_check(scheme, data);
    return TrialOutcome{w.match, w.match ? nlohmann::json() : w.to_json()};
  });
  r.details["source_model"] = scheme.source.id();
  r.details["target_map"] = scheme.target.id();
  r.details["dimension"] = scheme.dimension;
  return r;
}

}  // namespace ybmap
