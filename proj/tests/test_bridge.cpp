#include <doctest.h>

#include "ybmap/bridge.hpp"

using namespace ybmap;

TEST_CASE("scheme names round-trip") {
  const auto all = all_schemes();
  CHECK(all.size() == 11);
  for (const auto& s : all) {
    const auto back = InvariantScheme::parse(s.name());
    REQUIRE_MESSAGE(back, s.name());
    CHECK(back->name() == s.name());
  }
  CHECK(InvariantScheme::parse("e2-scaling")->source == QuadModel::e2(1));
  CHECK(InvariantScheme::parse("e2-scaling(0)")->target == YbMapSpec::e2_table(0));
  CHECK(InvariantScheme::parse("sigma-constrained(2)")->source == QuadModel::calapso(2));
  CHECK_FALSE(InvariantScheme::parse("sigma-constrained(1)"));
  CHECK_FALSE(InvariantScheme::parse("z5-full-g"));
  CHECK_FALSE(InvariantScheme::parse("z4-full-g(2)"));
}

TEST_CASE("scheme parameters") {
  const DirectionParams a{Scalar(5), Scalar(3), Scalar(1), Scalar(-1)};
  CHECK(scheme_map_params(InvariantScheme::make(SchemeId::E1Translation), a) == std::pair{Scalar(5), Scalar(3)});
  CHECK(scheme_map_params(InvariantScheme::make(SchemeId::E3Scaling), a) == std::pair{Scalar(25), Scalar(9)});
  CHECK(scheme_map_params(InvariantScheme::make(SchemeId::Z3SubgroupH), a) == std::pair{Scalar(4), Scalar(2)});
  CHECK(scheme_map_params(InvariantScheme::make(SchemeId::Z4FullG), a) ==
        std::pair{make_scalar(1, 2), make_scalar(2, 3)});
}

TEST_CASE("translation invariants of a hand-solved quad") {
  // f = 0, f1 = 1, f2 = -1, alpha = (1, 3) gives f12 = -1.
  const auto scheme = InvariantScheme::make(SchemeId::E1Translation);
  HypercubeData face(2, {Scalar(1), Scalar(3)});
  face.set(0, {Scalar(0)});
  face.set(1, {Scalar(1)});
  face.set(2, {Scalar(-1)});
  face.set(3, {Scalar(-1)});
  const auto w = bridge_check(scheme, face);
  CHECK(w.extracted.x == RVector{Scalar(1)});
  CHECK(w.extracted.y == RVector{Scalar(-2)});
  CHECK(w.extracted.u == RVector{Scalar(0)});
  CHECK(w.extracted.v == RVector{Scalar(-1)});
  CHECK(w.match);
  face.set(3, {Scalar(2)});
  const auto bad = bridge_check(scheme, face);
  CHECK_FALSE(bad.match);
  CHECK_FALSE(bad.to_json()["nonzero_residuals"].empty());
}

TEST_CASE("every scheme maps sampled lattice invariants onto its YB map") {
  for (const auto& scheme : all_schemes(2)) {
    Rng rng(77);
    int run = 0;
    for (int t = 0; t < 30; ++t) {
      try {
        const HypercubeData data = sample_lattice(scheme, rng, 10);
        CHECK(data.dimension == scheme.dimension);
        CHECK(data.complete());
        const auto w = bridge_check(scheme, data);
        CHECK_MESSAGE(w.match, scheme.name(), " ", w.to_json().dump());
        ++run;
      } catch (const SingularInput&) {
      }
    }
    CHECK_MESSAGE(run > 20, scheme.name());
  }
}

TEST_CASE("Sigma lattice data lives on the unit sphere") {
  const auto scheme = InvariantScheme::make(SchemeId::SigmaConstrained, 1, 3);
  Rng rng(4);
  const HypercubeData face = sample_lattice(scheme, rng, 10);
  for (unsigned m = 0; m < 4; ++m) CHECK(face.at(m).norm2() == Scalar(1));
  CHECK(-2 * face.at(1).dot(face.at(3)) == face.alphas[1]);
}

TEST_CASE("cross-validation report") {
  const Report r = cross_validate(InvariantScheme::make(SchemeId::Z4FullG), 9, 25);
  CHECK(r.suite == "bridge");
  CHECK(r.target == "z4-full-g");
  CHECK(r.passes + r.failure_count() + r.aborted == 25);
  CHECK(r.failures.empty());
  CHECK(r.details["target_map"] == "harrison");
}

TEST_CASE("extraction rejects data of the wrong shape") {
  HypercubeData cube(3, {Scalar(1), Scalar(2), Scalar(3)});
  CHECK_THROWS_AS(extract_edge_invariants(InvariantScheme::make(SchemeId::E1Translation), cube),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_z4_invariants(cube), std::invalid_argument);
}
