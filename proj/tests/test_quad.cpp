#include <doctest.h>

#include "ybmap/consistency.hpp"
#include "ybmap/quad.hpp"

using namespace ybmap;

namespace {

Scalar q(long long p, long long d = 1) { return make_scalar(p, d); }
SiteValue s(long long p, long long d = 1) { return {make_scalar(p, d)}; }

std::vector<QuadModel> corner_models() {
  return {QuadModel::e1(), QuadModel::e2(0), QuadModel::e2(1), QuadModel::e3(),
          QuadModel::mbsq(), QuadModel::calapso(2), QuadModel::calapso(3)};
}

}  // namespace

TEST_CASE("model ids round-trip") {
  for (const auto& m : corner_models()) {
    const auto back = QuadModel::parse(m.id());
    REQUIRE(back);
    CHECK(*back == m);
  }
  CHECK(QuadModel::e2(1).id() == "e2(1)");
  CHECK(QuadModel::parse("e2:1") == QuadModel::e2(1));
  CHECK(QuadModel::parse("calapso") == QuadModel::calapso(3));
  CHECK(QuadModel::parse("pbsq") == QuadModel::pbsq());
  CHECK_FALSE(QuadModel::parse("q4"));
  CHECK_FALSE(QuadModel::parse("calapso(x)"));
  CHECK(QuadModel::pbsq().arity() == 3);
  CHECK(QuadModel::mbsq().arity() == 2);
}

TEST_CASE("dpKdV corner and cube values") {
  const auto e1 = QuadModel::e1();
  CHECK(solve_corner(e1, s(0), s(1), s(-1), q(1), q(3)) == s(-1));

  const HypercubeData cube = fill_cube_3d(e1, s(1), {s(2), s(3), s(5)}, {q(1), q(3), q(4)});
  CHECK(cube.at(mask_of({1, 2})) == s(3));
  CHECK(cube.at(mask_of({1, 3})) == s(2));
  CHECK(cube.at(mask_of({2, 3})) == s(3, 2));
  CHECK(cube.at(mask_of({1, 2, 3})) == s(1));
  CHECK(closed_triple_e1(q(1), q(2), q(3), q(5), q(1), q(3), q(4)) == q(1));
  CHECK_THROWS_AS(solve_corner(e1, s(0), s(2), s(2), q(1), q(3)), SingularInput);
}

TEST_CASE("Calapso corner value") {
  const SiteValue f12 = solve_corner(QuadModel::calapso(2), {q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, q(3), q(1));
  CHECK(f12 == SiteValue{q(1), q(-1)});
}

TEST_CASE("dpBSQ staircase step") {
  const PbsqCorner c = solve_pbsq_staircase({q(0), q(0), q(0)}, {q(1), q(0)}, {q(2), q(1)}, q(1), q(1));
  CHECK(c.f12[0] == q(1));
  CHECK(c.h1 == q(0));
  CHECK(c.h2 == q(0));
  const RVector r = quad_residual(QuadModel::pbsq(), {q(0), q(0), q(0)}, {q(1), q(0), c.h1},
                                  {q(2), q(1), c.h2}, c.f12, q(1), q(1));
  CHECK(r.is_zero());
  CHECK(r.size() == 5);
  CHECK_THROWS_AS(solve_pbsq_staircase({q(0), q(0), q(0)}, {q(1), q(0)}, {q(1), q(1)}, q(1), q(2)),
                  SingularInput);
  CHECK_THROWS_AS(solve_corner(QuadModel::pbsq(), s(0), s(0), s(0), q(1), q(2)), std::invalid_argument);
}

TEST_CASE("solved corners satisfy the relation and are symmetric under 1 <-> 2") {
  Rng rng(21);
  for (const auto& m : corner_models()) {
    const std::size_t k = m.arity();
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
      const SiteValue f = sample_vector(rng, k, 10), f1 = sample_vector(rng, k, 10), f2 = sample_vector(rng, k, 10);
      const Scalar a1 = sample_scalar(rng, 10), a2 = sample_scalar(rng, 10);
      try {
        const SiteValue f12 = solve_corner(m, f, f1, f2, a1, a2);
        CHECK(quad_residual(m, f, f1, f2, f12, a1, a2).is_zero());
        CHECK(solve_corner(m, f, f2, f1, a2, a1) == f12);
        CHECK_FALSE(quad_residual(m, f, f1, f2, f12 + SiteValue(std::vector<Scalar>(k, Scalar(1))), a1, a2).is_zero());
        ++checked;
      } catch (const SingularInput&) {
      }
    }
    CHECK(checked > 40);
  }
}

TEST_CASE("dpKdV corner solve is an involution") {
  Rng rng(4);
  const auto e1 = QuadModel::e1();
  for (int t = 0; t < 100; ++t) {
    const SiteValue f = sample_vector(rng, 1, 10), f1 = sample_vector(rng, 1, 10), f2 = sample_vector(rng, 1, 10);
    if (f1 == f2) continue;
    const Scalar a1 = sample_scalar(rng, 10), a2 = sample_scalar(rng, 10);
    const SiteValue f12 = solve_corner(e1, f, f1, f2, a1, a2);
    CHECK(solve_corner(e1, f12, f2, f1, a1, a2) == f);
  }
}

TEST_CASE("E2 with delta = 0 is homogeneous of degree one") {
  Rng rng(8);
  const auto e2 = QuadModel::e2(0);
  for (int t = 0; t < 100; ++t) {
    const SiteValue f = sample_vector(rng, 1, 10), f1 = sample_vector(rng, 1, 10), f2 = sample_vector(rng, 1, 10);
    const Scalar a1 = sample_scalar(rng, 10), a2 = sample_scalar(rng, 10), lambda = sample_scalar(rng, 10);
    if (lambda.is_zero()) continue;
    try {
      const SiteValue f12 = solve_corner(e2, f, f1, f2, a1, a2);
      CHECK(solve_corner(e2, lambda * f, lambda * f1, lambda * f2, a1, a2) == lambda * f12);
    } catch (const SingularInput&) {
    }
  }
}

TEST_CASE("Calapso with n = 1 reduces to dpKdV") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const SiteValue f = sample_vector(rng, 1, 10), f1 = sample_vector(rng, 1, 10), f2 = sample_vector(rng, 1, 10);
    const Scalar a1 = sample_scalar(rng, 10), a2 = sample_scalar(rng, 10);
    if (f1 == f2) continue;
    CHECK(solve_corner(QuadModel::calapso(1), f, f1, f2, a1, a2) == solve_corner(QuadModel::e1(), f, f1, f2, a1, a2));
  }
}

TEST_CASE("closed forms exist only where expected") {
  const std::array<Scalar, 3> a{q(1), q(2), q(3)};
  CHECK(closed_triple(QuadModel::e1(), s(0), {s(1), s(2), s(4)}, a).has_value());
  CHECK_FALSE(closed_triple(QuadModel::e3(), s(0), {s(1), s(2), s(4)}, a).has_value());
  CHECK_FALSE(closed_triple(QuadModel::e2(1), s(0), {s(1), s(2), s(4)}, a).has_value());
}

TEST_CASE("site values of the wrong arity are rejected") {
  CHECK_THROWS_AS(solve_corner(QuadModel::mbsq(), s(1), s(2), s(3), q(1), q(2)), std::invalid_argument);
}
