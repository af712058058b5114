#include <doctest.h>

#include "ybmap/simulator.hpp"

using namespace ybmap;

namespace {

Scalar q(long long p, long long d = 1) { return make_scalar(p, d); }
SiteValue s(long long p, long long d = 1) { return {make_scalar(p, d)}; }

}  // namespace

TEST_CASE("2x2 dpKdV grid by hand") {
  const Staircase st{QuadModel::e1(), {s(0), s(1)}, {s(0), s(-1)}, q(1), q(3)};
  const Grid g = evolve(st);
  CHECK(g.at(1, 1) == s(-1));
  CHECK(audit_grid(g).ok());
  CHECK(to_csv(g) == "0/1,-1/1\n1/1,-1/1\n");
  CHECK(g.diagonal_height.size() == 3);
}

TEST_CASE("constant staircase with equal parameters") {
  // Every corner solve is 0/0: the relation holds for any f12, so the sweep
  // stops at the first plaquette while the constant grid itself is valid.
  const SiteValue c = s(7, 3);
  const Staircase st{QuadModel::e1(), std::vector<SiteValue>(4, c), std::vector<SiteValue>(3, c), q(2), q(2)};
  CHECK_THROWS_AS(evolve(st), SingularPlaquette);
  Grid g;
  g.model = QuadModel::e1();
  g.rows = 4;
  g.cols = 3;
  g.sites.assign(12, c);
  g.alpha1 = g.alpha2 = q(2);
  CHECK(audit_grid(g).ok());

  // With distinct neighbours and equal parameters the solve copies f to f12.
  const Staircase shifted{QuadModel::e1(), {s(0), s(1), s(2), s(3)}, {s(0), s(-1), s(-2)}, q(2), q(2)};
  const Grid lin = evolve(shifted);
  for (std::size_t i = 0; i < lin.rows; ++i)
    for (std::size_t j = 0; j < lin.cols; ++j)
      CHECK(lin.at(i, j) == s(static_cast<long long>(i) - static_cast<long long>(j)));
}

TEST_CASE("dpBSQ grid carries triples and passes the audit") {
  const Staircase st{QuadModel::pbsq(), {{q(0), q(0), q(0)}, {q(1), q(0)}}, {{q(0), q(0), q(0)}, {q(2), q(1)}}, q(1), q(1)};
  const Grid g = evolve(st);
  CHECK(g.at(1, 1)[0] == q(1));
  for (const auto& site : g.sites) CHECK(site.size() == 3);
  CHECK(audit_grid(g).ok());
  const auto r = evolve_random(QuadModel::pbsq(), 6, 5, 11);
  CHECK(audit_grid(r.grid).ok());
  CHECK(audit_grid(r.grid).plaquettes == 20);
}

TEST_CASE("singular plaquettes name the site") {
  const Staircase st{QuadModel::e1(), {s(0), s(1), s(5)}, {s(0), s(3), s(1, 2)}, q(1), q(2)};
  try {
    evolve(st);
    FAIL("expected SingularPlaquette");
  } catch (const SingularPlaquette& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 2);
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("staircase shapes are validated") {
  CHECK_THROWS_AS(evolve(Staircase{QuadModel::e1(), {s(0)}, {s(1)}, q(1), q(2)}), std::invalid_argument);
  CHECK_THROWS_AS(evolve(Staircase{QuadModel::mbsq(), {{q(1), q(1)}, s(1)}, {{q(1), q(1)}}, q(1), q(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evolve(Staircase{QuadModel::pbsq(), {{q(1), q(1)}}, {{q(1), q(1)}}, q(1), q(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evolve(Staircase{QuadModel::e1(), {}, {}, q(1), q(2)}), std::invalid_argument);
}

TEST_CASE("random evolution is deterministic per seed") {
  for (const auto& m : {QuadModel::e1(), QuadModel::mbsq(), QuadModel::calapso(2), QuadModel::pbsq()}) {
    const auto a = evolve_random(m, 6, 7, 99), b = evolve_random(m, 6, 7, 99), c = evolve_random(m, 6, 7, 100);
    CHECK(to_csv(a.grid) == to_csv(b.grid));
    CHECK(to_csv(a.grid) != to_csv(c.grid));
    CHECK(audit_grid(a.grid).ok());
    CHECK(to_json(a.grid, 99).dump() == to_json(b.grid, 99).dump());
  }
}

TEST_CASE("tampering is caught by the audit") {
  Grid g = evolve_random(QuadModel::e1(), 5, 5, 3).grid;
  g.sites[2 * g.cols + 3] += s(1);
  const auto a = audit_grid(g);
  CHECK(a.violations == 4);
  REQUIRE(a.first_violation);
  CHECK(*a.first_violation == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("vector cells are quoted in CSV") {
  const Grid g = evolve_random(QuadModel::mbsq(), 2, 2, 1).grid;
  const std::string csv = to_csv(g);
  CHECK(csv.front() == '"');
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("staircase JSON") {
  const auto j = nlohmann::json::parse(
      R"({"model": "mbsq", "alpha1": "1/2", "alpha2": "3", "axis1": ["[1,2]", "[3,4]"], "axis2": ["[1,2]", "[5/2,1]"]})");
  const Staircase st = parse_staircase(j, QuadModel::mbsq());
  CHECK(st.alpha1 == q(1, 2));
  CHECK(st.axis2[1] == SiteValue{q(5, 2), q(1)});
  CHECK_THROWS_AS(parse_staircase(j, QuadModel::e1()), std::invalid_argument);
  CHECK_THROWS_AS(parse_staircase(nlohmann::json::parse(R"({"alpha1": "1", "alpha2": "2", "axis1": ["1"], "axis2": ["2"]})"),
                                  QuadModel::e1()),
                  std::invalid_argument);
  const Grid g = evolve(parse_staircase(
      nlohmann::json::parse(R"({"alpha1": "1", "alpha2": "3", "axis1": ["0", "1"], "axis2": ["0", "-1"]})"),
      QuadModel::e1()));
  const auto out = to_json(g, 5);
  CHECK(out["model"] == "e1");
  CHECK(out["seed"] == 5);
  CHECK(out["grid"][1][1] == "-1/1");
}

TEST_CASE("transfer chains") {
  const TransferState init{{s(1), s(2), s(5)}, {q(3), q(1), q(-2)}};
  const auto zero = evolve_chain(YbMapSpec::adler(), init, 0);
  REQUIRE(zero.trajectory.size() == 1);
  CHECK(zero.trajectory[0] == init);

  const auto adler = evolve_chain(YbMapSpec::adler(), init, 6);
  CHECK_FALSE(adler.error);
  CHECK(adler.trajectory.size() == 7);
  for (const auto& st : adler.trajectory) {
    Scalar sum;
    for (const auto& p : st.points) sum += p[0];
    CHECK(sum == Scalar(8));
  }

  Rng rng(8);
  const auto sigma = YbMapSpec::sigma(3);
  TransferState sp;
  for (int i = 0; i < 4; ++i) {
    sp.points.push_back(sample_point(sigma, rng, 10));
    sp.params.push_back(Scalar(0));
  }
  const auto chain = evolve_chain(sigma, sp, 5);
  for (const auto& st : chain.trajectory)
    for (std::size_t i = 0; i < st.points.size(); ++i) CHECK(st.points[i].norm2() == sp.points[i].norm2());

  const auto broken = evolve_chain(YbMapSpec::adler(), TransferState{{s(1), s(-1)}, {q(1), q(2)}}, 3);
  REQUIRE(broken.error);
  CHECK(broken.trajectory.size() == 1);
}
