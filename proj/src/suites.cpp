#include "ybmap/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ybmap/consistency.hpp"

namespace ybmap {

namespace {

nlohmann::json scalars_json(std::initializer_list<const Scalar*> xs) {
  nlohmann::json j = nlohmann::json::array();
  for (const Scalar* x : xs) j.push_back(x->str());
  return j;
}

nlohmann::json points_json(const std::vector<YbPoint>& ps) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : ps) j.push_back(to_string(p));
  return j;
}

std::array<std::size_t, 4> sample_permutation(Rng& rng) {
  std::array<std::size_t, 4> p{0, 1, 2, 3};
  for (std::size_t i = 3; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

TrialOutcome cube3_trial(const QuadModel& model, Rng& rng, int h) {
  const std::size_t k = model.arity();
  const SiteValue f = sample_vector(rng, k, h);
  const std::array<SiteValue, 3> fs{sample_vector(rng, k, h), sample_vector(rng, k, h), sample_vector(rng, k, h)};
  const std::array<Scalar, 3> a{sample_scalar(rng, h), sample_scalar(rng, h), sample_scalar(rng, h)};
  const ConsistencyReport r = check_3d(model, f, fs[0], fs[1], fs[2], a);
  if (r.singular_encountered) throw SingularInput(r.singular_reason);
  const bool ok = r.consistent && r.closed_form_match.value_or(true);
  if (ok) return {true, {}};
  nlohmann::json w;
  w["f"] = to_string(f);
  w["f_i"] = points_json({fs.begin(), fs.end()});
  w["alphas"] = scalars_json({&a[0], &a[1], &a[2]});
  nlohmann::json cands = nlohmann::json::object();
  for (const auto& c : r.candidates) cands[c.path] = to_string(c.value);
  w["candidates"] = cands;
  if (r.closed_form_match) w["closed_form_match"] = *r.closed_form_match;
  return {false, w};
}

TrialOutcome cube4_trial(Rng& rng, int h) {
  const Scalar f = sample_scalar(rng, h);
  std::array<Scalar, 4> fs, a;
  for (auto& v : fs) v = sample_scalar(rng, h);
  for (auto& v : a) v = sample_scalar(rng, h);
  const ConsistencyReport r = check_4d_e1(f, fs, a);
  if (r.singular_encountered) throw SingularInput(r.singular_reason);
  const Scalar closed = closed_quad_e1(f, fs, a);
  nlohmann::json bad_perms = nlohmann::json::array();
  for (int p = 0; p < 10; ++p) {
    const auto sigma = sample_permutation(rng);
    std::array<Scalar, 4> pf, pa;
    for (std::size_t i = 0; i < 4; ++i) {
      pf[i] = fs[sigma[i]];
      pa[i] = a[sigma[i]];
    }
    if (!(closed_quad_e1(f, pf, pa) == closed)) bad_perms.push_back(sigma);
  }
  const bool ok = r.consistent && r.closed_form_match.value_or(false) && bad_perms.empty();
  if (ok) return {true, {}};
  nlohmann::json w;
  w["f"] = f.str();
  w["f_i"] = scalars_json({&fs[0], &fs[1], &fs[2], &fs[3]});
  w["alphas"] = scalars_json({&a[0], &a[1], &a[2], &a[3]});
  nlohmann::json cands = nlohmann::json::object();
  for (const auto& c : r.candidates) cands[c.path] = to_string(c.value);
  w["candidates"] = cands;
  w["closed_form"] = closed.str();
  w["non_invariant_permutations"] = bad_perms;
  return {false, w};
}

}  // namespace

Report consistency_suite(const QuadModel& model, int dim, int trials, std::uint64_t seed, int height) {
  if (dim == 3) {
    if (model.family == QuadFamily::PBsq)
      throw std::invalid_argument("pbsq has no corner solve; use the simulator staircase instead");
    Report r = run_trials("consistency-3d", model.id(), trials, seed, height,
                          [model](Rng& rng, int h) { return cube3_trial(model, rng, h); });
    const auto fam = model.family;
    r.details["closed_form"] = fam == QuadFamily::E1 || fam == QuadFamily::MBsq || fam == QuadFamily::Calapso;
    return r;
  }
  if (dim == 4) {
    if (model.family != QuadFamily::E1) throw std::invalid_argument("dim 4 is supported for e1 only");
    return run_trials("consistency-4d", model.id(), trials, seed, height, cube4_trial);
  }
  throw std::invalid_argument("dim must be 3 or 4");
}

Report yb_suite(const YbMapSpec& spec, const BinaryMap& map, int trials, std::uint64_t seed, int height) {
  return run_trials("yb", spec.id(), trials, seed, height, [spec, map](Rng& rng, int h) {
    const YbPoint x = sample_point(spec, rng, h), y = sample_point(spec, rng, h), z = sample_point(spec, rng, h);
    const Scalar a1 = sample_scalar(rng, h), a2 = sample_scalar(rng, h), a3 = sample_scalar(rng, h);
    const YbSides s = yb_sides(map, x, y, z, a1, a2, a3);
    if (s.equal()) return TrialOutcome{true, {}};
    nlohmann::json w;
    w["points"] = points_json({x, y, z});
    w["params"] = scalars_json({&a1, &a2, &a3});
    w["lhs"] = points_json(s.lhs);
    w["rhs"] = points_json(s.rhs);
    return TrialOutcome{false, w};
  });
}

Report yb_suite(const YbMapSpec& spec, int trials, std::uint64_t seed, int height) {
  return yb_suite(spec, as_binary_map(spec), trials, seed, height);
}

Report reversibility_suite(const YbMapSpec& spec, int trials, std::uint64_t seed, int height) {
  const BinaryMap map = as_binary_map(spec);
  Report r = run_trials("reversibility", spec.id(), trials, seed, height, [spec, map](Rng& rng, int h) {
    const YbPoint x = sample_point(spec, rng, h), y = sample_point(spec, rng, h);
    const Scalar a1 = sample_scalar(rng, h), a2 = sample_scalar(rng, h);
    if (check_reversibility(map, x, y, a1, a2)) return TrialOutcome{true, {}};
    const auto [u, v] = map(x, y, a1, a2);
    nlohmann::json w;
    w["x"] = to_string(x);
    w["y"] = to_string(y);
    w["params"] = scalars_json({&a1, &a2});
    w["u"] = to_string(u);
    w["v"] = to_string(v);
    return TrialOutcome{false, w};
  });
  r.asserted = spec.family != MapFamily::PBsq;
  return r;
}

Report conservation_suite(const YbMapSpec& spec, const BinaryMap& map, int trials, std::uint64_t seed,
                          int height) {
  return run_trials("conservation", spec.id(), trials, seed, height, [spec, map](Rng& rng, int h) {
    const YbPoint x = sample_point(spec, rng, h), y = sample_point(spec, rng, h);
    const Scalar a1 = sample_scalar(rng, h), a2 = sample_scalar(rng, h);
    const auto [u, v] = map(x, y, a1, a2);
    const auto residuals = map_relations(spec, x, y, u, v, a1, a2);
    if (relations_hold(residuals)) return TrialOutcome{true, {}};
    nlohmann::json w;
    w["x"] = to_string(x);
    w["y"] = to_string(y);
    w["params"] = scalars_json({&a1, &a2});
    w["u"] = to_string(u);
    w["v"] = to_string(v);
    nlohmann::json bad = nlohmann::json::object();
    for (const auto& res : residuals)
      if (!res.value.is_zero()) bad[res.name] = res.value.str();
    w["nonzero_residuals"] = bad;
    return TrialOutcome{false, w};
  });
}

Report conservation_suite(const YbMapSpec& spec, int trials, std::uint64_t seed, int height) {
  return conservation_suite(spec, as_binary_map(spec), trials, seed, height);
}

std::string equivalence_name(Equivalence e) {
  return e == Equivalence::F3Table1 ? "f3-table1" : "harrison-f1";
}

Report equivalence_suite(Equivalence e, int trials, std::uint64_t seed, int height) {
  return run_trials("equivalence", equivalence_name(e), trials, seed, height, [e](Rng& rng, int h) {
    const Scalar p1 = sample_scalar(rng, h), p2 = sample_scalar(rng, h);
    const Scalar x = sample_scalar(rng, h), y = sample_scalar(rng, h);
    const bool ok = e == Equivalence::F3Table1 ? verify_equivalence_f3_table1(p1, p2, x, y)
                                               : verify_equivalence_harrison_f1(p1, p2, x, y);
    if (ok) return TrialOutcome{true, {}};
    return TrialOutcome{false, {{"params", scalars_json({&p1, &p2})}, {"x", x.str()}, {"y", y.str()}}};
  });
}

std::optional<bool> expected_tetrahedron(const QuadModel& model) {
  switch (model.family) {
    case QuadFamily::E1:
    case QuadFamily::Calapso: return true;
    case QuadFamily::MBsq: return false;
    default: return std::nullopt;
  }
}

Report tetrahedron_suite(const QuadModel& model, int trials, std::uint64_t seed, int height) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  const TetrahedronResult t = tetrahedron_test(model, rng, trials, height);
  const auto expected = expected_tetrahedron(model);

  Report r;
  r.suite = "tetrahedron";
  r.target = model.id();
  r.trials = trials;
  r.seed = seed;
  r.height = height;
  r.singular_resamples = t.singular_resamples;
  r.passes = t.trials_run - (t.witness ? 1 : 0);
  r.asserted = expected.has_value();
  r.details["holds"] = t.holds;
  if (expected) r.details["expected"] = *expected;
  if (t.witness) {
    const TetrahedronWitness& w = *t.witness;
    r.details["witness"] = {{"f_a", to_string(w.f_a)},
                            {"f_b", to_string(w.f_b)},
                            {"f_i", points_json({w.fs.begin(), w.fs.end()})},
                            {"alphas", scalars_json({&w.alphas[0], &w.alphas[1], &w.alphas[2]})},
                            {"f123_a", to_string(w.far_a)},
                            {"f123_b", to_string(w.far_b)}};
  }
  if (expected && *expected != t.holds) {
    nlohmann::json f = {{"expected", *expected}, {"holds", t.holds}};
    if (t.witness) f["witness"] = r.details["witness"];
    r.failures.push_back(std::move(f));
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_all(std::optional<int> trials, std::uint64_t seed, int height) {
  auto n = [&](int fallback) { return trials.value_or(fallback); };
  std::vector<Report> out;
  for (const auto& m : {QuadModel::e1(), QuadModel::e2(0), QuadModel::e2(1), QuadModel::e3(), QuadModel::mbsq(),
                        QuadModel::calapso(2), QuadModel::calapso(3)})
    out.push_back(consistency_suite(m, 3, n(kDefaultCube3Trials), seed, height));
  out.push_back(consistency_suite(QuadModel::e1(), 4, n(kDefaultCube4Trials), seed, height));
  for (const auto& spec : catalog()) {
    out.push_back(yb_suite(spec, n(kDefaultMapTrials), seed, height));
    out.push_back(reversibility_suite(spec, n(kDefaultMapTrials), seed, height));
    out.push_back(conservation_suite(spec, n(kDefaultMapTrials), seed, height));
  }
  for (const auto& scheme : all_schemes()) out.push_back(cross_validate(scheme, seed, n(kDefaultBridgeTrials), height));
  for (auto e : {Equivalence::F3Table1, Equivalence::HarrisonF1})
    out.push_back(equivalence_suite(e, n(kDefaultEquivalenceTrials), seed, height));
  for (const auto& m : {QuadModel::e1(), QuadModel::calapso(3), QuadModel::mbsq()})
    out.push_back(tetrahedron_suite(m, n(kDefaultTetrahedronTrials), seed, height));
  return out;
}

nlohmann::json aggregate_report(const std::string& suite, const std::vector<Report>& reports,
                                std::uint64_t seed, bool with_time) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["seed"] = seed;
  nlohmann::json failed = nlohmann::json::array();
  nlohmann::json items = nlohmann::json::array();
  double total = 0;
  for (const auto& r : reports) {
    if (!r.ok()) failed.push_back(r.suite + ":" + r.target);
    items.push_back(r.to_json(with_time));
    total += r.wall_seconds;
  }
  j["ok"] = failed.empty();
  j["failed"] = failed;
  j["reports"] = items;
  if (with_time) j["wall_seconds"] = total;
  return j;
}

}  // namespace ybmap
