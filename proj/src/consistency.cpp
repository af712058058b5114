#include "ybmap/consistency.hpp"

namespace ybmap {

HypercubeData::HypercubeData(int d, DirectionParams params)
    : dimension(d), vertices(std::size_t{1} << d), alphas(std::move(params)) {
  if (d < 2 || d > 4) throw std::invalid_argument("cube dimension must be 2, 3 or 4");
  if (alphas.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("one lattice parameter per direction");
}

bool HypercubeData::complete() const {
  for (const auto& v : vertices)
    if (!v) return false;
  return true;
}

const SiteValue& HypercubeData::at(unsigned mask) const {
  const auto& v = vertices.at(mask);
  if (!v) throw std::logic_error("vertex " + vertex_label(mask) + " not filled");
  return *v;
}

unsigned mask_of(std::initializer_list<int> directions) {
  unsigned m = 0;
  for (int d : directions) m |= 1u << (d - 1);
  return m;
}

std::string vertex_label(unsigned mask) {
  if (mask == 0) return "f";
  std::string s = "f_";
  bool first = true;
  for (int i = 0; i < 8; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s;
}

namespace {

// Solves the (i, j) face whose base vertex is `base` (bits i, j clear).
SiteValue solve_face(const QuadModel& model, const HypercubeData& cube, unsigned base, int i, int j) {
  const unsigned bi = 1u << i, bj = 1u << j;
  return solve_corner(model, cube.at(base), cube.at(base | bi), cube.at(base | bj),
                      cube.alphas[i], cube.alphas[j]);
}

std::string face_path(unsigned base, int i, int j) {
  return "face(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")@" + vertex_label(base);
}

bool all_equal(const std::vector<CandidateValue>& c) {
  for (std::size_t k = 1; k < c.size(); ++k)
    if (!(c[k].value == c[0].value)) return false;
  return !c.empty();
}

}  // namespace

ConsistencyReport check_3d(const QuadModel& model, const SiteValue& f, const SiteValue& f1,
                           const SiteValue& f2, const SiteValue& f3,
                           const std::array<Scalar, 3>& alphas) {
  ConsistencyReport report;
  HypercubeData cube(3, DirectionParams(alphas.begin(), alphas.end()));
  cube.set(0, f);
  cube.set(1, f1);
  cube.set(2, f2);
  cube.set(4, f3);
  try {
    cube.set(3, solve_face(model, cube, 0, 0, 1));
    cube.set(5, solve_face(model, cube, 0, 0, 2));
    cube.set(6, solve_face(model, cube, 0, 1, 2));
    // The far faces are the ones through f_123 not containing f.
    const std::array<std::array<int, 3>, 3> far{{{4, 0, 1}, {2, 0, 2}, {1, 1, 2}}};
    for (const auto& [base, i, j] : far)
      report.candidates.push_back({solve_face(model, cube, base, i, j), face_path(base, i, j)});
  } catch (const SingularInput& e) {
    report.singular_encountered = true;
    report.singular_reason = e.what();
    report.candidates.clear();
    return report;
  }
  report.consistent = all_equal(report.candidates);
  try {
    if (auto closed = closed_triple(model, f, {f1, f2, f3}, alphas))
      report.closed_form_match = (*closed == report.candidates.front().value);
  } catch (const SingularInput& e) {
    report.singular_encountered = true;
    report.singular_reason = e.what();
  }
  return report;
}

HypercubeData fill_cube_3d(const QuadModel& model, const SiteValue& f, const std::array<SiteValue, 3>& fs,
                           const std::array<Scalar, 3>& alphas) {
  HypercubeData cube(3, DirectionParams(alphas.begin(), alphas.end()));
  cube.set(0, f);
  for (int i = 0; i < 3; ++i) cube.set(1u << i, fs[i]);
  cube.set(3, solve_face(model, cube, 0, 0, 1));
  cube.set(5, solve_face(model, cube, 0, 0, 2));
  cube.set(6, solve_face(model, cube, 0, 1, 2));
  cube.set(7, solve_face(model, cube, 4, 0, 1));
  return cube;
}

HypercubeData fill_hypercube_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                                const std::array<Scalar, 4>& alphas) {
  const QuadModel model = QuadModel::e1();
  HypercubeData cube(4, DirectionParams(alphas.begin(), alphas.end()));
  cube.set(0, {f});
  for (int i = 0; i < 4; ++i) cube.set(1u << i, {fs[i]});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cube.set((1u << i) | (1u << j), solve_face(model, cube, 0, i, j));
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (i == k || j == k) continue;
        const unsigned top = (1u << i) | (1u << j) | (1u << k);
        if (!cube.filled(top)) cube.set(top, solve_face(model, cube, 1u << k, i, j));
      }
  cube.set(15, solve_face(model, cube, 0b1100, 0, 1));
  return cube;
}

ConsistencyReport check_4d_e1(const Scalar& f, const std::array<Scalar, 4>& fs,
                              const std::array<Scalar, 4>& alphas) {
  ConsistencyReport report;
  const QuadModel model = QuadModel::e1();
  try {
    const HypercubeData cube = fill_hypercube_e1(f, fs, alphas);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const unsigned base = 15u & ~((1u << i) | (1u << j));
        report.candidates.push_back({solve_face(model, cube, base, i, j), face_path(base, i, j)});
      }
    report.consistent = all_equal(report.candidates) && count_face_violations(model, cube) == 0;
    report.closed_form_match = (SiteValue{closed_quad_e1(f, fs, alphas)} == cube.at(15));
  } catch (const SingularInput& e) {
    report.candidates.clear();
    report.consistent = false;
    report.singular_encountered = true;
    report.singular_reason = e.what();
  }
  return report;
}

std::size_t count_face_violations(const QuadModel& model, const HypercubeData& cube) {
  const int d = cube.dimension;
  std::size_t bad = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const unsigned bi = 1u << i, bj = 1u << j;
      for (unsigned base = 0; base < (1u << d); ++base) {
        if (base & (bi | bj)) continue;
        const RVector r = quad_residual(model, cube.at(base), cube.at(base | bi), cube.at(base | bj),
                                        cube.at(base | bi | bj), cube.alphas[i], cube.alphas[j]);
        if (!r.is_zero()) ++bad;
      }
    }
  return bad;
}

TetrahedronResult tetrahedron_test(const QuadModel& model, Rng& rng, int trials, int height) {
  TetrahedronResult result;
  const std::size_t k = model.arity();
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > kMaxResamples) throw std::runtime_error("tetrahedron test: resample bound exceeded");
      const std::array<SiteValue, 3> fs{sample_vector(rng, k, height), sample_vector(rng, k, height),
                                        sample_vector(rng, k, height)};
      const std::array<Scalar, 3> alphas{sample_scalar(rng, height), sample_scalar(rng, height),
                                         sample_scalar(rng, height)};
      const SiteValue fa = sample_vector(rng, k, height);
      const SiteValue fb = sample_vector(rng, k, height);
      if (fa == fb) {
        ++result.singular_resamples;
        continue;
      }
      const auto ra = check_3d(model, fa, fs[0], fs[1], fs[2], alphas);
      const auto rb = check_3d(model, fb, fs[0], fs[1], fs[2], alphas);
      if (ra.singular_encountered || rb.singular_encountered || !ra.consistent || !rb.consistent) {
        ++result.singular_resamples;
        continue;
      }
      ++result.trials_run;
      const SiteValue& far_a = ra.candidates.front().value;
      const SiteValue& far_b = rb.candidates.front().value;
      if (!(far_a == far_b)) {
        result.holds = false;
        result.witness = TetrahedronWitness{fa, fb, fs, alphas, far_a, far_b};
        return result;
      }
      break;
    }
  }
  return result;
}

}  // namespace ybmap
