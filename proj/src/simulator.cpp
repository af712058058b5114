#include "ybmap/simulator.hpp"

#include <algorithm>
#include <sstream>

namespace ybmap {

SingularPlaquette::SingularPlaquette(std::size_t r, std::size_t c, const std::string& why)
    : SingularInput("plaquette at (" + std::to_string(r) + "," + std::to_string(c) + "): " + why),
      row(r),
      col(c) {}

namespace {

bool is_pbsq(const QuadModel& m) { return m.family == QuadFamily::PBsq; }

std::size_t entry_arity(const QuadModel& m, bool origin) {
  if (is_pbsq(m)) return origin ? 3 : 2;
  return m.arity();
}

SiteValue parse_value(const nlohmann::json& v) {
  if (!v.is_string()) throw std::invalid_argument("staircase values must be strings");
  const std::string s = v.get<std::string>();
  if (!s.empty() && s.front() == '[') return RVector::parse(s);
  return {Scalar::parse(s)};
}

std::vector<std::size_t> diagonal_heights(const Grid& g) {
  std::vector<std::size_t> out(g.rows + g.cols - 1, 0);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j) out[i + j] = std::max(out[i + j], g.at(i, j).bit_height());
  return out;
}

}  // namespace

void Staircase::validate() const {
  if (axis1.empty() || axis2.empty()) throw std::invalid_argument("staircase needs at least one row and column");
  if (!(axis1[0] == axis2[0])) throw std::invalid_argument("staircase axes disagree at the origin");
  auto check = [&](const std::vector<SiteValue>& axis, const char* name) {
    for (std::size_t k = 0; k < axis.size(); ++k)
      if (axis[k].size() != entry_arity(model, k == 0))
        throw std::invalid_argument(std::string(name) + "[" + std::to_string(k) + "] has " +
                                    std::to_string(axis[k].size()) + " components, expected " +
                                    std::to_string(entry_arity(model, k == 0)));
  };
  check(axis1, "axis1");
  check(axis2, "axis2");
}

Grid evolve(const Staircase& st) {
  st.validate();
  Grid g;
  g.model = st.model;
  g.rows = st.axis1.size();
  g.cols = st.axis2.size();
  g.alpha1 = st.alpha1;
  g.alpha2 = st.alpha2;
  g.sites.assign(g.rows * g.cols, SiteValue{});
  auto site = [&](std::size_t i, std::size_t j) -> SiteValue& { return g.sites[i * g.cols + j]; };

  for (std::size_t i = 0; i < g.rows; ++i) site(i, 0) = st.axis1[i];
  for (std::size_t j = 0; j < g.cols; ++j) site(0, j) = st.axis2[j];
  if (is_pbsq(g.model)) {
    // Complete the axes to triples with h_1 = f f_1 - g along each direction.
    for (std::size_t i = 1; i < g.rows; ++i) {
      const SiteValue& prev = site(i - 1, 0);
      SiteValue& cur = site(i, 0);
      cur = {cur[0], cur[1], prev[0] * cur[0] - prev[1]};
    }
    for (std::size_t j = 1; j < g.cols; ++j) {
      const SiteValue& prev = site(0, j - 1);
      SiteValue& cur = site(0, j);
      cur = {cur[0], cur[1], prev[0] * cur[0] - prev[1]};
    }
  }

  for (std::size_t i = 1; i < g.rows; ++i)
    for (std::size_t j = 1; j < g.cols; ++j) {
      const SiteValue& f = site(i - 1, j - 1);
      const SiteValue& f1 = site(i, j - 1);
      const SiteValue& f2 = site(i - 1, j);
      try {
        if (is_pbsq(g.model)) {
          site(i, j) = solve_pbsq_staircase(f, {f1[0], f1[1]}, {f2[0], f2[1]}, g.alpha1, g.alpha2).f12;
        } else {
          site(i, j) = solve_corner(g.model, f, f1, f2, g.alpha1, g.alpha2);
        }
      } catch (const SingularInput& e) {
        throw SingularPlaquette(i, j, e.what());
      }
    }
  g.diagonal_height = diagonal_heights(g);
  return g;
}

Staircase random_staircase(const QuadModel& model, std::size_t rows, std::size_t cols, Rng& rng,
                           int height) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid size must be positive");
  Staircase st;
  st.model = model;
  st.alpha1 = sample_scalar(rng, height);
  st.alpha2 = sample_scalar(rng, height);
  const SiteValue origin = sample_vector(rng, entry_arity(model, true), height);
  st.axis1.push_back(origin);
  st.axis2.push_back(origin);
  for (std::size_t i = 1; i < rows; ++i) st.axis1.push_back(sample_vector(rng, entry_arity(model, false), height));
  for (std::size_t j = 1; j < cols; ++j) st.axis2.push_back(sample_vector(rng, entry_arity(model, false), height));
  return st;
}

RandomEvolution evolve_random(const QuadModel& model, std::size_t rows, std::size_t cols,
                              std::uint64_t seed, int height) {
  Rng rng(seed);
  for (int attempt = 0;; ++attempt) {
    Staircase st = random_staircase(model, rows, cols, rng, height);
    try {
      Grid g = evolve(st);
      return {std::move(st), std::move(g), attempt};
    } catch (const SingularPlaquette&) {
      if (attempt >= kMaxResamples) throw;
    }
  }
}

GridAudit audit_grid(const Grid& g) {
  GridAudit a;
  for (std::size_t i = 0; i + 1 < g.rows; ++i)
    for (std::size_t j = 0; j + 1 < g.cols; ++j) {
      ++a.plaquettes;
      const RVector r = quad_residual(g.model, g.at(i, j), g.at(i + 1, j), g.at(i, j + 1),
                                      g.at(i + 1, j + 1), g.alpha1, g.alpha2);
      if (!r.is_zero()) {
        if (!a.first_violation) a.first_violation = {i, j};
        ++a.violations;
      }
    }
  return a;
}

std::string to_csv(const Grid& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      if (j) out << ',';
      const std::string cell = to_string(g.at(i, j));
      if (cell.find(',') != std::string::npos)
        out << '"' << cell << '"';
      else
        out << cell;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Grid& g, std::optional<std::uint64_t> seed) {
  nlohmann::json j;
  j["model"] = g.model.id();
  j["alpha1"] = g.alpha1.str();
  j["alpha2"] = g.alpha2.str();
  if (seed) j["seed"] = *seed;
  j["rows"] = g.rows;
  j["cols"] = g.cols;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cols; ++c) row.push_back(to_string(g.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["grid"] = std::move(rows);
  j["diagonal_bit_height"] = g.diagonal_height;
  return j;
}

Staircase parse_staircase(const nlohmann::json& j, const QuadModel& model) {
  if (!j.is_object()) throw std::invalid_argument("staircase file must hold a JSON object");
  if (j.contains("model")) {
    const auto declared = QuadModel::parse(j.at("model").get<std::string>());
    if (!declared || !(*declared == model))
      throw std::invalid_argument("staircase model " + j.at("model").dump() + " does not match " + model.id());
  }
  Staircase st;
  st.model = model;
  st.alpha1 = Scalar::parse(j.at("alpha1").get<std::string>());
  st.alpha2 = Scalar::parse(j.at("alpha2").get<std::string>());
  for (const auto& v : j.at("axis1")) st.axis1.push_back(parse_value(v));
  for (const auto& v : j.at("axis2")) st.axis2.push_back(parse_value(v));
  st.validate();
  return st;
}

ChainResult evolve_chain(const YbMapSpec& spec, const TransferState& initial, int steps) {
  ChainResult out;
  out.trajectory.push_back(initial);
  const BinaryMap map = as_binary_map(spec);
  for (int s = 0; s < steps; ++s) {
    try {
      out.trajectory.push_back(transfer_step(map, out.trajectory.back()));
    } catch (const SingularInput& e) {
      out.error = "step " + std::to_string(s + 1) + ": " + e.what();
      break;
    }
  }
  return out;
}

}  // namespace ybmap
