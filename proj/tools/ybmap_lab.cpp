// ybmap-lab: command-line front end for the verification suites, bridges and
// lattice simulations. Reports go to stdout as JSON.
//
// Exit codes: 0 success, 1 an asserted check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybmap/bridge.hpp"
#include "ybmap/simulator.hpp"
#include "ybmap/suites.hpp"

namespace {

using namespace ybmap;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  int height = kDefaultHeight;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--trials", o.trials, "number of random trials")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "RNG seed (falls back to $YBMAP_SEED, then 1)");
  cmd->add_option("--height", o.height, "bound on sampled numerators and denominators")
      ->check(CLI::Range(1, 1 << 20));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("YBMAP_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("YBMAP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

int emit(const nlohmann::json& j, bool ok) {
  std::cout << j.dump(2) << '\n';
  return ok ? kExitOk : kExitFailed;
}

int emit(const Report& r) { return emit(r.to_json(), r.ok()); }

int emit(const std::string& suite, const std::vector<Report>& reports, std::uint64_t seed) {
  const nlohmann::json j = aggregate_report(suite, reports, seed);
  return emit(j, j.at("ok").get<bool>());
}

QuadModel model_arg(const std::string& id) {
  auto m = QuadModel::parse(id);
  if (!m) throw UsageError("unknown model '" + id + "'");
  return *m;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find('x');
  if (text.empty() || x == std::string::npos) throw UsageError("--size must look like MxN");
  try {
    std::size_t a = 0, b = 0;
    const std::string ms = text.substr(0, x), ns = text.substr(x + 1);
    const auto m = std::stoul(ms, &a);
    const auto n = std::stoul(ns, &b);
    if (a != ms.size() || b != ns.size() || m == 0 || n == 0) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::exception&) {
    throw UsageError("--size must look like MxN with positive M and N, got '" + text + "'");
  }
}

struct EvolveOptions {
  std::string model;
  std::string size;
  std::string staircase_file;
  bool random = false;
  std::string out;
  std::string format = "csv";
};

int run_evolve(const EvolveOptions& o, const CommonOptions& c) {
  const QuadModel model = model_arg(o.model);
  const auto [rows, cols] = parse_size(o.size);
  if (o.random == !o.staircase_file.empty()) throw UsageError("give exactly one of --staircase FILE and --random");

  Grid grid;
  std::optional<std::uint64_t> seed;
  try {
    if (o.random) {
      seed = resolve_seed(c.seed);
      grid = evolve_random(model, rows, cols, *seed, c.height).grid;
    } else {
      std::ifstream in(o.staircase_file);
      if (!in) throw UsageError("cannot read " + o.staircase_file);
      Staircase st;
      try {
        st = parse_staircase(nlohmann::json::parse(in), model);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(o.staircase_file + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw UsageError(o.staircase_file + ": " + e.what());
      }
      if (st.axis1.size() != rows || st.axis2.size() != cols)
        throw UsageError("staircase covers " + std::to_string(st.axis1.size()) + "x" +
                         std::to_string(st.axis2.size()) + ", --size asks for " + o.size);
      grid = evolve(st);
    }
  } catch (const SingularPlaquette& e) {
    std::cerr << "evolve failed: " << e.what() << '\n';
    return kExitFailed;
  }

  const std::string body = o.format == "json" ? to_json(grid, seed).dump(2) + "\n" : to_csv(grid);
  const GridAudit audit = audit_grid(grid);
  std::string line = "audit: " + std::to_string(audit.plaquettes - audit.violations) + "/" +
                     std::to_string(audit.plaquettes) + " plaquettes with zero residual";
  if (audit.first_violation)
    line += ", first violation at (" + std::to_string(audit.first_violation->first) + "," +
            std::to_string(audit.first_violation->second) + ")";

  if (o.out.empty()) {
    std::cout << body;
    std::cerr << line << '\n';
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.out);
    out << body;
    std::cout << line << '\n';
  }
  return audit.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of quad-graph equations and Yang-Baxter maps"};
  app.require_subcommand(1);

  CommonOptions cc, cy, cb, ce, ca;
  std::string model_id, map_id, scheme_id;
  int dim = 3;
  bool reversibility = false;
  EvolveOptions eo;

  auto* consistency = app.add_subcommand("check-consistency", "3D or 4D consistency of a lattice equation");
  consistency->add_option("model", model_id, "e1, e2, e2(1), e3, mbsq, calapso(n)")->required();
  consistency->add_option("--dim", dim, "cube dimension, 3 or 4");
  add_common(consistency, cc);

  auto* yb = app.add_subcommand("check-yb", "Yang-Baxter relation of a catalog map");
  yb->add_option("map", map_id, "adler, f4, f3, harrison, e2, e2(1), e3, f1, mbsq, pbsq, calapso(n), sigma(n)")
      ->required();
  yb->add_flag("--reversibility", reversibility, "also run the reversibility suite");
  add_common(yb, cy);

  auto* bridge = app.add_subcommand("bridge", "cross-validate lattice invariants against their YB map");
  bridge->add_option("scheme", scheme_id, "scheme id, e.g. z4-full-g")->required();
  add_common(bridge, cb);

  auto* evolve_cmd = app.add_subcommand("evolve", "fill a lattice region from staircase data");
  evolve_cmd->add_option("model", eo.model, "model id")->required();
  evolve_cmd->add_option("--size", eo.size, "MxN")->required();
  evolve_cmd->add_option("--staircase", eo.staircase_file, "staircase JSON file");
  evolve_cmd->add_flag("--random", eo.random, "sample a random staircase");
  evolve_cmd->add_option("--out", eo.out, "output file (default stdout)");
  evolve_cmd->add_option("--format", eo.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(evolve_cmd, ce);

  auto* all = app.add_subcommand("all", "run every suite");
  add_common(all, ca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*consistency) {
      const QuadModel model = model_arg(model_id);
      if (dim != 3 && dim != 4) throw UsageError("--dim must be 3 or 4");
      if (dim == 4 && model.family != QuadFamily::E1) throw UsageError("--dim 4 is supported for e1 only");
      if (model.family == QuadFamily::PBsq)
        throw UsageError("pbsq has no corner solve; check it with 'evolve pbsq' or 'bridge pbsq-v1v2'");
      const int n = cc.trials.value_or(dim == 3 ? kDefaultCube3Trials : kDefaultCube4Trials);
      return emit(consistency_suite(model, dim, n, resolve_seed(cc.seed), cc.height));
    }
    if (*yb) {
      const auto spec = YbMapSpec::parse(map_id);
      if (!spec) throw UsageError("unknown map '" + map_id + "'");
      const int n = cy.trials.value_or(kDefaultMapTrials);
      const std::uint64_t seed = resolve_seed(cy.seed);
      if (!reversibility) return emit(yb_suite(*spec, n, seed, cy.height));
      return emit("check-yb", {yb_suite(*spec, n, seed, cy.height), reversibility_suite(*spec, n, seed, cy.height)},
                  seed);
    }
    if (*bridge) {
      const auto scheme = InvariantScheme::parse(scheme_id);
      if (!scheme) throw UsageError("unknown scheme '" + scheme_id + "'");
      return emit(cross_validate(*scheme, resolve_seed(cb.seed), cb.trials.value_or(kDefaultBridgeTrials), cb.height));
    }
    if (*evolve_cmd) return run_evolve(eo, ce);
    if (*all) {
      const std::uint64_t seed = resolve_seed(ca.seed);
      return emit("all", run_all(ca.trials, seed, ca.height), seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
