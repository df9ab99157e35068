// tia — command-line front end for the transverse intersection algebra.
//
// Subcommands:
//   product       exact transverse product of two chain files
//   boundary      exact boundary of a chain file
//   verify        exhaustive algebra-law sweeps (graded commutativity,
//                 associativity, Leibniz, boundary squared, ideal closure)
//   oracle-check  closed-form coefficients vs the independent integration oracle
//   fluid build   assemble the lattice fluid algebra and report its forms
//   fluid run     integrate the lattice Euler equation, writing CSV + JSON
//
// Exit codes: 0 success, 1 identity/agreement failure, 2 input error,
// 3 configuration error.  Logging to stderr, level via TIA_LOG
// (error|info|debug, default error); stdout and output files are
// byte-identical across reruns with the same flags and seed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <tia/algebra1d.hpp>
#include <tia/cells.hpp>
#include <tia/fluid.hpp>
#include <tia/linalg.hpp>
#include <tia/serialize.hpp>
#include <tia/sweeps.hpp>
#include <tia/tensor.hpp>

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("tia");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");  // no timestamps: reruns keep stderr identical too
  spdlog::set_level(spdlog::level::err);
  if (const char* env = std::getenv("TIA_LOG")) {
    const std::string v = env;
    if (v == "error")
      spdlog::set_level(spdlog::level::err);
    else if (v == "info")
      spdlog::set_level(spdlog::level::info);
    else if (v == "debug")
      spdlog::set_level(spdlog::level::debug);
    else
      std::fprintf(stderr, "[warning] unrecognized TIA_LOG value '%s' (expected error|info|debug)\n",
                   v.c_str());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw tia::ParseError(path + ": invalid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw IoError("failed while writing: " + path);
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- product

int cmd_product(const std::string& fileA, const std::string& fileB, const std::string& outFile) {
  const auto a = tia::any_chain_from_json(load_json(fileA));
  const auto b = tia::any_chain_from_json(load_json(fileB));
  json out;
  if (std::holds_alternative<tia::Chain>(a) && std::holds_alternative<tia::Chain>(b)) {
    const auto& ca = std::get<tia::Chain>(a);
    const auto& cb = std::get<tia::Chain>(b);
    const auto prod = tia::intersect(ca, cb);
    spdlog::info("product: {} x {} terms -> {} terms", ca.size(), cb.size(), prod.size());
    out = tia::to_json(prod);
  } else if (std::holds_alternative<tia::ChainD>(a) && std::holds_alternative<tia::ChainD>(b)) {
    const auto& ca = std::get<tia::ChainD>(a);
    const auto& cb = std::get<tia::ChainD>(b);
    const auto prod = tia::intersect_d(ca, cb);
    spdlog::info("tensor product: {} x {} terms -> {} terms", ca.size(), cb.size(), prod.size());
    out = tia::to_json(prod);
  } else {
    throw tia::LatticeMismatch(fileA + " and " + fileB +
                               " hold chains of different dimensions (one-axis vs multi-axis)");
  }
  write_text(outFile, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- boundary

int cmd_boundary(const std::string& inFile, const std::string& outFile) {
  const auto c = tia::any_chain_from_json(load_json(inFile));
  json out;
  if (std::holds_alternative<tia::Chain>(c))
    out = tia::to_json(tia::boundary(std::get<tia::Chain>(c)));
  else
    out = tia::to_json(tia::boundary_d(std::get<tia::ChainD>(c)));
  write_text(outFile, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- verify

void print_report(const tia::SweepReport& rep) {
  for (const auto& [law, count] : rep.laws) std::printf("  %-36s %lld\n", law.c_str(), count);
  std::printf("checks=%lld failures=%lld\n", rep.checks, rep.failures);
  if (rep.ok()) {
    std::printf("PASS\n");
  } else {
    std::printf("FAIL\n");
    for (const auto& note : rep.notes) std::printf("counterexample: %s\n", note.c_str());
  }
}

int cmd_verify(int dims, int decBound, long window, std::optional<long> period,
               bool injectDefect) {
  if (decBound < 0 || decBound > 4)
    throw std::invalid_argument("--dec-bound must be between 0 and 4 (exhaustive sweeps only)");
  if (dims != 1 && dims != 3)
    throw std::invalid_argument(
        "--dims must be 1 or 3: products and boundaries factor through the axes, so the "
        "two-axis laws are covered by the one-axis sweep plus the sign checks of --dims 3");
  tia::SweepOptions opt;
  opt.decBound = decBound;
  opt.window = window;
  opt.period = period;
  opt.injectDefect = injectDefect;

  std::printf("verify dims=%d dec-bound=%d window=%ld", dims, decBound, window);
  if (period) std::printf(" period=%ld", *period);
  if (injectDefect) std::printf(" inject-defect");
  std::printf("\n");

  tia::SweepReport rep;
  if (dims == 1) {
    rep = tia::sweep_dga_1d(opt);
    // The truncation-ideal property is one-axis; K=1 keeps the span non-trivial
    // at every decoration bound.
    rep.merge(tia::sweep_ideal(decBound, window, 1));
  } else {
    rep = tia::sweep_dga_3d(opt);
  }
  print_report(rep);
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- oracle-check

int cmd_oracle_check(int decBound, long window, bool useSwappedBinomial) {
  if (decBound < 0 || decBound > 4)
    throw std::invalid_argument("--dec-bound must be between 0 and 4 (exhaustive sweeps only)");
  if (useSwappedBinomial && decBound < 1)
    spdlog::warn(
        "the swapped-binomial variant coincides with the correct coefficient when all "
        "decorations are zero; use --dec-bound >= 1 to expose it");
  const auto agree = tia::sweep_oracle(decBound, window, useSwappedBinomial);
  if (agree.report.ok()) {
    std::printf("AGREE: %lld products, %lld boundaries\n", agree.products, agree.boundaries);
    return 0;
  }
  std::printf("DISAGREE: %lld failures over %lld checks\n", agree.report.failures,
              agree.report.checks);
  for (const auto& note : agree.report.notes) std::printf("%s\n", note.c_str());
  return 1;
}

// ---------------------------------------------------------------- fluid

const char* definiteness_name(tia::Definiteness d) {
  switch (d) {
    case tia::Definiteness::PositiveDefinite:
      return "positive definite";
    case tia::Definiteness::PositiveSemidefinite:
      return "positive semidefinite";
    default:
      return "indefinite";
  }
}

tia::Rational abs_sum(const tia::Mat& m) {
  tia::Rational acc{0};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& v = m.at(i, j);
      acc += (v < 0) ? tia::Rational(-v) : v;
    }
  return acc;
}

int cmd_fluid_build(long n, const std::string& deltaStr, bool skipTriple,
                    const std::string& outFile) {
  tia::Augmentation aug;
  aug.delta = tia::rational_from_string(deltaStr);
  const auto alg = tia::build_fluid_algebra(n, aug, /*withTriple=*/!skipTriple);

  json rep;
  rep["n"] = n;
  rep["delta"] = tia::to_string(aug.delta);
  rep["cells"] = {{"points", alg.complex.points.size()},
                  {"sticks", alg.complex.sticks.size()},
                  {"squares", alg.complex.squares.size()},
                  {"cubes", alg.complex.cubes.size()}};
  rep["basis_dimension"] = alg.basisV.size();
  rep["gram_symmetric"] = alg.gram.is_symmetric();
  rep["gram_rank"] = tia::rank(alg.gram);
  rep["linking_symmetric"] = alg.linking.is_symmetric();
  rep["definiteness"] = definiteness_name(alg.gramDefiniteness);
  json sums;
  sums["gram_abs_sum"] = tia::to_string(abs_sum(alg.gram));
  sums["linking_abs_sum"] = tia::to_string(abs_sum(alg.linking));
  sums["d_abs_sum"] = tia::to_string(abs_sum(alg.Dmat));
  if (alg.withTriple) {
    tia::Rational tsum{0};
    for (const auto& e : alg.triple) tsum += (e.t < 0) ? tia::Rational(-e.t) : e.t;
    sums["triple_abs_sum"] = tia::to_string(tsum);
    sums["triple_entries"] = alg.triple.size();
  }
  rep["checksums"] = sums;

  const std::string text = rep.dump(2) + "\n";
  if (outFile.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text(outFile, text);
    std::printf("wrote %s (basis dimension %zu, %s)\n", outFile.c_str(), alg.basisV.size(),
                definiteness_name(alg.gramDefiniteness));
  }
  return 0;
}

int cmd_fluid_run(long n, const std::string& deltaStr, double dt, long steps,
                  const std::string& methodName, std::uint64_t seed, const std::string& csvFile,
                  const std::string& stateFile) {
  tia::Augmentation aug;
  aug.delta = tia::rational_from_string(deltaStr);
  const auto alg = tia::build_fluid_algebra(n, aug, /*withTriple=*/true);
  tia::FluidSim sim(alg);
  const auto x0 = tia::initial_state(sim, seed);
  const tia::Method method =
      (methodName == "rk4") ? tia::Method::Rk4 : tia::Method::ImplicitMidpoint;
  spdlog::info("integrating: dim={} dt={} steps={} method={}", sim.dim(), dt, steps, methodName);
  const auto traj = tia::integrate(sim, x0, dt, steps, method);

  std::ostringstream csv;
  tia::write_trajectory_csv(csv, traj);
  write_text(csvFile, csv.str());

  const double e0 = traj.records.front().energy;
  const double h0 = traj.records.front().helicity;
  double eDrift = 0.0, hDrift = 0.0;
  for (const auto& r : traj.records) {
    eDrift = std::max(eDrift, std::abs(r.energy - e0));
    hDrift = std::max(hDrift, std::abs(r.helicity - h0));
  }
  const double eRel = eDrift / std::abs(e0);
  const double hRel = (h0 == 0.0) ? hDrift : hDrift / std::abs(h0);

  json sidecar;
  sidecar["n"] = n;
  sidecar["delta"] = tia::to_string(aug.delta);
  sidecar["method"] = methodName;
  sidecar["dt"] = dt;
  sidecar["steps"] = steps;
  sidecar["seed"] = seed;
  sidecar["dimension"] = sim.dim();
  sidecar["energy_initial"] = e0;
  sidecar["energy_final"] = traj.records.back().energy;
  sidecar["energy_drift_rel"] = eRel;
  sidecar["helicity_initial"] = h0;
  sidecar["helicity_final"] = traj.records.back().helicity;
  sidecar["helicity_drift_abs"] = hDrift;
  sidecar["helicity_drift_rel"] = hRel;
  sidecar["final_state"] = traj.finalState;
  write_text(stateFile, sidecar.dump(2) + "\n");

  std::printf("dim=%zu steps=%ld energy_drift_rel=%s helicity_drift_abs=%s\n", sim.dim(), steps,
              fmt_double(eRel).c_str(), fmt_double(hDrift).c_str());
  std::printf("wrote %s and %s\n", csvFile.c_str(), stateFile.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{
      "tia: exact transverse intersection algebra on cubical lattices.\n"
      "Decorated cells, transverse products, boundaries, exhaustive law sweeps,\n"
      "an independent integration oracle, and a lattice Euler fluid demo."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tia 0.1.0");

  // product
  std::string prodA, prodB, prodOut;
  auto* product = app.add_subcommand(
      "product", "Exact transverse product of two chain JSON files (same lattice).");
  product->add_option("infile_a", prodA, "first chain (JSON)")->required();
  product->add_option("infile_b", prodB, "second chain (JSON)")->required();
  product->add_option("outfile", prodOut, "output chain (JSON)")->required();

  // boundary
  std::string bdIn, bdOut;
  auto* boundary = app.add_subcommand("boundary", "Exact boundary of a chain JSON file.");
  boundary->add_option("infile", bdIn, "input chain (JSON)")->required();
  boundary->add_option("outfile", bdOut, "output chain (JSON)")->required();

  // verify
  int vDims = 1;
  int vDec = 2;
  long vWin = 4;
  long vPeriod = 0;
  bool vDefect = false;
  auto* verify = app.add_subcommand(
      "verify",
      "Exhaustive algebra-law sweeps: graded commutativity, associativity, Leibniz, "
      "boundary squared, codimension additivity, and truncation-ideal closure. "
      "Exit 1 with the first counterexample on any violation.");
  verify->add_option("--dims", vDims, "number of axes (1 or 3)")->capture_default_str();
  verify->add_option("--dec-bound", vDec, "max decoration entry, 0..4")->capture_default_str();
  verify->add_option("--window", vWin, "number of consecutive lattice sites")
      ->capture_default_str();
  verify->add_option("--period", vPeriod, "use a periodic lattice of this size instead of a window")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-defect", vDefect,
                   "corrupt one product coefficient; the sweep must then fail (self-test)");

  // oracle-check
  int oDec = 4;
  long oWin = 5;
  bool oSwap = false;
  auto* oracle = app.add_subcommand(
      "oracle-check",
      "Compare every closed-form product and boundary against the independent "
      "exact-integration oracle. Exit 1 with both values on any disagreement.");
  oracle->add_option("--dec-bound", oDec, "max decoration entry, 0..4")->capture_default_str();
  oracle->add_option("--window", oWin, "number of consecutive lattice sites")
      ->capture_default_str();
  oracle->add_flag("--use-swapped-binomial", oSwap,
                   "substitute a plausible but wrong coefficient variant; the check must then "
                   "fail (self-test)");

  // fluid
  auto* fluid =
      app.add_subcommand("fluid", "Lattice Euler fluid: build the algebra or run a trajectory.");
  fluid->require_subcommand(1);

  long fbN = 3;
  std::string fbDelta = "1";
  bool fbSkipTriple = false;
  std::string fbOut;
  auto* fbuild = fluid->add_subcommand(
      "build",
      "Assemble the fluid algebra on the periodic N^3 lattice and report basis dimension, "
      "symmetry, definiteness, and exact checksums as JSON.");
  fbuild->add_option("--n", fbN, "lattice size per axis (>= 3)")->capture_default_str();
  fbuild->add_option("--delta", fbDelta, "augmentation weight, rational in (0,1]")
      ->capture_default_str();
  fbuild->add_flag("--skip-triple", fbSkipTriple,
                   "skip the cubic-time triple-form assembly (forms and definiteness only)");
  fbuild->add_option("--out", fbOut, "write the JSON report here instead of stdout");

  long frN = 3;
  std::string frDelta = "1";
  double frDt = 0.01;
  long frSteps = 100;
  std::string frMethod = "midpoint";
  std::uint64_t frSeed = 2026;
  std::string frCsv = "trajectory.csv";
  std::string frState = "final_state.json";
  auto* frun = fluid->add_subcommand(
      "run",
      "Integrate the lattice Euler equation from a seeded unit-energy state; write the "
      "step,time,energy,helicity CSV and a JSON sidecar with drifts and the final state.");
  frun->add_option("--n", frN, "lattice size per axis (>= 3)")->capture_default_str();
  frun->add_option("--delta", frDelta, "augmentation weight, rational in (0,1]")
      ->capture_default_str();
  frun->add_option("--dt", frDt, "time step (> 0)")->capture_default_str();
  frun->add_option("--steps", frSteps, "number of steps (>= 0)")->capture_default_str();
  frun->add_option("--method", frMethod, "integrator")
      ->check(CLI::IsMember({"midpoint", "rk4"}))
      ->capture_default_str();
  frun->add_option("--seed", frSeed, "seed for the initial state")->capture_default_str();
  frun->add_option("--out", frCsv, "trajectory CSV path")->capture_default_str();
  frun->add_option("--final-state", frState, "JSON sidecar path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the parse error
    return rc == 0 ? 0 : 3;     // bad flags are configuration errors
  }

  try {
    if (product->parsed()) return cmd_product(prodA, prodB, prodOut);
    if (boundary->parsed()) return cmd_boundary(bdIn, bdOut);
    if (verify->parsed())
      return cmd_verify(vDims, vDec, vWin,
                        vPeriod > 0 ? std::optional<long>(vPeriod) : std::nullopt, vDefect);
    if (oracle->parsed()) return cmd_oracle_check(oDec, oWin, oSwap);
    if (fluid->parsed()) {
      for (auto* sub : fluid->get_subcommands()) {
        if (sub->get_name() == "build")
          return cmd_fluid_build(fbN, fbDelta, fbSkipTriple, fbOut);
        if (sub->get_name() == "run")
          return cmd_fluid_run(frN, frDelta, frDt, frSteps, frMethod, frSeed, frCsv, frState);
      }
    }
  } catch (const tia::ParseError& e) {
    spdlog::error("{}", e.what());
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const tia::LatticeMismatch& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 3;
  }
  return 3;  // unreachable: require_subcommand(1) guarantees a dispatch
}
