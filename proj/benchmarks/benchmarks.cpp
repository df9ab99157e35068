// Microbenchmarks for the hot paths: closed-form products, the integration
// oracle, tensor products, and the fluid right-hand side.

#include <benchmark/benchmark.h>

#include <random>

#include <tia/algebra1d.hpp>
#include <tia/fluid.hpp>
#include <tia/oracle.hpp>
#include <tia/tensor.hpp>

using namespace tia;

namespace {
const Lattice1D kLine{};
}

static void bm_product_closed_form(benchmark::State& state) {
  const Gen1D g = Gen1D::point(0, {2, 1});
  const Gen1D h = Gen1D::interval(0, 2, {1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect_gen(g, h, kLine));
  }
}
BENCHMARK(bm_product_closed_form);

static void bm_product_via_integration(benchmark::State& state) {
  const Gen1D g = Gen1D::point(0, {2, 1});
  const Gen1D h = Gen1D::interval(0, 2, {1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::intersect_via_integration(g, h, kLine));
  }
}
BENCHMARK(bm_product_via_integration);

static void bm_product_periodic(benchmark::State& state) {
  const Lattice1D lat{rat(1), 5};
  const Gen1D g = Gen1D::interval(0, 3, {1, 1});
  const Gen1D h = Gen1D::interval(2, 6, {0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect_gen(g, h, lat));
  }
}
BENCHMARK(bm_product_periodic);

static void bm_tensor_triple_product(benchmark::State& state) {
  const LatticeD lat{rat(1), {std::nullopt, std::nullopt, std::nullopt}};
  const ChainD A =
      chain_of(lat, GenD{{Gen1D::point(0), Gen1D::interval(-1, 1), Gen1D::interval(-1, 1)}});
  const ChainD B =
      chain_of(lat, GenD{{Gen1D::interval(0, 2), Gen1D::point(0), Gen1D::interval(-1, 1)}});
  const ChainD C =
      chain_of(lat, GenD{{Gen1D::interval(-2, 0), Gen1D::interval(-1, 1), Gen1D::point(0)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect_d(intersect_d(A, B), C));
  }
}
BENCHMARK(bm_tensor_triple_product);

static void bm_coexact_basis(benchmark::State& state) {
  const auto cx = build_2h_complex(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coexact_basis(cx));
  }
}
BENCHMARK(bm_coexact_basis)->Unit(benchmark::kMillisecond);

static void bm_euler_rhs(benchmark::State& state) {
  static const FluidAlgebra alg = build_fluid_algebra(3, Augmentation{rat(1)});
  static const FluidSim sim(alg);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(sim.dim());
  for (auto& v : x) v = u(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_rhs(sim, x));
  }
}
BENCHMARK(bm_euler_rhs);

static void bm_midpoint_step(benchmark::State& state) {
  static const FluidAlgebra alg = build_fluid_algebra(3, Augmentation{rat(1)});
  static const FluidSim sim(alg);
  const auto x0 = initial_state(sim, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(sim, x0, 0.01, 1, Method::ImplicitMidpoint));
  }
}
BENCHMARK(bm_midpoint_step);

BENCHMARK_MAIN();
