#pragma once

// The fluid algebra on a periodic 3-D lattice: the coexact subspace V of
// double-spacing squares, its inner product, linking form, and alternating
// triple form (all exact rationals), and double-precision time integration of
// the induced Euler-type evolution (Xdot, Z) = {X, DX, Z}.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <vector>

#include "tia/linalg.hpp"
#include "tia/tensor.hpp"

namespace tia {

struct Augmentation {
  Rational delta{1};
  void validate() const;  // requires 0 < delta <= 1
};

// Point-counting functional weighted by delta: every term must be a pure
// tensor of decorated points and contributes coeff * delta^(sum of all its
// decorations).  Throws std::invalid_argument on any non-point factor.
Rational augment(const ChainD& x, const Augmentation& aug);

// Signed geometric duality on the 3-D double-spacing complex: the same
// factor-wise swap as star_W, with the Euclidean orientation sign on ordered
// axes (sticks and squares of the middle axis pick up a minus sign; vertices
// and cubes are fixed-sign).  Used by the inner product below.
ChainD hodge_star(const ChainD& x);

struct TwoHComplex {
  long N = 0;
  LatticeD lat;  // h = 1, periods (N, N, N)
  // Cells grouped by dimension; sticks and squares are ordered axis-major
  // then site-major, so star_W maps sticks[i] to squares[i].
  std::vector<GenD> points, sticks, squares, cubes;

  GenD point(std::array<long, 3> center) const;
  GenD stick(int axis, std::array<long, 3> center) const;
  GenD square(int axis, std::array<long, 3> center) const;
  GenD cube(std::array<long, 3> center) const;
  std::size_t square_index(const GenD& sq) const;  // position in `squares`
};

TwoHComplex build_2h_complex(long N);  // throws std::invalid_argument if N < 3

// Basis (exact row reduction) of V = image of b -> *(boundary b) on
// zero-decorated squares; every output is supported on squares only.
std::vector<ChainD> coexact_basis(const TwoHComplex& complex);

struct FluidAlgebra {
  TwoHComplex complex;
  Augmentation aug;
  std::vector<ChainD> basisV;
  Mat gram;     // (a, b) = #(hodge_star(a) transverse b)
  Mat linking;  // <a, b> = #(a transverse boundary(b))
  Mat Dmat;     // exact solution of gram * D = linking
  Definiteness gramDefiniteness = Definiteness::Indefinite;

  struct TripleEntry {
    std::size_t i, j, k;  // i < j < k
    Rational t;           // {v_i, v_j, v_k}
  };
  std::vector<TripleEntry> triple;  // alternating; canonical entries only
  bool withTriple = false;
};

// Assembles the algebra; withTriple=false skips the triple form (useful for
// definiteness studies at larger N).  Throws on a degenerate inner product.
FluidAlgebra build_fluid_algebra(long N, const Augmentation& aug, bool withTriple = true);

// Double-precision projection of the exact structure with a prefactored
// inner product, for time integration.
class FluidSim {
 public:
  explicit FluidSim(const FluidAlgebra& alg);
  ~FluidSim();
  FluidSim(FluidSim&&) noexcept;
  FluidSim& operator=(FluidSim&&) noexcept;

  std::size_t dim() const;
  double energy(const std::vector<double>& X) const;    // (X, X)
  double helicity(const std::vector<double>& X) const;  // <X, X>

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  friend std::vector<double> euler_rhs(const FluidSim&, const std::vector<double>&);
};

// Solves gram * Xdot = T(X, DX, .) with the prefactored inner product.
std::vector<double> euler_rhs(const FluidSim& sim, const std::vector<double>& X);

// Seeded random state of unit energy.
std::vector<double> initial_state(const FluidSim& sim, std::uint64_t seed);

enum class Method { Rk4, ImplicitMidpoint };

struct StepRecord {
  long step;
  double time, energy, helicity;
};
struct Trajectory {
  std::vector<StepRecord> records;  // one per step, including step 0
  std::vector<double> finalState;
};

// Deterministic fixed-step integration; implicit midpoint iterates to
// tolerance 1e-13 (max 50 iterations) and throws, naming the step, on
// non-convergence.
Trajectory integrate(const FluidSim& sim, const std::vector<double>& X0, double dt, long steps,
                     Method method);
Trajectory integrate(const FluidAlgebra& alg, const std::vector<double>& X0, double dt, long steps,
                     Method method);

// Header `step,time,energy,helicity`, full precision, one row per record.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

}  // namespace tia
