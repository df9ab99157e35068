#include "tia/fluid.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

namespace tia {

namespace {

long flat(long N, const std::array<long, 3>& a) { return (a[0] * N + a[1]) * N + a[2]; }

Gen1D star_factor(const Gen1D& f) {
  if (f.dec.m != 0 || f.dec.n != 0)
    throw NotInW("decorated factor outside the double-spacing complex");
  if (f.kind == Kind::Point) return Gen1D::interval(f.a - 1, f.a + 1, {0, 0});
  if (f.kind == Kind::Interval && f.b - f.a == 2) return Gen1D::point(f.a + 1, {0, 0});
  throw NotInW("factor is not a point or width-2 interval");
}

}  // namespace

void Augmentation::validate() const {
  if (delta <= 0 || delta > 1) throw std::invalid_argument("delta must lie in (0, 1]");
}

Rational augment(const ChainD& x, const Augmentation& aug) {
  aug.validate();
  Rational total(0);
  for (const auto& [G, c] : x.terms()) {
    int k = 0;
    for (const auto& f : G.factors) {
      if (f.kind != Kind::Point)
        throw std::invalid_argument("augmentation applied to a non-point factor");
      k += f.dec.total();
    }
    Rational w = c;
    for (int i = 0; i < k; ++i) w *= aug.delta;
    total += w;
  }
  return total;
}

ChainD hodge_star(const ChainD& x) {
  const LatticeD& lat = x.lattice();
  if (lat.dim() != 3) throw std::invalid_argument("hodge_star requires a 3-D lattice");
  ChainD out(lat);
  for (const auto& [G, c] : x.terms()) {
    int nIntervals = 0, stickAxis = -1, normalAxis = -1;
    for (int i = 0; i < 3; ++i) {
      const auto& f = G.factors[static_cast<size_t>(i)];
      if (f.kind == Kind::Interval) {
        ++nIntervals;
        stickAxis = i;
      } else if (f.kind == Kind::Point) {
        normalAxis = i;
      } else {
        throw NotInW("infinitesimal factor outside the double-spacing complex");
      }
    }
    // Euclidean orientation sign on ordered axes: the middle axis's stick and
    // square are reversed (dx2 pairs with dx3^dx1 = -dx1^dx3).
    Rational sign(1);
    if ((nIntervals == 1 && stickAxis == 1) || (nIntervals == 2 && normalAxis == 1)) sign = -1;
    GenD H = G;
    for (auto& f : H.factors) f = star_factor(f);
    out.add(H, sign * c);
  }
  return out;
}

GenD TwoHComplex::point(std::array<long, 3> center) const {
  GenD g;
  for (int i = 0; i < 3; ++i) g.factors.push_back(Gen1D::point(center[static_cast<size_t>(i)], {0, 0}));
  return canonicalize(g, lat);
}

GenD TwoHComplex::stick(int axis, std::array<long, 3> center) const {
  GenD g;
  for (int i = 0; i < 3; ++i) {
    const long c = center[static_cast<size_t>(i)];
    g.factors.push_back(i == axis ? Gen1D::interval(c - 1, c + 1, {0, 0})
                                  : Gen1D::point(c, {0, 0}));
  }
  return canonicalize(g, lat);
}

GenD TwoHComplex::square(int axis, std::array<long, 3> center) const {
  GenD g;
  for (int i = 0; i < 3; ++i) {
    const long c = center[static_cast<size_t>(i)];
    g.factors.push_back(i == axis ? Gen1D::point(c, {0, 0})
                                  : Gen1D::interval(c - 1, c + 1, {0, 0}));
  }
  return canonicalize(g, lat);
}

GenD TwoHComplex::cube(std::array<long, 3> center) const {
  GenD g;
  for (int i = 0; i < 3; ++i) {
    const long c = center[static_cast<size_t>(i)];
    g.factors.push_back(Gen1D::interval(c - 1, c + 1, {0, 0}));
  }
  return canonicalize(g, lat);
}

std::size_t TwoHComplex::square_index(const GenD& sq) const {
  int axis = -1;
  std::array<long, 3> center{};
  for (int i = 0; i < 3; ++i) {
    const auto& f = sq.factors[static_cast<size_t>(i)];
    if (f.kind == Kind::Point) {
      if (axis != -1) throw std::invalid_argument("not a square of the double-spacing complex");
      axis = i;
      center[static_cast<size_t>(i)] = f.a;
    } else if (f.kind == Kind::Interval && f.b - f.a == 2) {
      center[static_cast<size_t>(i)] = (f.a + 1) % N;
    } else {
      throw std::invalid_argument("not a square of the double-spacing complex");
    }
  }
  if (axis == -1) throw std::invalid_argument("not a square of the double-spacing complex");
  const std::size_t idx =
      static_cast<std::size_t>(axis) * static_cast<std::size_t>(N * N * N) +
      static_cast<std::size_t>(flat(N, center));
  if (!(squares[idx] == canonicalize(sq, lat)))
    throw std::invalid_argument("square does not match its computed index");
  return idx;
}

TwoHComplex build_2h_complex(long N) {
  if (N < 3) throw std::invalid_argument("periodic lattice requires N >= 3");
  TwoHComplex cx;
  cx.N = N;
  cx.lat = LatticeD{Rational(1), {N, N, N}};
  for (long a1 = 0; a1 < N; ++a1)
    for (long a2 = 0; a2 < N; ++a2)
      for (long a3 = 0; a3 < N; ++a3) {
        cx.points.push_back(cx.point({a1, a2, a3}));
        cx.cubes.push_back(cx.cube({a1, a2, a3}));
      }
  for (int axis = 0; axis < 3; ++axis)
    for (long a1 = 0; a1 < N; ++a1)
      for (long a2 = 0; a2 < N; ++a2)
        for (long a3 = 0; a3 < N; ++a3) {
          cx.sticks.push_back(cx.stick(axis, {a1, a2, a3}));
          cx.squares.push_back(cx.square(axis, {a1, a2, a3}));
        }
  return cx;
}

std::vector<ChainD> coexact_basis(const TwoHComplex& complex) {
  const std::size_t n = complex.squares.size();
  Mat M(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const ChainD image = star_W(boundary_d(chain_of(complex.lat, complex.squares[c])));
    for (const auto& [G, coeff] : image.terms()) M.at(complex.square_index(G), c) = coeff;
  }
  Mat R = M;
  const auto pivots = rref_in_place(R);
  std::vector<ChainD> basis;
  basis.reserve(pivots.size());
  for (const auto p : pivots) {
    ChainD v(complex.lat);
    for (std::size_t r = 0; r < n; ++r)
      if (M.at(r, p) != 0) v.add(complex.squares[r], M.at(r, p));
    basis.push_back(std::move(v));
  }
  return basis;
}

FluidAlgebra build_fluid_algebra(long N, const Augmentation& aug, bool withTriple) {
  aug.validate();
  FluidAlgebra alg;
  alg.complex = build_2h_complex(N);
  alg.aug = aug;
  alg.basisV = coexact_basis(alg.complex);
  const std::size_t n = alg.basisV.size();

  std::vector<ChainD> starred, bounds;
  starred.reserve(n);
  bounds.reserve(n);
  for (const auto& v : alg.basisV) {
    starred.push_back(hodge_star(v));
    bounds.push_back(boundary_d(v));
  }

  alg.gram = Mat(n, n);
  alg.linking = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      alg.gram.at(i, j) = augment(intersect_d(starred[i], alg.basisV[j]), aug);
      alg.linking.at(i, j) = augment(intersect_d(alg.basisV[i], bounds[j]), aug);
    }
  alg.gramDefiniteness = classify_definiteness(alg.gram);

  try {
    alg.Dmat = solve(alg.gram, alg.linking);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("degenerate inner product: the gram matrix is singular");
  }

  alg.withTriple = withTriple;
  if (withTriple) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const ChainD P = intersect_d(alg.basisV[i], alg.basisV[j]);
        if (P.empty()) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          const Rational t = augment(intersect_d(P, alg.basisV[k]), aug);
          if (t != 0) alg.triple.push_back({i, j, k, t});
        }
      }
  }
  return alg;
}

struct FluidSim::Impl {
  Eigen::MatrixXd G, L, D;
  Eigen::LLT<Eigen::MatrixXd> llt;
  struct TripleD {
    std::size_t i, j, k;
    double t;
  };
  std::vector<TripleD> triple;
};

FluidSim::FluidSim(const FluidAlgebra& alg) : impl_(std::make_unique<Impl>()) {
  if (!alg.withTriple)
    throw std::invalid_argument("time integration requires an algebra built with the triple form");
  const auto n = static_cast<Eigen::Index>(alg.basisV.size());
  impl_->G.resize(n, n);
  impl_->L.resize(n, n);
  impl_->D.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      impl_->G(i, j) = to_double(alg.gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      impl_->L(i, j) = to_double(alg.linking.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      impl_->D(i, j) = to_double(alg.Dmat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  impl_->llt.compute(impl_->G);
  if (impl_->llt.info() != Eigen::Success)
    throw std::runtime_error("inner product is not positive definite in double precision");
  impl_->triple.reserve(alg.triple.size());
  for (const auto& e : alg.triple) impl_->triple.push_back({e.i, e.j, e.k, to_double(e.t)});
}

FluidSim::~FluidSim() = default;
FluidSim::FluidSim(FluidSim&&) noexcept = default;
FluidSim& FluidSim::operator=(FluidSim&&) noexcept = default;

std::size_t FluidSim::dim() const { return static_cast<std::size_t>(impl_->G.rows()); }

namespace {
Eigen::VectorXd to_vec(const std::vector<double>& x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}
}  // namespace

double FluidSim::energy(const std::vector<double>& X) const {
  const Eigen::VectorXd x = to_vec(X);
  return x.dot(impl_->G * x);
}

double FluidSim::helicity(const std::vector<double>& X) const {
  const Eigen::VectorXd x = to_vec(X);
  return x.dot(impl_->L * x);
}

std::vector<double> euler_rhs(const FluidSim& sim, const std::vector<double>& X) {
  const auto& im = *sim.impl_;
  if (X.size() != static_cast<std::size_t>(im.G.rows()))
    throw std::invalid_argument("state dimension mismatch");
  const Eigen::VectorXd x = to_vec(X);
  const Eigen::VectorXd y = im.D * x;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(im.G.rows());
  for (const auto& e : im.triple) {
    const auto i = static_cast<Eigen::Index>(e.i), j = static_cast<Eigen::Index>(e.j),
               k = static_cast<Eigen::Index>(e.k);
    c[k] += e.t * (x[i] * y[j] - x[j] * y[i]);
    c[j] += e.t * (x[k] * y[i] - x[i] * y[k]);
    c[i] += e.t * (x[j] * y[k] - x[k] * y[j]);
  }
  const Eigen::VectorXd xdot = im.llt.solve(c);
  return std::vector<double>(xdot.data(), xdot.data() + xdot.size());
}

std::vector<double> initial_state(const FluidSim& sim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> X(sim.dim());
  for (auto& v : X)
    v = 2.0 * static_cast<double>(rng() >> 11) * 0x1p-53 - 1.0;
  const double e = sim.energy(X);
  if (!(e > 0)) throw std::runtime_error("random initial state has non-positive energy");
  const double s = 1.0 / std::sqrt(e);
  for (auto& v : X) v *= s;
  return X;
}

namespace {

std::vector<double> axpy(const std::vector<double>& x, double a, const std::vector<double>& y) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + a * y[i];
  return r;
}

}  // namespace

Trajectory integrate(const FluidSim& sim, const std::vector<double>& X0, double dt, long steps,
                     Method method) {
  if (dt <= 0) throw std::invalid_argument("dt must be positive");
  if (steps < 0) throw std::invalid_argument("step count must be non-negative");
  if (X0.size() != sim.dim()) throw std::invalid_argument("state dimension mismatch");

  std::vector<double> X = X0;
  Trajectory tr;
  tr.records.reserve(static_cast<std::size_t>(steps) + 1);
  const auto record = [&](long s) {
    tr.records.push_back({s, static_cast<double>(s) * dt, sim.energy(X), sim.helicity(X)});
  };
  record(0);

  const std::size_t n = X.size();
  for (long s = 1; s <= steps; ++s) {
    if (method == Method::Rk4) {
      const auto k1 = euler_rhs(sim, X);
      const auto k2 = euler_rhs(sim, axpy(X, dt / 2, k1));
      const auto k3 = euler_rhs(sim, axpy(X, dt / 2, k2));
      const auto k4 = euler_rhs(sim, axpy(X, dt, k3));
      for (std::size_t i = 0; i < n; ++i)
        X[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    } else {
      // Midpoint state Y solves Y = X + (dt/2) f(Y); fixed-point iteration
      // from an explicit-Euler predictor.
      std::vector<double> Y = axpy(X, dt / 2, euler_rhs(sim, X));
      bool converged = false;
      for (int it = 0; it < 50 && !converged; ++it) {
        std::vector<double> Ynew = axpy(X, dt / 2, euler_rhs(sim, Y));
        double diff = 0, scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
          diff = std::max(diff, std::abs(Ynew[i] - Y[i]));
          scale = std::max(scale, std::abs(Ynew[i]));
        }
        Y = std::move(Ynew);
        converged = diff <= 1e-13 * scale;
      }
      if (!converged)
        throw std::runtime_error("implicit midpoint did not converge at step " +
                                 std::to_string(s));
      for (std::size_t i = 0; i < n; ++i) X[i] = 2 * Y[i] - X[i];
    }
    record(s);
  }
  tr.finalState = std::move(X);
  return tr;
}

Trajectory integrate(const FluidAlgebra& alg, const std::vector<double>& X0, double dt, long steps,
                     Method method) {
  const FluidSim sim(alg);
  return integrate(sim, X0, dt, steps, method);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "step,time,energy,helicity\n";
  char buf[160];
  for (const auto& r : t.records) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g\n", r.step, r.time, r.energy,
                  r.helicity);
    os << buf;
  }
}

}  // namespace tia
