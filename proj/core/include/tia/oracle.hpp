#pragma once

// Independent re-derivation of the transverse-product structure constants by
// exact polynomial integration over the endpoint-displacement distributions.
//
// Every decorated cell is modelled by the joint density of its displaced
// endpoints in local coordinates (displacement in [-1, 1] around each site):
//
//   point  (m,n):  one variable,  density  f_{m,n}(z)      ~ (1+z)^m (1-z)^n
//   interval:      two ends, independent,  left ~ f_{m,0},  right ~ f_{0,n}
//   degenerate
//   interval:      ordered pair z1 < z2,   density g_{m,n} ~ (1+z1)^m (1-z2)^n
//
// Products are computed case by case as explicit probability integrals (which
// endpoint order survives, weighted by the chance of that order), and the
// resulting densities are matched back against the basis shapes.  None of the
// closed-form coefficient tables in algebra1d.cpp are consulted.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tia/algebra1d.hpp"
#include "tia/cells.hpp"
#include "tia/poly.hpp"

namespace tia::oracle {

// A computed density failed to match any basis density shape.
struct NotInBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normalized basis densities.
Poly1 point_density(int m, int n);          // f_{m,n}, mass 1 on [-1, 1]
Poly2 degenerate_density(int m, int n);     // g_{m,n}, mass 1 on z1 < z2

// Cumulative helpers: integral of p from -1 up to z / from z up to +1.
Poly1 cdf_below(const Poly1& p);
Poly1 cdf_above(const Poly1& p);

// Endpoint-displacement density of a generator, in local coordinates about
// its anchor site(s).  Total mass is exactly 1.
struct Density {
  enum class Kind { Point, Interval, Simplex };
  Kind kind;
  long anchorA = 0, anchorB = 0;  // anchorB used by Interval only
  Poly1 p1;                       // Point: the density; Interval: left end
  Poly1 p1Right;                  // Interval: right end
  Poly2 p2;                       // Simplex: ordered-pair density
};
Density density_of(const Gen1D& g);

// Match a density against the basis shapes: returns the total mass and the
// generator whose density the input is a multiple of; throws NotInBasis.
std::pair<Rational, Gen1D> express_in_basis(const Density& d);

// Shape-specific variants of express_in_basis used by the case analyses.
std::pair<Rational, Gen1D> express_point_density(const Poly1& q, long site);
std::pair<Rational, Gen1D> express_interval_density(const Poly1& qLeft, long siteLeft,
                                                    const Poly1& qRight, long siteRight);
std::pair<Rational, Gen1D> express_degenerate_density(const Poly2& q, long site);

// Transverse product of two generators, derived purely by integration.
Chain intersect_via_integration(const Gen1D& g, const Gen1D& h, const Lattice1D& lat);

// Boundary of a generator derived from the endpoint marginals of its density.
Chain boundary_via_integration(const Gen1D& g, const Lattice1D& lat);

// Monte Carlo cross-check: sample both generators' endpoint displacements
// (exact-arithmetic rejection sampling of the basis densities), intersect the
// sampled representatives geometrically, and histogram the combinatorial type
// of the result.  Bin keys are generators with zero decorations: binning is by
// kind and site(s) only, and each bin's mass estimates the coefficient of the
// product term supported there.  Line lattices only.
struct McResult {
  long long samples = 0;
  std::map<Gen1D, double> mass;
};
McResult mc_estimate(const Gen1D& g, const Gen1D& h, long long samples, std::uint64_t seed);

}  // namespace tia::oracle
