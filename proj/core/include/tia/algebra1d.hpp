#pragma once

// The closed-form one-dimensional algebra: boundary operator, transverse
// product (every relative-position case, with exact rational coefficients),
// and the decoration-truncation ideal. Periodic lattices are handled by
// lifting to the universal cover and summing over period translates, so the
// case table itself only ever sees line configurations.

#include "tia/cells.hpp"

namespace tia {

// Linear boundary operator:
//   d x_{a,b}^{m,n} = P_b^{0,n} - P_a^{m,0}
//   d x_{a,a}^{m,n} = P_a^{m+1,n} - P_a^{m,n+1}
//   d P_a^{m,n}     = 0
Chain boundary(const Chain& x);
Chain boundary_gen(const Gen1D& g, const Lattice1D& lat);

// Transverse product of two generators on one lattice. On a periodic lattice
// this sums the line products of one fixed lift against all period translates
// of the other.
Chain intersect_gen(const Gen1D& g, const Gen1D& h, const Lattice1D& lat);

// Bilinear extension of intersect_gen.
Chain intersect(const Chain& x, const Chain& y);

// Projection along the ideal spanned by generators with min(m, n) >= K:
// keeps exactly the terms outside the ideal.
Chain truncate(const Chain& x, int K);

// True if every term of x has min decoration >= K (x lies in the ideal).
bool in_truncation_ideal(const Chain& x, int K);

}  // namespace tia
