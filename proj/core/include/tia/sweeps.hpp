#pragma once

// Verification sweeps: exhaustive law checking for the 1-D algebra, a layered
// exhaustive strategy for the 3-D tensor algebra, closed-form-vs-oracle
// agreement, the truncation-ideal property, and the closure example on the
// 5-periodic lattice.  Each sweep returns a report with per-law tallies and
// the first few counterexamples (empty on success).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tia/cells.hpp"

namespace tia {

struct SweepReport {
  long long checks = 0;
  long long failures = 0;
  std::map<std::string, long long> laws;  // identity name -> number of instances checked
  std::vector<std::string> notes;         // first few counterexample descriptions

  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
  void merge(const SweepReport& o);
};

struct SweepOptions {
  int decBound = 2;
  long window = 4;                // number of consecutive sites on a line axis
  std::optional<long> period;     // periodic lattice instead of a window
  bool injectDefect = false;      // corrupt one product: the sweep must then fail
};

// Human-readable forms for reports and error messages.
std::string describe(const Gen1D& g);
std::string describe(const Chain& c);

// All 1-D graded-algebra laws, exhaustively over the generator pool of the
// window: graded commutativity, associativity, the Leibniz rule, boundary
// squared, and codimension additivity of products.
SweepReport sweep_dga_1d(const SweepOptions& opt);

// 3-D laws over three equal axes.  Layered: (1) parity identities of the sign
// bookkeeping, checked against independent re-implementations of the sign
// formulas; (2) conformance of the production tensor product/boundary to
// those formulas on every kind pattern; (3) direct end-to-end law checks on a
// canonical family covering every relative configuration; (4) seeded random
// decorated pairs and triples from the full pool; (5) boundary-squared over
// the full pool (exhaustive when the pool is small enough, sampled beyond
// that).  Together with the exhaustive 1-D sweep these cover the axioms for
// every generator pair of the pool: products and boundaries split axis-wise,
// so a violation would have to show up either in a 1-D law or in a sign
// identity, and both are checked exhaustively.
SweepReport sweep_dga_3d(const SweepOptions& opt, std::uint64_t seed = 2026);

// Closed forms vs the integration oracle on every ordered pair of the window
// pool, plus every generator's boundary.  useSwappedBinomial substitutes a
// plausible-but-wrong binomial variant for the point-meets-infinitesimal
// coefficient, to demonstrate that the comparison can fail.
struct OracleAgreement {
  long long products = 0;
  long long boundaries = 0;
  SweepReport report;
};
OracleAgreement sweep_oracle(int decBound, long window, bool useSwappedBinomial = false);

// The span of generators with min-decoration >= K is closed under the
// product (checked exhaustively over pairs from the span) but not under the
// boundary (witness: boundary of x_{a,b}^{K,K}).  Closure holds because every
// decoration slot of a product term is either inherited from one factor or is
// a merge m+m'+1 of two; with both factors in the span every inherited slot
// is >= K.  One factor alone does not absorb: a bare point at an endpoint of
// a decorated interval keeps its own decorations on one side (for example an
// undecorated point on the left end of x_{a,b}^{1,n} yields (1/3) P^{2,0},
// whatever n was), so no decoration-based span absorbs arbitrary products.
SweepReport sweep_ideal(int decBound, long window, int K);

// Closure of {points, width-2 intervals} on the 5-periodic lattice under the
// product, decorations capped at 3: must equal the expected 260-generator
// family (points, unit intervals, equally-decorated width-2 intervals, and
// infinitesimal intervals, at every site).
SweepReport u_closure_check();

}  // namespace tia
