#pragma once

// Tensor products of the 1-D algebra over the axes of a d-dimensional
// lattice.  Signs follow the graded (Koszul) convention in suffix form: a
// boundary acting on factor i picks up the parity of the total codimension of
// the factors AFTER i, and the factor-interleaving sign of a product counts
// crossings of each second-argument factor with the EARLIER first-argument
// factors.  The two bookkeeping choices are made consistently so that the
// product is graded-commutative and associative and the boundary is a graded
// derivation (verified exhaustively in the test suite).

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tia/algebra1d.hpp"
#include "tia/cells.hpp"

namespace tia {

struct LatticeD {
  Rational h{1};
  // One entry per axis: nullopt for a line axis, N (>= 3) for a periodic one.
  std::vector<std::optional<long>> periods;

  int dim() const { return static_cast<int>(periods.size()); }
  Lattice1D axis(int i) const { return Lattice1D{h, periods.at(static_cast<size_t>(i))}; }
  void validate() const;
  bool operator==(const LatticeD&) const = default;
};

struct GenD {
  std::vector<Gen1D> factors;

  int codim() const;
  auto operator<=>(const GenD&) const = default;
};

GenD canonicalize(const GenD& g, const LatticeD& lat);

class ChainD {
 public:
  explicit ChainD(LatticeD lat = LatticeD{Rational(1), {std::nullopt}});

  const LatticeD& lattice() const { return lat_; }
  const std::map<GenD, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const GenD& g) const;

  void add(const GenD& g, const Rational& c);
  ChainD& operator+=(const ChainD& o);
  ChainD& operator-=(const ChainD& o);
  ChainD& operator*=(const Rational& c);

  friend ChainD operator+(ChainD a, const ChainD& b) { return a += b; }
  friend ChainD operator-(ChainD a, const ChainD& b) { return a -= b; }
  friend ChainD operator*(const Rational& c, ChainD a) { return a *= c; }
  bool operator==(const ChainD&) const = default;

 private:
  LatticeD lat_;
  std::map<GenD, Rational> terms_;
};

ChainD chain_of(const LatticeD& lat, const GenD& g, const Rational& c = Rational(1));

// Graded derivation extending the 1-D boundary factor-wise.
ChainD boundary_d(const ChainD& x);

// Graded-commutative transverse product, axis-wise with interleaving signs.
ChainD intersect_d(const ChainD& x, const ChainD& y);

// A chain contains a term outside the domain of the duality map below.
struct NotInW : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unsigned factor-wise duality on the double-spacing complex: an undecorated
// point at site a swaps with the undecorated width-2 interval centered at a,
// on every axis independently.  Any other factor is outside the domain.
ChainD star_W(const ChainD& x);

}  // namespace tia
