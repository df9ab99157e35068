#pragma once

// Lattices, decorated one-dimensional cells, and chains — the vector-space
// skeleton everything else acts on. Values are immutable in spirit: chains
// canonicalize on insertion and never store zero coefficients.

#include "tia/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>

namespace tia {

struct LatticeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One-dimensional lattice: integer positions in units of the spacing h, which
// is metadata only (no coefficient depends on it). A periodic lattice has
// period N >= 3 and reduces positions mod N.
struct Lattice1D {
  Rational h{1};
  std::optional<long> period;

  bool operator==(const Lattice1D&) const = default;
  void validate() const {
    if (h <= 0) throw std::invalid_argument("lattice spacing must be positive");
    if (period && *period < 3) throw std::invalid_argument("lattice period must be >= 3");
  }
};

struct Decoration {
  int m{0};
  int n{0};
  auto operator<=>(const Decoration&) const = default;
  int total() const { return m + n; }
  int min() const { return m < n ? m : n; }
};

enum class Kind : unsigned char { Point, Interval, Infinitesimal };

// A decorated cell: a point at a, a regular interval [a, b] (a < b as stored;
// on a periodic lattice b = a + length with 1 <= length <= N-1), or an
// infinitesimal interval concentrated at a.
struct Gen1D {
  Kind kind{Kind::Point};
  long a{0};
  long b{0};  // meaningful for Interval only; equals a otherwise
  Decoration dec{};

  static Gen1D point(long a, Decoration d = {}) { return {Kind::Point, a, a, d}; }
  static Gen1D interval(long a, long b, Decoration d = {}) {
    if (b <= a) throw std::invalid_argument("interval needs a < b");
    return {Kind::Interval, a, b, d};
  }
  static Gen1D infinitesimal(long a, Decoration d = {}) {
    return {Kind::Infinitesimal, a, a, d};
  }

  auto operator<=>(const Gen1D&) const = default;

  int codim() const { return kind == Kind::Point ? 1 : 0; }
  long length() const { return b - a; }
};

inline int codim(const Gen1D& g) { return g.codim(); }
inline int decoration_total(const Gen1D& g) { return g.dec.total(); }

// Reduces a generator to canonical position on the lattice: on a periodic
// lattice the anchor lands in [0, N) and interval length must fit in the
// fundamental domain.
Gen1D canonicalize(const Gen1D& g, const Lattice1D& lat);

// Finite formal linear combination of generators over one lattice. Mixed
// grading is allowed; zero terms are pruned eagerly.
class Chain {
 public:
  explicit Chain(Lattice1D lat = {}) : lat_(std::move(lat)) { lat_.validate(); }

  const Lattice1D& lattice() const { return lat_; }
  const std::map<Gen1D, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Gen1D& g) const;

  void add(const Gen1D& g, const Rational& c);

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& s);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain x) { return x *= s; }
  bool operator==(const Chain& o) const = default;

 private:
  Lattice1D lat_;
  std::map<Gen1D, Rational> terms_;
};

// Free-function conveniences over the operators.
inline Chain chain_add(const Chain& x, const Chain& y) { return x + y; }
inline Chain chain_scale(const Rational& c, const Chain& x) { return c * x; }

// Single-term chain helper.
Chain chain_of(const Lattice1D& lat, const Gen1D& g, const Rational& c = Rational(1));

}  // namespace tia
