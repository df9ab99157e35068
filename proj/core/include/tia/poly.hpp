#pragma once

// Exact univariate and bivariate polynomial algebra over the rationals, with
// the definite/partial integration the density calculations need. Coefficient
// arrays are dense and trimmed; all operations are pure.

#include "tia/rational.hpp"

#include <cstddef>
#include <vector>

namespace tia {

class Poly1 {
 public:
  Poly1() = default;                         // zero polynomial
  explicit Poly1(Rational constant);
  explicit Poly1(std::vector<Rational> coeffs);  // coeffs[i] multiplies z^i

  static Poly1 z();                          // the monomial z
  // (1+z)^m (1-z)^n, the building block of every density in the model.
  static Poly1 binom_pow(int m, int n);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Rational& s, const Poly1& p);
  bool operator==(const Poly1& o) const = default;

  // Antiderivative with zero constant term.
  Poly1 antiderivative() const;

  // Multiplicity of the root at x (0 if p(x) != 0); on return, if quotient is
  // non-null it holds p / (z - x)^multiplicity.
  int root_multiplicity(const Rational& x, Poly1* quotient = nullptr) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact definite integral of p over [lo, hi].
Rational integrate_definite(const Poly1& p, const Rational& lo, const Rational& hi);

// A bound of integration for the partial integral of a bivariate polynomial:
// either a rational constant or "the other variable" (simplex-style bounds).
struct Bound {
  static Bound constant(Rational v) { return Bound{false, std::move(v)}; }
  static Bound other_var() { return Bound{true, Rational(0)}; }
  bool is_other_var;
  Rational value;
};

class Poly2 {
 public:
  Poly2() = default;  // zero
  // coeffs[i][j] multiplies z1^i z2^j.
  explicit Poly2(std::vector<std::vector<Rational>> coeffs);

  // u(z1) * v(z2) as a bivariate polynomial.
  static Poly2 outer(const Poly1& u, const Poly1& v);

  bool is_zero() const { return c_.empty(); }
  int degree1() const { return static_cast<int>(c_.size()) - 1; }
  int degree2() const;
  Rational coeff(std::size_t i, std::size_t j) const;

  Poly2& operator+=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& s, const Poly2& p);
  bool operator==(const Poly2& o) const = default;

  // Substitutes z_var = x and returns the univariate polynomial in the other
  // variable.
  Poly1 eval_var(int var, const Rational& x) const;

  // Writes the polynomial as u(z1)*v(z2) if its coefficient matrix has rank
  // one; returns false otherwise. The factors are unique up to a reciprocal
  // scalar pair; callers only use their product and root structure, which are
  // well defined.
  bool separate(Poly1& u, Poly1& v) const;

  // Exact integral over the triangle -1 <= z1 < z2 <= 1.
  Rational integrate_simplex() const;

 private:
  void trim();
  std::vector<std::vector<Rational>> c_;  // c_[i][j] z1^i z2^j
};

// Integrates out variable `var` (0 for z1, 1 for z2) between the bounds and
// returns the exact polynomial in the remaining variable. A Bound::other_var
// bound substitutes the surviving variable.
Poly1 integrate_partial(const Poly2& p, int var, const Bound& lo, const Bound& hi);

// Named alias for Poly1/Poly2 products (the operators do the work).
inline Poly1 poly_mul(const Poly1& a, const Poly1& b) { return a * b; }
inline Poly2 poly_mul(const Poly2& a, const Poly2& b) { return a * b; }

}  // namespace tia
