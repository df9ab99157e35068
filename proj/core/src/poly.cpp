#include "tia/poly.hpp"

#include <stdexcept>

namespace tia {

// ---- Poly1 -----------------------------------------------------------------

Poly1::Poly1(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::z() { return Poly1(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly1 Poly1::binom_pow(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("binom_pow needs m,n >= 0");
  // Coefficient of z^k in (1+z)^m (1-z)^n by direct convolution.
  std::vector<Rational> c(static_cast<std::size_t>(m + n) + 1, Rational(0));
  for (int i = 0; i <= m; ++i) {
    const Int bi = binomial(m, i);
    for (int j = 0; j <= n; ++j) {
      Int term = bi * binomial(n, j);
      if (j % 2 != 0) term = -term;
      c[static_cast<std::size_t>(i + j)] += Rational(term);
    }
  }
  return Poly1(std::move(c));
}

Rational Poly1::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) { return *this += -o; }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(c));
}

Poly1 operator*(const Rational& s, const Poly1& p) {
  if (s == 0) return Poly1();
  Poly1 r = p;
  for (auto& v : r.c_) v *= s;
  return r;
}

Poly1 Poly1::antiderivative() const {
  if (is_zero()) return Poly1();
  std::vector<Rational> c(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
  return Poly1(std::move(c));
}

int Poly1::root_multiplicity(const Rational& x, Poly1* quotient) const {
  if (is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  Poly1 q = *this;
  int mult = 0;
  while (q.eval(x) == 0) {
    // Synthetic division by (z - x); exact since x is a root.
    std::vector<Rational> d(q.c_.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t i = q.c_.size(); i-- > 1;) {
      carry = q.c_[i] + carry * x;
      d[i - 1] = carry;
    }
    q = Poly1(std::move(d));
    ++mult;
    if (q.is_zero()) break;
  }
  if (quotient) *quotient = q;
  return mult;
}

Rational integrate_definite(const Poly1& p, const Rational& lo, const Rational& hi) {
  const Poly1 a = p.antiderivative();
  return a.eval(hi) - a.eval(lo);
}

// ---- Poly2 -----------------------------------------------------------------

Poly2::Poly2(std::vector<std::vector<Rational>> coeffs) : c_(std::move(coeffs)) {
  std::size_t width = 0;
  for (const auto& row : c_) width = std::max(width, row.size());
  for (auto& row : c_) row.resize(width, Rational(0));
  trim();
}

void Poly2::trim() {
  auto row_zero = [](const std::vector<Rational>& r) {
    for (const auto& v : r)
      if (v != 0) return false;
    return true;
  };
  while (!c_.empty() && row_zero(c_.back())) c_.pop_back();
  std::size_t width = 0;
  for (const auto& row : c_) {
    std::size_t w = row.size();
    while (w > 0 && row[w - 1] == 0) --w;
    width = std::max(width, w);
  }
  for (auto& row : c_) row.resize(width, Rational(0));
  if (width == 0) c_.clear();
}

Poly2 Poly2::outer(const Poly1& u, const Poly1& v) {
  if (u.is_zero() || v.is_zero()) return Poly2();
  std::vector<std::vector<Rational>> c(u.coeffs().size(),
                                       std::vector<Rational>(v.coeffs().size(), Rational(0)));
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    for (std::size_t j = 0; j < v.coeffs().size(); ++j)
      c[i][j] = u.coeffs()[i] * v.coeffs()[j];
  return Poly2(std::move(c));
}

int Poly2::degree2() const {
  return c_.empty() ? -1 : static_cast<int>(c_.front().size()) - 1;
}

Rational Poly2::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return Rational(0);
  return c_[i][j];
}

Poly2& Poly2::operator+=(const Poly2& o) {
  const std::size_t rows = std::max(c_.size(), o.c_.size());
  const std::size_t cols = std::max(c_.empty() ? 0 : c_[0].size(),
                                    o.c_.empty() ? 0 : o.c_[0].size());
  c_.resize(rows);
  for (auto& row : c_) row.resize(cols, Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] += o.c_[i][j];
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  std::vector<std::vector<Rational>> c(
      a.c_.size() + b.c_.size() - 1,
      std::vector<Rational>(a.c_[0].size() + b.c_[0].size() - 1, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < a.c_[0].size(); ++j) {
      if (a.c_[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.c_.size(); ++k)
        for (std::size_t l = 0; l < b.c_[0].size(); ++l)
          c[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
    }
  return Poly2(std::move(c));
}

Poly2 operator*(const Rational& s, const Poly2& p) {
  if (s == 0) return Poly2();
  Poly2 r = p;
  for (auto& row : r.c_)
    for (auto& v : row) v *= s;
  return r;
}

Poly1 Poly2::eval_var(int var, const Rational& x) const {
  if (var != 0 && var != 1) throw std::invalid_argument("Poly2 variable index must be 0 or 1");
  if (is_zero()) return Poly1();
  if (var == 0) {
    // Sum over i of c[i][j] x^i, polynomial in z2.
    std::vector<Rational> out(c_[0].size(), Rational(0));
    Rational xi = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < c_[i].size(); ++j) out[j] += c_[i][j] * xi;
      xi *= x;
    }
    return Poly1(std::move(out));
  }
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational xj = 1;
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      out[i] += c_[i][j] * xj;
      xj *= x;
    }
  }
  return Poly1(std::move(out));
}

bool Poly2::separate(Poly1& u, Poly1& v) const {
  if (is_zero()) {
    u = Poly1();
    v = Poly1();
    return true;
  }
  // Rank-one test against the first nonzero entry (i0, j0).
  std::size_t i0 = 0, j0 = 0;
  bool found = false;
  for (std::size_t i = 0; i < c_.size() && !found; ++i)
    for (std::size_t j = 0; j < c_[i].size() && !found; ++j)
      if (c_[i][j] != 0) {
        i0 = i;
        j0 = j;
        found = true;
      }
  const Rational pivot = c_[i0][j0];
  std::vector<Rational> uc(c_.size()), vc(c_[0].size());
  for (std::size_t i = 0; i < c_.size(); ++i) uc[i] = c_[i][j0];
  for (std::size_t j = 0; j < c_[0].size(); ++j) vc[j] = c_[i0][j] / pivot;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j)
      if (c_[i][j] != uc[i] * vc[j]) return false;
  u = Poly1(std::move(uc));
  v = Poly1(std::move(vc));
  return true;
}

Poly1 integrate_partial(const Poly2& p, int var, const Bound& lo, const Bound& hi) {
  if (var != 0 && var != 1) throw std::invalid_argument("Poly2 variable index must be 0 or 1");
  if (p.is_zero()) return Poly1();
  // Antiderivative in `var`, then evaluate at the bounds. Evaluation at the
  // other variable is the substitution z_var = z_other, which turns the
  // monomial z1^i z2^j into z^(i+j).
  const int d1 = p.degree1(), d2 = p.degree2();
  std::vector<std::vector<Rational>> anti(
      static_cast<std::size_t>(d1) + 2, std::vector<Rational>(static_cast<std::size_t>(d2) + 2, Rational(0)));
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) {
      const Rational c = p.coeff(i, j);
      if (c == 0) continue;
      if (var == 0)
        anti[i + 1][j] = c / Rational(i + 1);
      else
        anti[i][j + 1] = c / Rational(j + 1);
    }
  const Poly2 A{std::move(anti)};

  auto eval_bound = [&](const Bound& b) -> Poly1 {
    if (!b.is_other_var) return A.eval_var(var, b.value);
    // Substitute z_var = z_other: collapse to a univariate polynomial.
    std::vector<Rational> out(static_cast<std::size_t>(A.degree1() + A.degree2()) + 1, Rational(0));
    for (int i = 0; i <= A.degree1(); ++i)
      for (int j = 0; j <= A.degree2(); ++j) {
        const Rational c = A.coeff(i, j);
        if (c != 0) out[static_cast<std::size_t>(i + j)] += c;
      }
    return Poly1(std::move(out));
  };
  return eval_bound(hi) - eval_bound(lo);
}

Rational Poly2::integrate_simplex() const {
  // Integrate z1 from -1 to z2, then z2 over [-1, 1].
  const Poly1 inner = integrate_partial(*this, 0, Bound::constant(Rational(-1)), Bound::other_var());
  return integrate_definite(inner, Rational(-1), Rational(1));
}

}  // namespace tia
