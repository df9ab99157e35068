#include "tia/algebra1d.hpp"

namespace tia {

namespace {

long fdiv(long x, long n) {  // floor division, n > 0
  return x >= 0 ? x / n : -((-x + n - 1) / n);
}

Rational fact_ratio(int n1, int n2, int d1, int d2) {
  return Rational(factorial(n1) * factorial(n2)) / Rational(factorial(d1) * factorial(d2));
}

// Product of two generators in explicit line coordinates; results are added
// into `out`, whose lattice canonicalizes positions (mod N when periodic).
void line_product_into(Chain& out, const Gen1D& g, const Gen1D& h) {
  const int m = g.dec.m, n = g.dec.n, mp = h.dec.m, np = h.dec.n;

  switch (g.kind) {
    case Kind::Point:
      switch (h.kind) {
        case Kind::Point:
          // Two wiggled points coincide with probability zero.
          return;
        case Kind::Interval: {
          const long c = g.a, a = h.a, b = h.b;
          if (c < a || c > b) return;
          if (c > a && c < b) {
            out.add(Gen1D::point(c, {m, n}), 1);
          } else if (c == a) {
            // Point pinned to the interval's left endpoint: survives iff the
            // endpoint wiggles below it; left decorations merge.
            out.add(Gen1D::point(a, {m + mp + 1, n}),
                    fact_ratio(m + mp + 1, m + n + 1, m, m + mp + n + 2));
          } else {  // c == b
            out.add(Gen1D::point(b, {m, n + np + 1}),
                    fact_ratio(n + np + 1, m + n + 1, n, m + n + np + 2));
          }
          return;
        }
        case Kind::Infinitesimal: {
          if (g.a != h.a) return;
          const Rational coeff =
              Rational(binomial(m + mp + 1, m) * binomial(n + np + 1, n)) /
              Rational(binomial(m + n + mp + np + 3, m + n + 1));
          out.add(Gen1D::point(g.a, {m + mp + 1, n + np + 1}), coeff);
          return;
        }
      }
      return;

    case Kind::Interval:
      switch (h.kind) {
        case Kind::Point:
          line_product_into(out, h, g);
          return;
        case Kind::Interval: {
          const long a = g.a, b = g.b, c = h.a, d = h.b;
          if (b < c || d < a) return;
          if (b == c) {
            // Touching endpoints: the overlap degenerates to an infinitesimal
            // interval whose ends are the two endpoint wigglings at that site.
            out.add(Gen1D::infinitesimal(b, {mp, n}),
                    fact_ratio(mp + 1, n + 1, 0, mp + n + 2));
            return;
          }
          if (d == a) {
            out.add(Gen1D::infinitesimal(a, {m, np}),
                    fact_ratio(m + 1, np + 1, 0, m + np + 2));
            return;
          }
          // Proper overlap: the surviving left endpoint is the later of the
          // two left ends and carries its owner's left decoration (merged,
          // +1, when shared); symmetrically on the right.
          const long L = std::max(a, c), R = std::min(b, d);
          const int mL = (a == c) ? m + mp + 1 : (a > c ? m : mp);
          const int nR = (b == d) ? n + np + 1 : (b < d ? n : np);
          out.add(Gen1D::interval(L, R, {mL, nR}), 1);
          return;
        }
        case Kind::Infinitesimal: {
          const long a = g.a, b = g.b, c = h.a;
          if (c < a || c > b) return;
          if (c > a && c < b) {
            out.add(Gen1D::infinitesimal(c, {mp, np}), 1);
          } else if (c == a) {
            out.add(Gen1D::infinitesimal(a, {m + mp + 1, np}),
                    fact_ratio(mp + np + 2, mp + m + 2, mp + 1, mp + np + m + 3));
          } else {  // c == b
            out.add(Gen1D::infinitesimal(b, {mp, np + n + 1}),
                    fact_ratio(mp + np + 2, np + n + 2, np + 1, mp + np + n + 3));
          }
          return;
        }
      }
      return;

    case Kind::Infinitesimal:
      switch (h.kind) {
        case Kind::Point:
        case Kind::Interval:
          line_product_into(out, h, g);
          return;
        case Kind::Infinitesimal: {
          if (g.a != h.a) return;
          const Rational coeff =
              Rational(binomial(m + n + 2, m + 1) * binomial(mp + np + 2, mp + 1)) /
              Rational(binomial(m + n + mp + np + 4, m + mp + 2));
          out.add(Gen1D::infinitesimal(g.a, {m + mp + 1, n + np + 1}), coeff);
          return;
        }
      }
      return;
  }
}

}  // namespace

Chain boundary_gen(const Gen1D& g, const Lattice1D& lat) {
  Chain out(lat);
  switch (g.kind) {
    case Kind::Point:
      break;
    case Kind::Interval:
      out.add(Gen1D::point(g.b, {0, g.dec.n}), 1);
      out.add(Gen1D::point(g.a, {g.dec.m, 0}), -1);
      break;
    case Kind::Infinitesimal:
      out.add(Gen1D::point(g.a, {g.dec.m + 1, g.dec.n}), 1);
      out.add(Gen1D::point(g.a, {g.dec.m, g.dec.n + 1}), -1);
      break;
  }
  return out;
}

Chain boundary(const Chain& x) {
  Chain out(x.lattice());
  for (const auto& [g, c] : x.terms()) out += c * boundary_gen(g, x.lattice());
  return out;
}

Chain intersect_gen(const Gen1D& g, const Gen1D& h, const Lattice1D& lat) {
  Chain out(lat);
  if (!lat.period) {
    line_product_into(out, canonicalize(g, lat), canonicalize(h, lat));
    return out;
  }
  // Universal-cover lift: fix g's fundamental lift, sum line products against
  // every period translate of h whose support can meet g's.
  const long N = *lat.period;
  const Gen1D gc = canonicalize(g, lat), hc = canonicalize(h, lat);
  const long gHi = (gc.kind == Kind::Interval) ? gc.b : gc.a;
  const long hLen = (hc.kind == Kind::Interval) ? hc.b - hc.a : 0;
  const long kmax = fdiv(gHi - hc.a, N);
  const long kmin = -fdiv(hc.a + hLen - gc.a, N);
  for (long k = kmin; k <= kmax; ++k) {
    Gen1D ht = hc;
    ht.a += k * N;
    ht.b += k * N;
    line_product_into(out, gc, ht);
  }
  return out;
}

Chain intersect(const Chain& x, const Chain& y) {
  if (!(x.lattice() == y.lattice()))
    throw LatticeMismatch("transverse product across different lattices");
  Chain out(x.lattice());
  for (const auto& [g, cg] : x.terms())
    for (const auto& [h, ch] : y.terms()) out += (cg * ch) * intersect_gen(g, h, x.lattice());
  return out;
}

Chain truncate(const Chain& x, int K) {
  if (K < 0) throw std::invalid_argument("truncation level must be >= 0");
  Chain out(x.lattice());
  for (const auto& [g, c] : x.terms())
    if (g.dec.min() < K) out.add(g, c);
  return out;
}

bool in_truncation_ideal(const Chain& x, int K) {
  for (const auto& [g, c] : x.terms())
    if (g.dec.min() < K) return false;
  return true;
}

}  // namespace tia
