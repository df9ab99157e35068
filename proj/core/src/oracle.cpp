#include "tia/oracle.hpp"

#include <random>

namespace tia::oracle {

namespace {

long fdiv(long x, long n) {  // floor division, n > 0
  return x >= 0 ? x / n : -((-x + n - 1) / n);
}

Poly1 one_poly() { return Poly1(Rational(1)); }

// Unnormalized split of g_{m,n}(z1,z2) = gA(z1) * gB(z2); the normalization
// constant is carried on the z1 factor.
Poly1 gee_a(int m, int n) {
  const Rational norm = Rational(factorial(m + n + 2)) /
                        Rational(factorial(m) * factorial(n) * (Int(1) << (m + n + 2)));
  return norm * Poly1::binom_pow(m, 0);
}
Poly1 gee_b(int /*m*/, int n) { return Poly1::binom_pow(0, n); }

using Term = std::pair<Rational, Gen1D>;

// Density of max(X, Y) for independent X ~ p1, Y ~ p2 on [-1, 1].
Poly1 max_density(const Poly1& p1, const Poly1& p2) {
  return p1 * cdf_below(p2) + p2 * cdf_below(p1);
}
// Density of min(X, Y).
Poly1 min_density(const Poly1& p1, const Poly1& p2) {
  return p1 * cdf_above(p2) + p2 * cdf_above(p1);
}

// Product of two generators in explicit line coordinates, derived by
// integrating the endpoint-displacement densities case by case.  Site spacing
// exceeds twice the displacement bound, so displacements at distinct sites
// never interleave; all genuine integrals happen at shared sites.
std::vector<Term> line_oracle(const Gen1D& g, const Gen1D& h) {
  const int m = g.dec.m, n = g.dec.n, mp = h.dec.m, np = h.dec.n;
  std::vector<Term> out;
  auto push = [&out](std::pair<Rational, Gen1D> t) {
    if (t.first != 0) out.push_back(std::move(t));
  };

  switch (g.kind) {
    case Kind::Point:
      switch (h.kind) {
        case Kind::Point:
          // Distinct displaced points never coincide (probability zero).
          return out;
        case Kind::Interval: {
          const long c = g.a, a = h.a, b = h.b;
          if (c < a || c > b) return out;
          if (c > a && c < b) {
            // Always inside: the point's own density survives unchanged.
            push(express_point_density(point_density(m, n), c));
          } else if (c == a) {
            // Survives iff the left end displaces below the point.
            push(express_point_density(point_density(m, n) * cdf_below(point_density(mp, 0)), a));
          } else {  // c == b
            push(express_point_density(point_density(m, n) * cdf_above(point_density(0, np)), b));
          }
          return out;
        }
        case Kind::Infinitesimal: {
          if (g.a != h.a) return out;
          // Survives iff z1 < u < z2; the pair constraint z1 < z2 is implied.
          const Poly1 q = point_density(m, n) * cdf_below(gee_a(mp, np)) * cdf_above(gee_b(mp, np));
          push(express_point_density(q, g.a));
          return out;
        }
      }
      return out;

    case Kind::Interval:
      switch (h.kind) {
        case Kind::Point:
          return line_oracle(h, g);
        case Kind::Interval: {
          const long a = g.a, b = g.b, c = h.a, d = h.b;
          if (b < c || d < a) return out;
          if (b == c) {
            // Touching: overlap degenerates to the ordered pair (other's left
            // displacement, own right displacement) at the shared site.
            push(express_degenerate_density(
                Poly2::outer(point_density(mp, 0), point_density(0, n)), b));
            return out;
          }
          if (d == a) {
            push(express_degenerate_density(
                Poly2::outer(point_density(m, 0), point_density(0, np)), a));
            return out;
          }
          const long L = std::max(a, c), R = std::min(b, d);
          const Poly1 qL = (a == c) ? max_density(point_density(m, 0), point_density(mp, 0))
                                    : (a > c ? point_density(m, 0) : point_density(mp, 0));
          const Poly1 qR = (b == d) ? min_density(point_density(0, n), point_density(0, np))
                                    : (b < d ? point_density(0, n) : point_density(0, np));
          push(express_interval_density(qL, L, qR, R));
          return out;
        }
        case Kind::Infinitesimal: {
          const long a = g.a, b = g.b, c = h.a;
          if (c < a || c > b) return out;
          if (c > a && c < b) {
            push(express_degenerate_density(degenerate_density(mp, np), c));
            return out;
          }
          if (c == a) {
            // Lower end of the overlap is max(interval left end, z1); the
            // upper end is z2, which must exceed it.
            const Poly1 fL = point_density(m, 0);
            const Poly2 q = degenerate_density(mp, np) * Poly2::outer(cdf_below(fL), one_poly()) +
                            Poly2::outer(fL * cdf_below(gee_a(mp, np)), gee_b(mp, np));
            push(express_degenerate_density(q, a));
          } else {  // c == b
            const Poly1 fR = point_density(0, n);
            const Poly2 q = degenerate_density(mp, np) * Poly2::outer(one_poly(), cdf_above(fR)) +
                            Poly2::outer(gee_a(mp, np), fR * cdf_above(gee_b(mp, np)));
            push(express_degenerate_density(q, b));
          }
          return out;
        }
      }
      return out;

    case Kind::Infinitesimal:
      switch (h.kind) {
        case Kind::Point:
        case Kind::Interval:
          return line_oracle(h, g);
        case Kind::Infinitesimal: {
          if (g.a != h.a) return out;
          // Overlap ends are (max(z1, z1'), min(z2, z2')); four terms by
          // which pair attains the max and the min.
          const Poly1 gA = gee_a(m, n), gB = gee_b(m, n);
          const Poly1 hA = gee_a(mp, np), hB = gee_b(mp, np);
          const Poly1 GA = cdf_below(gA), GBa = cdf_above(gB);
          const Poly1 HA = cdf_below(hA), HBa = cdf_above(hB);
          const Poly2 q = degenerate_density(m, n) * Poly2::outer(HA, HBa) +
                          Poly2::outer(gA * HA, GBa * hB) +
                          Poly2::outer(hA * GA, HBa * gB) +
                          degenerate_density(mp, np) * Poly2::outer(GA, GBa);
          push(express_degenerate_density(q, g.a));
          return out;
        }
      }
      return out;
  }
  return out;
}

}  // namespace

Poly1 point_density(int m, int n) {
  const Rational norm = Rational(factorial(m + n + 1)) /
                        Rational(factorial(m) * factorial(n) * (Int(1) << (m + n + 1)));
  return norm * Poly1::binom_pow(m, n);
}

Poly2 degenerate_density(int m, int n) { return Poly2::outer(gee_a(m, n), gee_b(m, n)); }

Poly1 cdf_below(const Poly1& p) {
  const Poly1 A = p.antiderivative();
  return A - Poly1(A.eval(Rational(-1)));
}

Poly1 cdf_above(const Poly1& p) {
  const Poly1 A = p.antiderivative();
  return Poly1(A.eval(Rational(1))) - A;
}

std::pair<Rational, Gen1D> express_point_density(const Poly1& q, long site) {
  if (q.is_zero()) return {Rational(0), Gen1D::point(site, {0, 0})};
  Poly1 r1, r2;
  const int M = q.root_multiplicity(Rational(-1), &r1);
  const int N = r1.root_multiplicity(Rational(1), &r2);
  if (r2.degree() > 0) throw NotInBasis("point density is not of basis shape");
  return {integrate_definite(q, Rational(-1), Rational(1)), Gen1D::point(site, {M, N})};
}

std::pair<Rational, Gen1D> express_interval_density(const Poly1& qLeft, long siteLeft,
                                                    const Poly1& qRight, long siteRight) {
  if (qLeft.is_zero() || qRight.is_zero())
    return {Rational(0), Gen1D::interval(siteLeft, siteRight, {0, 0})};
  Poly1 rl, rr;
  const int M = qLeft.root_multiplicity(Rational(-1), &rl);
  if (rl.degree() > 0) throw NotInBasis("interval left-end density is not of basis shape");
  const int N = qRight.root_multiplicity(Rational(1), &rr);
  if (rr.degree() > 0) throw NotInBasis("interval right-end density is not of basis shape");
  const Rational w = integrate_definite(qLeft, Rational(-1), Rational(1)) *
                     integrate_definite(qRight, Rational(-1), Rational(1));
  return {w, Gen1D::interval(siteLeft, siteRight, {M, N})};
}

std::pair<Rational, Gen1D> express_degenerate_density(const Poly2& q, long site) {
  Poly1 u, v;
  if (!q.separate(u, v))
    throw NotInBasis("ordered-pair density does not factor");
  if (u.is_zero() || v.is_zero()) return {Rational(0), Gen1D::infinitesimal(site, {0, 0})};
  Poly1 ru, rv;
  const int M = u.root_multiplicity(Rational(-1), &ru);
  if (ru.degree() > 0) throw NotInBasis("ordered-pair z1 factor is not of basis shape");
  const int N = v.root_multiplicity(Rational(1), &rv);
  if (rv.degree() > 0) throw NotInBasis("ordered-pair z2 factor is not of basis shape");
  return {q.integrate_simplex(), Gen1D::infinitesimal(site, {M, N})};
}

Chain intersect_via_integration(const Gen1D& g, const Gen1D& h, const Lattice1D& lat) {
  lat.validate();
  Chain out(lat);
  auto add_terms = [&out](const std::vector<Term>& ts) {
    for (const auto& [w, gen] : ts) out.add(gen, w);
  };
  if (!lat.period) {
    add_terms(line_oracle(canonicalize(g, lat), canonicalize(h, lat)));
    return out;
  }
  // Same universal-cover lift as the closed-form product: fix g's fundamental
  // lift and sum over the period translates of h that can meet it.
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
    add_terms(line_oracle(gc, ht));
  }
  return out;
}

Chain boundary_via_integration(const Gen1D& g, const Lattice1D& lat) {
  Chain out(lat);
  switch (g.kind) {
    case Kind::Point:
      break;
    case Kind::Interval: {
      // Endpoint marginals of the two independent end displacements.
      auto [wR, gR] = express_point_density(point_density(0, g.dec.n), g.b);
      auto [wL, gL] = express_point_density(point_density(g.dec.m, 0), g.a);
      out.add(gR, wR);
      out.add(gL, -wL);
      break;
    }
    case Kind::Infinitesimal: {
      const Poly2 q = degenerate_density(g.dec.m, g.dec.n);
      const Poly1 upper = integrate_partial(q, 0, Bound::constant(Rational(-1)), Bound::other_var());
      const Poly1 lower = integrate_partial(q, 1, Bound::other_var(), Bound::constant(Rational(1)));
      auto [wU, gU] = express_point_density(upper, g.a);
      auto [wL, gL] = express_point_density(lower, g.a);
      out.add(gU, wU);
      out.add(gL, -wL);
      break;
    }
  }
  return out;
}

namespace {

constexpr int kBits = 48;
constexpr long long kOne = 1LL << kBits;

// Lexicographic position: site index first, then the dyadic displacement
// index j (displacement = j / 2^47 - 1 in [-1, 1)).  Site spacing exceeds the
// displacement range, so distinct sites never interleave.
struct Pos {
  long site;
  long long j;
};
bool pos_less(const Pos& x, const Pos& y) {
  return x.site != y.site ? x.site < y.site : x.j < y.j;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Exact rejection sampling of f_{m,n} at 48-bit dyadic resolution: accept
  // index j with probability (1+z)^m (1-z)^n / 2^{m+n}, tested in integers.
  long long draw_f(int m, int n) {
    for (;;) {
      const long long j = u48();
      if (accepts(j, j, m, n)) return j;
    }
  }

  // Ordered displacement pair for g_{m,n}: z1 < z2, density ~ (1+z1)^m (1-z2)^n.
  std::pair<long long, long long> draw_g(int m, int n) {
    for (;;) {
      const long long j1 = u48(), j2 = u48();
      if (j1 >= j2) continue;
      if (accepts(j1, j2, m, n)) return {j1, j2};
    }
  }

 private:
  long long u48() { return static_cast<long long>(rng_() >> 16); }

  bool accepts(long long jPlus, long long jMinus, int m, int n) {
    if (m + n == 0) return true;
    const long long v = u48();
    Int rhs = 1;
    for (int i = 0; i < m; ++i) rhs *= jPlus;
    for (int i = 0; i < n; ++i) rhs *= kOne - jMinus;
    const Int lhs = Int(v) << (kBits * (m + n - 1));
    return lhs < rhs;
  }

  std::mt19937_64 rng_;
};

}  // namespace

Density density_of(const Gen1D& g) {
  Density d;
  switch (g.kind) {
    case Kind::Point:
      d.kind = Density::Kind::Point;
      d.anchorA = g.a;
      d.p1 = point_density(g.dec.m, g.dec.n);
      break;
    case Kind::Interval:
      d.kind = Density::Kind::Interval;
      d.anchorA = g.a;
      d.anchorB = g.b;
      d.p1 = point_density(g.dec.m, 0);
      d.p1Right = point_density(0, g.dec.n);
      break;
    case Kind::Infinitesimal:
      d.kind = Density::Kind::Simplex;
      d.anchorA = g.a;
      d.p2 = degenerate_density(g.dec.m, g.dec.n);
      break;
  }
  return d;
}

std::pair<Rational, Gen1D> express_in_basis(const Density& d) {
  switch (d.kind) {
    case Density::Kind::Point:
      return express_point_density(d.p1, d.anchorA);
    case Density::Kind::Interval:
      return express_interval_density(d.p1, d.anchorA, d.p1Right, d.anchorB);
    case Density::Kind::Simplex:
      return express_degenerate_density(d.p2, d.anchorA);
  }
  throw std::logic_error("unreachable");
}

McResult mc_estimate(const Gen1D& g, const Gen1D& h, long long samples, std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  Sampler sampler(seed);

  auto realize = [&sampler](const Gen1D& gen) -> std::pair<Pos, Pos> {
    switch (gen.kind) {
      case Kind::Point: {
        const long long j = sampler.draw_f(gen.dec.m, gen.dec.n);
        return {{gen.a, j}, {gen.a, j}};
      }
      case Kind::Interval:
        return {{gen.a, sampler.draw_f(gen.dec.m, 0)}, {gen.b, sampler.draw_f(0, gen.dec.n)}};
      case Kind::Infinitesimal: {
        const auto [j1, j2] = sampler.draw_g(gen.dec.m, gen.dec.n);
        return {{gen.a, j1}, {gen.a, j2}};
      }
    }
    throw std::logic_error("unreachable");
  };

  std::map<Gen1D, long long> counts;
  for (long long s = 0; s < samples; ++s) {
    const auto [gLo, gHi] = realize(g);
    const auto [hLo, hHi] = realize(h);
    if (g.kind == Kind::Point && h.kind == Kind::Point) continue;
    if (g.kind == Kind::Point || h.kind == Kind::Point) {
      const Pos p = (g.kind == Kind::Point) ? gLo : hLo;
      const Pos lo = (g.kind == Kind::Point) ? hLo : gLo;
      const Pos hi = (g.kind == Kind::Point) ? hHi : gHi;
      if (pos_less(lo, p) && pos_less(p, hi)) ++counts[Gen1D::point(p.site, {0, 0})];
      continue;
    }
    const Pos L = pos_less(gLo, hLo) ? hLo : gLo;
    const Pos R = pos_less(gHi, hHi) ? gHi : hHi;
    if (!pos_less(L, R)) continue;
    if (L.site == R.site) {
      ++counts[Gen1D::infinitesimal(L.site, {0, 0})];
    } else {
      ++counts[Gen1D::interval(L.site, R.site, {0, 0})];
    }
  }

  McResult res;
  res.samples = samples;
  for (const auto& [gen, c] : counts)
    res.mass[gen] = static_cast<double>(c) / static_cast<double>(samples);
  return res;
}

}  // namespace tia::oracle
