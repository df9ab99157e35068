#include "tia/sweeps.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "tia/algebra1d.hpp"
#include "tia/oracle.hpp"
#include "tia/tensor.hpp"

namespace tia {

namespace {

std::string dec_str(const Decoration& d) {
  return "^{" + std::to_string(d.m) + "," + std::to_string(d.n) + "}";
}

}  // namespace

std::string describe(const Gen1D& g) {
  switch (g.kind) {
    case Kind::Point:
      return "pt_" + std::to_string(g.a) + dec_str(g.dec);
    case Kind::Interval:
      return "iv_{" + std::to_string(g.a) + "," + std::to_string(g.b) + "}" + dec_str(g.dec);
    case Kind::Infinitesimal:
      return "inf_" + std::to_string(g.a) + dec_str(g.dec);
  }
  return "?";
}

std::string describe(const Chain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [g, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff) + "*" + describe(g);
  }
  return out;
}

void SweepReport::fail(const std::string& what) {
  ++failures;
  if (notes.size() < 8) notes.push_back(what);
}

void SweepReport::merge(const SweepReport& o) {
  checks += o.checks;
  failures += o.failures;
  for (const auto& [k, v] : o.laws) laws[k] += v;
  for (const auto& n : o.notes)
    if (notes.size() < 8) notes.push_back(n);
}

namespace {

std::string describe_d(const GenD& g) {
  std::string out;
  for (const auto& f : g.factors) {
    if (!out.empty()) out += " (x) ";
    out += describe(f);
  }
  return out;
}

std::string describe_d(const ChainD& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [g, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff) + "*[" + describe_d(g) + "]";
  }
  return out;
}

std::vector<Gen1D> gen_pool_1d(int decBound, long window, const std::optional<long>& period) {
  std::vector<Gen1D> pool;
  const long sites = period ? *period : window;
  for (long a = 0; a < sites; ++a)
    for (int m = 0; m <= decBound; ++m)
      for (int n = 0; n <= decBound; ++n) {
        pool.push_back(Gen1D::point(a, {m, n}));
        pool.push_back(Gen1D::infinitesimal(a, {m, n}));
      }
  if (period) {
    for (long a = 0; a < sites; ++a)
      for (long len = 1; len < *period; ++len)
        for (int m = 0; m <= decBound; ++m)
          for (int n = 0; n <= decBound; ++n) pool.push_back(Gen1D::interval(a, a + len, {m, n}));
  } else {
    for (long a = 0; a < window; ++a)
      for (long b = a + 1; b < window; ++b)
        for (int m = 0; m <= decBound; ++m)
          for (int n = 0; n <= decBound; ++n) pool.push_back(Gen1D::interval(a, b, {m, n}));
  }
  return pool;
}

}  // namespace

SweepReport sweep_dga_1d(const SweepOptions& opt) {
  SweepReport rep;
  const Lattice1D lat{Rational(1), opt.period};
  const auto pool = gen_pool_1d(opt.decBound, opt.window, opt.period);
  const auto n = pool.size();

  // All generator products route through here so that an injected defect is
  // applied consistently (it corrupts the algebra, not the checker).
  const auto product = [&](const Gen1D& g, const Gen1D& h) {
    Chain p = intersect_gen(g, h, lat);
    if (opt.injectDefect && g.kind == Kind::Point && h.kind == Kind::Interval && g.a == h.a)
      p *= Rational(2);
    return p;
  };
  const auto chain_times_gen = [&](const Chain& x, const Gen1D& k) {
    Chain out(lat);
    for (const auto& [g, c] : x.terms()) {
      Chain p = product(g, k);
      p *= c;
      out += p;
    }
    return out;
  };
  const auto gen_times_chain = [&](const Gen1D& g, const Chain& y) {
    Chain out(lat);
    for (const auto& [k, c] : y.terms()) {
      Chain p = product(g, k);
      p *= c;
      out += p;
    }
    return out;
  };

  // boundary^2 = 0.
  for (const auto& g : pool) {
    ++rep.checks;
    ++rep.laws["boundary_squared"];
    const Chain bb = boundary(boundary_gen(g, lat));
    if (!bb.empty())
      rep.fail("boundary^2 != 0 at " + describe(g) + ": " + describe(bb));
  }

  // Pairwise laws; cache the products for the associativity pass.
  std::vector<Chain> cache(n * n, Chain(lat));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Gen1D &g = pool[i], &h = pool[j];
      Chain p = product(g, h);

      ++rep.checks;
      ++rep.laws["codim_additivity"];
      const int want = g.codim() + h.codim();
      for (const auto& [t, c] : p.terms())
        if (t.codim() != want) {
          rep.fail("product term of wrong codimension at " + describe(g) + " * " + describe(h));
          break;
        }

      if (j >= i) {
        ++rep.checks;
        ++rep.laws["graded_commutativity"];
        const Chain q = product(h, g);
        const bool odd = (g.codim() * h.codim()) % 2 != 0;
        const Chain diff = odd ? p + q : p - q;
        if (!diff.empty())
          rep.fail("graded commutativity fails at " + describe(g) + " * " + describe(h) + ": " +
                   describe(p) + " vs " + describe(q));
      }

      ++rep.checks;
      ++rep.laws["leibniz"];
      const Chain lhs = boundary(p);
      Chain rhs = chain_times_gen(boundary_gen(g, lat), h);
      const Chain gdh = gen_times_chain(g, boundary_gen(h, lat));
      if (g.codim() % 2 != 0)
        rhs -= gdh;
      else
        rhs += gdh;
      if (!(lhs == rhs))
        rep.fail("Leibniz fails at " + describe(g) + " * " + describe(h) + ": d(prod)=" +
                 describe(lhs) + " vs " + describe(rhs));

      cache[i * n + j] = std::move(p);
    }

  // Associativity over all ordered triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++rep.checks;
        ++rep.laws["associativity"];
        const Chain left = chain_times_gen(cache[i * n + j], pool[k]);
        const Chain right = gen_times_chain(pool[i], cache[j * n + k]);
        if (!(left == right))
          rep.fail("associativity fails at " + describe(pool[i]) + " * " + describe(pool[j]) +
                   " * " + describe(pool[k]) + ": " + describe(left) + " vs " + describe(right));
      }

  return rep;
}

namespace {

// Independent re-implementations of the sign bookkeeping (suffix convention),
// used to cross-check the tensor code.
int tau_indep(const std::array<int, 3>& p, const std::array<int, 3>& q) {
  int t = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) t += p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i)];
  return t;
}

int sigma_indep(const std::array<int, 3>& p, int i) {
  int s = 0;
  for (int j = i + 1; j < 3; ++j) s += p[static_cast<std::size_t>(j)];
  return s;
}

int sum3(const std::array<int, 3>& p) { return p[0] + p[1] + p[2]; }

ChainD assemble(const LatticeD& lat, const std::array<Chain, 3>& axis, const Rational& sign) {
  ChainD out(lat);
  for (const auto& [g0, c0] : axis[0].terms())
    for (const auto& [g1, c1] : axis[1].terms())
      for (const auto& [g2, c2] : axis[2].terms())
        out.add(GenD{{g0, g1, g2}}, sign * c0 * c1 * c2);
  return out;
}

Rational pow_sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

SweepReport sweep_dga_3d(const SweepOptions& opt, std::uint64_t seed) {
  SweepReport rep;
  const Lattice1D axisLat{Rational(1), opt.period};
  const LatticeD lat{Rational(1), {opt.period, opt.period, opt.period}};

  // ---- Layer 1: parity identities of the sign formulas. ----------------
  // Graded commutativity of the assembled product needs
  //   tau(p,q) + tau(q,p) + |p||q|  ==  sum_i p_i q_i   (mod 2);
  // when the right side is odd some axis pairs two points, whose 1-D product
  // is identically zero (checked below), so both sides of the law vanish.
  for (int pc = 0; pc < 8; ++pc)
    for (int qc = 0; qc < 8; ++qc) {
      const std::array<int, 3> p{pc & 1, (pc >> 1) & 1, (pc >> 2) & 1};
      const std::array<int, 3> q{qc & 1, (qc >> 1) & 1, (qc >> 2) & 1};
      const int dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
      ++rep.checks;
      ++rep.laws["sign_commutativity_parity"];
      if ((tau_indep(p, q) + tau_indep(q, p) + sum3(p) * sum3(q) + dot) % 2 != 0)
        rep.fail("commutativity sign parity fails at pattern pair");

      // Leibniz sign equations, one per axis and per side of the rule.
      for (int i = 0; i < 3; ++i) {
        std::array<int, 3> pq{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
        if (p[static_cast<std::size_t>(i)] == 0) {
          std::array<int, 3> pe = p;
          pe[static_cast<std::size_t>(i)] = 1;
          ++rep.checks;
          ++rep.laws["sign_leibniz_parity"];
          if ((tau_indep(p, q) + sigma_indep(pq, i) + sigma_indep(p, i) + tau_indep(pe, q)) % 2 !=
              0)
            rep.fail("Leibniz sign parity (first-argument term) fails");
        }
        if (q[static_cast<std::size_t>(i)] == 0) {
          std::array<int, 3> qe = q;
          qe[static_cast<std::size_t>(i)] = 1;
          ++rep.checks;
          ++rep.laws["sign_leibniz_parity"];
          if ((tau_indep(p, q) + sigma_indep(pq, i) + p[static_cast<std::size_t>(i)] + sum3(p) +
               sigma_indep(q, i) + tau_indep(p, qe)) %
                  2 !=
              0)
            rep.fail("Leibniz sign parity (second-argument term) fails");
        }
      }
    }

  // Associativity: the interleaving sign is a cocycle, exactly over the
  // integers, so assembled associativity reduces to 1-D associativity.
  for (int pc = 0; pc < 8; ++pc)
    for (int qc = 0; qc < 8; ++qc)
      for (int rc = 0; rc < 8; ++rc) {
        const std::array<int, 3> p{pc & 1, (pc >> 1) & 1, (pc >> 2) & 1};
        const std::array<int, 3> q{qc & 1, (qc >> 1) & 1, (qc >> 2) & 1};
        const std::array<int, 3> r{rc & 1, (rc >> 1) & 1, (rc >> 2) & 1};
        const std::array<int, 3> pq{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
        const std::array<int, 3> qr{q[0] + r[0], q[1] + r[1], q[2] + r[2]};
        ++rep.checks;
        ++rep.laws["sign_associativity_cocycle"];
        if (tau_indep(p, q) + tau_indep(pq, r) != tau_indep(q, r) + tau_indep(p, qr))
          rep.fail("associativity sign cocycle fails at pattern triple");
      }

  // Two points on one axis never meet, at any sites and decorations of the
  // pool: the rescue clause of the commutativity parity argument.
  {
    const auto pool1 = gen_pool_1d(opt.decBound, opt.window, opt.period);
    for (const auto& g : pool1) {
      if (g.kind != Kind::Point) continue;
      for (const auto& h : pool1) {
        if (h.kind != Kind::Point) continue;
        ++rep.checks;
        ++rep.laws["points_annihilate"];
        if (!intersect_gen(g, h, axisLat).empty())
          rep.fail("two points met: " + describe(g) + " * " + describe(h));
      }
    }
  }

  // ---- Layer 2: production code conforms to the sign formulas. ---------
  // Fixed sites chosen so that every mixed kind pair has a nonzero product.
  const auto kind_rep = [](int kind) {
    switch (kind) {
      case 0: return Gen1D::point(1, {0, 0});
      case 1: return Gen1D::interval(0, 2, {0, 0});
      default: return Gen1D::infinitesimal(1, {0, 0});
    }
  };
  std::vector<GenD> reps;
  for (int k0 = 0; k0 < 3; ++k0)
    for (int k1 = 0; k1 < 3; ++k1)
      for (int k2 = 0; k2 < 3; ++k2) reps.push_back(GenD{{kind_rep(k0), kind_rep(k1), kind_rep(k2)}});

  const auto pattern_of = [](const GenD& g) {
    std::array<int, 3> p{};
    for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = g.factors[static_cast<std::size_t>(i)].codim();
    return p;
  };

  for (const auto& X : reps) {
    const auto p = pattern_of(X);
    // Boundary conformance.
    ChainD expectedB(lat);
    for (int i = 0; i < 3; ++i) {
      std::array<Chain, 3> axis{Chain(axisLat), Chain(axisLat), Chain(axisLat)};
      for (int j = 0; j < 3; ++j)
        axis[static_cast<std::size_t>(j)] =
            j == i ? boundary_gen(X.factors[static_cast<std::size_t>(j)], axisLat)
                   : chain_of(axisLat, X.factors[static_cast<std::size_t>(j)]);
      expectedB += assemble(lat, axis, pow_sign(sigma_indep(p, i)));
    }
    ++rep.checks;
    ++rep.laws["boundary_sign_conformance"];
    if (!(boundary_d(chain_of(lat, X)) == expectedB))
      rep.fail("tensor boundary deviates from the sign formula at " + describe_d(X));

    for (const auto& Y : reps) {
      const auto q = pattern_of(Y);
      std::array<Chain, 3> axis{Chain(axisLat), Chain(axisLat), Chain(axisLat)};
      for (int j = 0; j < 3; ++j)
        axis[static_cast<std::size_t>(j)] =
            intersect_gen(X.factors[static_cast<std::size_t>(j)],
                          Y.factors[static_cast<std::size_t>(j)], axisLat);
      const ChainD expected = assemble(lat, axis, pow_sign(tau_indep(p, q)));
      ++rep.checks;
      ++rep.laws["product_sign_conformance"];
      if (!(intersect_d(chain_of(lat, X), chain_of(lat, Y)) == expected))
        rep.fail("tensor product deviates from the sign formula at " + describe_d(X) + " * " +
                 describe_d(Y));
    }
  }

  // ---- Layer 3: direct end-to-end laws on a canonical family. ----------
  const std::array<Gen1D, 6> family{
      Gen1D::point(1, {0, 0}),        Gen1D::point(0, {1, 0}),   Gen1D::interval(0, 2, {0, 1}),
      Gen1D::interval(0, 1, {0, 0}),  Gen1D::interval(1, 2, {1, 0}),
      Gen1D::infinitesimal(1, {0, 1}),
  };
  std::vector<GenD> fam3;
  for (const auto& f0 : family)
    for (const auto& f1 : family)
      for (const auto& f2 : family) fam3.push_back(GenD{{f0, f1, f2}});

  bool defectPending = opt.injectDefect;
  const auto check_pair = [&](const GenD& X, const GenD& Y, const char* layer) {
    const ChainD cx = chain_of(lat, X), cy = chain_of(lat, Y);
    ChainD P = intersect_d(cx, cy);
    if (defectPending && !P.empty()) {
      P *= Rational(2);
      defectPending = false;
    }
    ++rep.checks;
    ++rep.laws[std::string("graded_commutativity_") + layer];
    const ChainD Q = intersect_d(cy, cx);
    const bool odd = (X.codim() * Y.codim()) % 2 != 0;
    const ChainD diff = odd ? P + Q : P - Q;
    if (!diff.empty())
      rep.fail(std::string("3-D graded commutativity fails at ") + describe_d(X) + " * " +
               describe_d(Y));

    ++rep.checks;
    ++rep.laws[std::string("leibniz_") + layer];
    const ChainD lhs = boundary_d(P);
    ChainD rhs = intersect_d(boundary_d(cx), cy);
    const ChainD xdY = intersect_d(cx, boundary_d(cy));
    if (X.codim() % 2 != 0)
      rhs -= xdY;
    else
      rhs += xdY;
    if (!(lhs == rhs))
      rep.fail(std::string("3-D Leibniz fails at ") + describe_d(X) + " * " + describe_d(Y) +
               ": " + describe_d(lhs) + " vs " + describe_d(rhs));
  };

  for (const auto& X : fam3)
    for (const auto& Y : fam3) check_pair(X, Y, "canonical");

  // Associativity triples over the one-per-kind subfamily.
  for (const auto& X : reps)
    for (const auto& Y : reps)
      for (const auto& Z : reps) {
        ++rep.checks;
        ++rep.laws["associativity_canonical"];
        const ChainD cx = chain_of(lat, X), cy = chain_of(lat, Y), cz = chain_of(lat, Z);
        const ChainD left = intersect_d(intersect_d(cx, cy), cz);
        const ChainD right = intersect_d(cx, intersect_d(cy, cz));
        if (!(left == right))
          rep.fail("3-D associativity fails at " + describe_d(X) + " * " + describe_d(Y) + " * " +
                   describe_d(Z));
      }

  // ---- Layer 4: seeded random decorated pairs and triples. -------------
  const auto pool1 = gen_pool_1d(opt.decBound, opt.window, opt.period);
  std::mt19937_64 rng(seed);
  const auto random_gen = [&]() {
    GenD g;
    for (int i = 0; i < 3; ++i)
      g.factors.push_back(pool1[static_cast<std::size_t>(rng() % pool1.size())]);
    return g;
  };
  for (int t = 0; t < 3000; ++t) check_pair(random_gen(), random_gen(), "random");
  for (int t = 0; t < 1500; ++t) {
    const GenD X = random_gen(), Y = random_gen(), Z = random_gen();
    ++rep.checks;
    ++rep.laws["associativity_random"];
    const ChainD cx = chain_of(lat, X), cy = chain_of(lat, Y), cz = chain_of(lat, Z);
    if (!(intersect_d(intersect_d(cx, cy), cz) == intersect_d(cx, intersect_d(cy, cz))))
      rep.fail("3-D associativity fails at " + describe_d(X) + " * " + describe_d(Y) + " * " +
               describe_d(Z));
  }

  // ---- Layer 5: boundary^2 over the full pool. --------------------------
  const std::size_t poolCubed =
      pool1.size() * pool1.size() * pool1.size();
  const auto check_dd = [&](const GenD& X) {
    ++rep.checks;
    ++rep.laws["boundary_squared"];
    const ChainD dd = boundary_d(boundary_d(chain_of(lat, X)));
    if (!dd.empty()) rep.fail("3-D boundary^2 != 0 at " + describe_d(X));
  };
  if (poolCubed <= 200000) {
    for (const auto& f0 : pool1)
      for (const auto& f1 : pool1)
        for (const auto& f2 : pool1) check_dd(GenD{{f0, f1, f2}});
  } else {
    for (int t = 0; t < 200000; ++t) check_dd(random_gen());
  }

  return rep;
}

OracleAgreement sweep_oracle(int decBound, long window, bool useSwappedBinomial) {
  OracleAgreement out;
  const Lattice1D lat{};
  const auto pool = gen_pool_1d(decBound, window, std::nullopt);

  const auto closed = [&](const Gen1D& g, const Gen1D& h) {
    Chain c = intersect_gen(g, h, lat);
    if (useSwappedBinomial) {
      const Gen1D* P = nullptr;
      const Gen1D* I = nullptr;
      if (g.kind == Kind::Point && h.kind == Kind::Infinitesimal) {
        P = &g;
        I = &h;
      } else if (h.kind == Kind::Point && g.kind == Kind::Infinitesimal) {
        P = &h;
        I = &g;
      }
      if (P && I && P->a == I->a) {
        // The rejected variant swaps which index the binomials select.
        const int m = P->dec.m, n = P->dec.n, mp = I->dec.m, np = I->dec.n;
        const Rational wrong(binomial(m + mp + 1, mp) * binomial(n + np + 1, np),
                             binomial(m + n + mp + np + 3, mp + np + 1));
        c = chain_of(lat, Gen1D::point(P->a, {m + mp + 1, n + np + 1}), wrong);
      }
    }
    return c;
  };

  for (const auto& g : pool)
    for (const auto& h : pool) {
      ++out.products;
      ++out.report.checks;
      ++out.report.laws["product_agreement"];
      const Chain a = closed(g, h);
      const Chain b = oracle::intersect_via_integration(g, h, lat);
      if (!(a == b))
        out.report.fail("product disagreement at " + describe(g) + " * " + describe(h) +
                        ": closed form " + describe(a) + ", integration " + describe(b));
    }

  for (const auto& g : pool) {
    ++out.boundaries;
    ++out.report.checks;
    ++out.report.laws["boundary_agreement"];
    const Chain a = boundary_gen(g, lat);
    const Chain b = oracle::boundary_via_integration(g, lat);
    if (!(a == b))
      out.report.fail("boundary disagreement at " + describe(g) + ": closed form " + describe(a) +
                      ", integration " + describe(b));
  }

  return out;
}

SweepReport sweep_ideal(int decBound, long window, int K) {
  SweepReport rep;
  const Lattice1D lat{};
  const auto pool = gen_pool_1d(decBound, window, std::nullopt);

  std::vector<Gen1D> ideal;
  for (const auto& g : pool)
    if (g.dec.min() >= K) ideal.push_back(g);

  for (const auto& g : ideal)
    for (const auto& h : ideal) {
      ++rep.checks;
      ++rep.laws["ideal_closed_under_product"];
      const Chain p = intersect_gen(g, h, lat);
      if (!in_truncation_ideal(p, K))
        rep.fail("product left the ideal: " + describe(g) + " * " + describe(h) + " = " +
                 describe(p));
    }

  // The boundary escapes: x_{0,1}^{K,K} lies in the ideal, its boundary does not.
  const Gen1D witness = Gen1D::interval(0, 1, {K, K});
  ++rep.checks;
  ++rep.laws["boundary_escapes_ideal"];
  if (!in_truncation_ideal(chain_of(lat, witness), K))
    rep.fail("witness generator unexpectedly outside the ideal");
  ++rep.checks;
  ++rep.laws["boundary_escapes_ideal"];
  if (in_truncation_ideal(boundary_gen(witness, lat), K))
    rep.fail("boundary of " + describe(witness) + " failed to escape the ideal");

  return rep;
}

SweepReport u_closure_check() {
  SweepReport rep;
  const long N = 5;
  const int cap = 3;
  const Lattice1D lat{Rational(1), N};

  std::set<Gen1D> S;
  for (long a = 0; a < N; ++a) {
    S.insert(canonicalize(Gen1D::point(a, {0, 0}), lat));
    S.insert(canonicalize(Gen1D::interval(a - 1, a + 1, {0, 0}), lat));
  }

  bool grew = true;
  int rounds = 0;
  while (grew && rounds < 32) {
    grew = false;
    ++rounds;
    const std::vector<Gen1D> cur(S.begin(), S.end());
    for (const auto& g : cur)
      for (const auto& h : cur) {
        const Chain p = intersect_gen(g, h, lat);
        for (const auto& [t, c] : p.terms())
          if (t.dec.m <= cap && t.dec.n <= cap && S.insert(t).second) grew = true;
      }
  }
  rep.laws["closure_rounds"] = rounds;
  rep.laws["closure_size"] = static_cast<long long>(S.size());

  std::set<Gen1D> expected;
  for (long a = 0; a < N; ++a)
    for (int m = 0; m <= cap; ++m)
      for (int n = 0; n <= cap; ++n) {
        expected.insert(canonicalize(Gen1D::point(a, {m, n}), lat));
        expected.insert(canonicalize(Gen1D::interval(a, a + 1, {m, n}), lat));
        expected.insert(canonicalize(Gen1D::infinitesimal(a, {m, n}), lat));
        if (m == n) expected.insert(canonicalize(Gen1D::interval(a - 1, a + 1, {m, m}), lat));
      }

  ++rep.checks;
  ++rep.laws["closure_matches_expected_family"];
  for (const auto& g : S)
    if (!expected.count(g)) rep.fail("unexpected generator in the closure: " + describe(g));
  for (const auto& g : expected)
    if (!S.count(g)) rep.fail("expected generator missing from the closure: " + describe(g));

  return rep;
}

}  // namespace tia
