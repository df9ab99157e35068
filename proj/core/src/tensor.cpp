#include "tia/tensor.hpp"

namespace tia {

void LatticeD::validate() const {
  if (periods.empty()) throw std::invalid_argument("lattice dimension must be at least 1");
  for (int i = 0; i < dim(); ++i) axis(i).validate();
}

int GenD::codim() const {
  int c = 0;
  for (const auto& f : factors) c += tia::codim(f);
  return c;
}

GenD canonicalize(const GenD& g, const LatticeD& lat) {
  if (static_cast<int>(g.factors.size()) != lat.dim())
    throw std::invalid_argument("generator factor count does not match lattice dimension");
  GenD out = g;
  for (int i = 0; i < lat.dim(); ++i)
    out.factors[static_cast<size_t>(i)] =
        canonicalize(g.factors[static_cast<size_t>(i)], lat.axis(i));
  return out;
}

ChainD::ChainD(LatticeD lat) : lat_(std::move(lat)) { lat_.validate(); }

Rational ChainD::coeff(const GenD& g) const {
  const auto it = terms_.find(canonicalize(g, lat_));
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChainD::add(const GenD& g, const Rational& c) {
  if (c == 0) return;
  const GenD key = canonicalize(g, lat_);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChainD& ChainD::operator+=(const ChainD& o) {
  if (!(lat_ == o.lat_)) throw LatticeMismatch("chain addition across different lattices");
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

ChainD& ChainD::operator-=(const ChainD& o) {
  if (!(lat_ == o.lat_)) throw LatticeMismatch("chain subtraction across different lattices");
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

ChainD& ChainD::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

ChainD chain_of(const LatticeD& lat, const GenD& g, const Rational& c) {
  ChainD out(lat);
  out.add(g, c);
  return out;
}

ChainD boundary_d(const ChainD& x) {
  const LatticeD& lat = x.lattice();
  const int d = lat.dim();
  ChainD out(lat);
  for (const auto& [G, c] : x.terms()) {
    // Suffix sign: parity of the total codimension of the factors after i.
    int suffix = 0;
    std::vector<int> suffixes(static_cast<size_t>(d), 0);
    for (int i = d - 1; i >= 0; --i) {
      suffixes[static_cast<size_t>(i)] = suffix;
      suffix += codim(G.factors[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < d; ++i) {
      const Chain b = boundary_gen(G.factors[static_cast<size_t>(i)], lat.axis(i));
      if (b.empty()) continue;
      const Rational sign = (suffixes[static_cast<size_t>(i)] % 2 == 0) ? 1 : -1;
      for (const auto& [g1, cb] : b.terms()) {
        GenD H = G;
        H.factors[static_cast<size_t>(i)] = g1;
        out.add(H, c * cb * sign);
      }
    }
  }
  return out;
}

ChainD intersect_d(const ChainD& x, const ChainD& y) {
  if (!(x.lattice() == y.lattice()))
    throw LatticeMismatch("transverse product across different lattices");
  const LatticeD& lat = x.lattice();
  const int d = lat.dim();
  ChainD out(lat);

  for (const auto& [X, cx] : x.terms()) {
    for (const auto& [Y, cy] : y.terms()) {
      // Interleaving sign: each second-argument factor crosses the earlier
      // first-argument factors.
      int tau = 0, pre = 0;
      for (int i = 0; i < d; ++i) {
        tau += pre * codim(Y.factors[static_cast<size_t>(i)]);
        pre += codim(X.factors[static_cast<size_t>(i)]);
      }
      std::vector<Chain> axisProducts;
      axisProducts.reserve(static_cast<size_t>(d));
      bool zero = false;
      for (int i = 0; i < d; ++i) {
        Chain p = intersect_gen(X.factors[static_cast<size_t>(i)],
                                Y.factors[static_cast<size_t>(i)], lat.axis(i));
        if (p.empty()) {
          zero = true;
          break;
        }
        axisProducts.push_back(std::move(p));
      }
      if (zero) continue;

      Rational base = cx * cy;
      if (tau % 2 != 0) base = -base;
      // Cartesian expansion of the per-axis result chains.
      std::vector<std::map<Gen1D, Rational>::const_iterator> its, ends;
      for (const auto& p : axisProducts) {
        its.push_back(p.terms().begin());
        ends.push_back(p.terms().end());
      }
      for (;;) {
        GenD G;
        G.factors.reserve(static_cast<size_t>(d));
        Rational c = base;
        for (int i = 0; i < d; ++i) {
          G.factors.push_back(its[static_cast<size_t>(i)]->first);
          c *= its[static_cast<size_t>(i)]->second;
        }
        out.add(G, c);
        int i = d - 1;
        while (i >= 0) {
          if (++its[static_cast<size_t>(i)] != ends[static_cast<size_t>(i)]) break;
          its[static_cast<size_t>(i)] = axisProducts[static_cast<size_t>(i)].terms().begin();
          --i;
        }
        if (i < 0) break;
      }
    }
  }
  return out;
}

ChainD star_W(const ChainD& x) {
  const LatticeD& lat = x.lattice();
  ChainD out(lat);
  for (const auto& [G, c] : x.terms()) {
    GenD H = G;
    for (auto& f : H.factors) {
      if (f.dec.m != 0 || f.dec.n != 0)
        throw NotInW("decorated factor outside the double-spacing complex");
      if (f.kind == Kind::Point) {
        f = Gen1D::interval(f.a - 1, f.a + 1, {0, 0});
      } else if (f.kind == Kind::Interval && f.b - f.a == 2) {
        f = Gen1D::point(f.a + 1, {0, 0});
      } else {
        throw NotInW("factor is not a point or width-2 interval");
      }
    }
    out.add(H, c);
  }
  return out;
}

}  // namespace tia
