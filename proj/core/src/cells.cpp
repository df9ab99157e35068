#include "tia/cells.hpp"

namespace tia {

namespace {
long floor_mod(long x, long n) {
  long r = x % n;
  return r < 0 ? r + n : r;
}
}  // namespace

Gen1D canonicalize(const Gen1D& g, const Lattice1D& lat) {
  if (!lat.period) {
    if (g.kind == Kind::Interval && g.b <= g.a)
      throw std::invalid_argument("interval needs a < b");
    return g;
  }
  const long N = *lat.period;
  Gen1D r = g;
  if (g.kind == Kind::Interval) {
    const long len = g.b - g.a;
    if (len < 1 || len > N - 1)
      throw std::invalid_argument("periodic interval length must be in [1, N-1]");
    r.a = floor_mod(g.a, N);
    r.b = r.a + len;
  } else {
    r.a = floor_mod(g.a, N);
    r.b = r.a;
  }
  return r;
}

Rational Chain::coeff(const Gen1D& g) const {
  const auto it = terms_.find(canonicalize(g, lat_));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Gen1D& g, const Rational& c) {
  if (c == 0) return;
  const Gen1D key = canonicalize(g, lat_);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (!(lat_ == o.lat_)) throw LatticeMismatch("chain addition across different lattices");
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (!(lat_ == o.lat_)) throw LatticeMismatch("chain subtraction across different lattices");
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

Chain chain_of(const Lattice1D& lat, const Gen1D& g, const Rational& c) {
  Chain x(lat);
  x.add(g, c);
  return x;
}

}  // namespace tia
