#include "tia/serialize.hpp"

#include <string>

namespace tia {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key + ": missing");
  return *it;
}

long get_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<long>();
}

int get_small_nonneg(const json& j, const std::string& path) {
  const long v = get_long(j, path);
  if (v < 0 || v > 1000000) throw ParseError(path + ": expected a small non-negative integer");
  return static_cast<int>(v);
}

Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_string())
    throw ParseError(path + ": expected a rational string such as \"-1/6\"");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Gen1D parse_gen(const json& j, const std::string& path) {
  const json& jkind = require(j, "kind", path);
  if (!jkind.is_string()) throw ParseError(path + ".kind: expected a string");
  const std::string kind = jkind.get<std::string>();
  const long a = get_long(require(j, "a", path), path + ".a");
  const Decoration dec{get_small_nonneg(require(j, "m", path), path + ".m"),
                       get_small_nonneg(require(j, "n", path), path + ".n")};
  try {
    if (kind == "point") return Gen1D::point(a, dec);
    if (kind == "infinitesimal") return Gen1D::infinitesimal(a, dec);
    if (kind == "interval") {
      const long b = get_long(require(j, "b", path), path + ".b");
      return Gen1D::interval(a, b, dec);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ".kind: expected \"point\", \"interval\", or \"infinitesimal\"");
}

Lattice1D parse_lattice1d(const json& j, const std::string& path) {
  Lattice1D lat;
  lat.h = get_rational(require(j, "h", path), path + ".h");
  if (j.contains("period")) {
    const json& p = j.at("period");
    if (!p.is_null()) lat.period = get_long(p, path + ".period");
  }
  try {
    lat.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return lat;
}

LatticeD parse_lattice_d(const json& j, const std::string& path) {
  LatticeD lat;
  lat.h = get_rational(require(j, "h", path), path + ".h");
  const json& jp = require(j, "periods", path);
  if (!jp.is_array()) throw ParseError(path + ".periods: expected an array");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string p = path + ".periods[" + std::to_string(i) + "]";
    if (jp[i].is_null())
      lat.periods.push_back(std::nullopt);
    else
      lat.periods.push_back(get_long(jp[i], p));
  }
  try {
    lat.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return lat;
}

const json& terms_array(const json& j, const std::string& where) {
  const json& t = require(j, "terms", where);
  if (!t.is_array()) throw ParseError(where + ".terms: expected an array");
  return t;
}

}  // namespace

json to_json(const Gen1D& g) {
  json j;
  switch (g.kind) {
    case Kind::Point: j["kind"] = "point"; break;
    case Kind::Interval: j["kind"] = "interval"; break;
    case Kind::Infinitesimal: j["kind"] = "infinitesimal"; break;
  }
  j["a"] = g.a;
  if (g.kind == Kind::Interval) j["b"] = g.b;
  j["m"] = g.dec.m;
  j["n"] = g.dec.n;
  return j;
}

json to_json(const Lattice1D& lat) {
  json j;
  j["h"] = to_string(lat.h);
  if (lat.period) j["period"] = *lat.period;
  return j;
}

json to_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [g, coeff] : c.terms())
    terms.push_back(json{{"coeff", to_string(coeff)}, {"gen", to_json(g)}});
  return json{{"lattice", to_json(c.lattice())}, {"terms", std::move(terms)}};
}

json to_json(const LatticeD& lat) {
  json periods = json::array();
  for (const auto& p : lat.periods) {
    if (p)
      periods.push_back(*p);
    else
      periods.push_back(nullptr);
  }
  return json{{"h", to_string(lat.h)}, {"periods", std::move(periods)}};
}

json to_json(const GenD& g) {
  json factors = json::array();
  for (const auto& f : g.factors) factors.push_back(to_json(f));
  return factors;
}

json to_json(const ChainD& c) {
  json terms = json::array();
  for (const auto& [g, coeff] : c.terms())
    terms.push_back(json{{"coeff", to_string(coeff)}, {"factors", to_json(g)}});
  return json{{"lattice", to_json(c.lattice())}, {"terms", std::move(terms)}};
}

Gen1D gen1d_from_json(const json& j) { return parse_gen(j, "gen"); }

Lattice1D lattice1d_from_json(const json& j) { return parse_lattice1d(j, "lattice"); }

Chain chain_from_json(const json& j) {
  const Lattice1D lat = parse_lattice1d(require(j, "lattice", "chain"), "lattice");
  Chain c(lat);
  const json& terms = terms_array(j, "chain");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const Rational coeff = get_rational(require(terms[i], "coeff", path), path + ".coeff");
    const Gen1D g = parse_gen(require(terms[i], "gen", path), path + ".gen");
    try {
      c.add(g, coeff);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return c;
}

LatticeD lattice_d_from_json(const json& j) { return parse_lattice_d(j, "lattice"); }

GenD gen_d_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("factors: expected an array");
  GenD g;
  for (std::size_t i = 0; i < j.size(); ++i)
    g.factors.push_back(parse_gen(j[i], "factors[" + std::to_string(i) + "]"));
  return g;
}

ChainD chain_d_from_json(const json& j) {
  const LatticeD lat = parse_lattice_d(require(j, "lattice", "chain"), "lattice");
  ChainD c(lat);
  const json& terms = terms_array(j, "chain");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const Rational coeff = get_rational(require(terms[i], "coeff", path), path + ".coeff");
    const json& jf = require(terms[i], "factors", path);
    if (!jf.is_array()) throw ParseError(path + ".factors: expected an array");
    GenD g;
    for (std::size_t k = 0; k < jf.size(); ++k)
      g.factors.push_back(parse_gen(jf[k], path + ".factors[" + std::to_string(k) + "]"));
    if (g.factors.size() != static_cast<std::size_t>(lat.dim()))
      throw ParseError(path + ".factors: expected " + std::to_string(lat.dim()) +
                       " factors to match the lattice dimension");
    try {
      c.add(g, coeff);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return c;
}

std::variant<Chain, ChainD> any_chain_from_json(const json& j) {
  const json& lat = require(j, "lattice", "chain");
  if (lat.is_object() && lat.contains("periods")) return chain_d_from_json(j);
  return chain_from_json(j);
}

}  // namespace tia
