#pragma once

// JSON wire format for chains.  One-dimensional chains:
//
//   {"lattice": {"h": "1", "period": 8},
//    "terms": [{"coeff": "-1/6",
//               "gen": {"kind": "interval", "a": 0, "b": 2, "m": 1, "n": 0}}]}
//
// "period" is omitted on a line lattice; "b" appears on intervals only;
// rationals are strings ("p" or "p/q").  Multi-dimensional chains replace
// "period" with a per-axis array "periods" (null marks a line axis) and "gen"
// with "factors", an array of one generator object per axis:
//
//   {"lattice": {"h": "1", "periods": [3, null, 3]},
//    "terms": [{"coeff": "1", "factors": [ ... three generator objects ... ]}]}
//
// Parsers throw ParseError naming the offending field.  Serialization is
// deterministic: object keys are sorted and term order follows the canonical
// generator order.

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <variant>

#include "tia/cells.hpp"
#include "tia/tensor.hpp"

namespace tia {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Gen1D& g);
nlohmann::json to_json(const Lattice1D& lat);
nlohmann::json to_json(const Chain& c);
nlohmann::json to_json(const LatticeD& lat);
nlohmann::json to_json(const GenD& g);
nlohmann::json to_json(const ChainD& c);

Gen1D gen1d_from_json(const nlohmann::json& j);
Lattice1D lattice1d_from_json(const nlohmann::json& j);
Chain chain_from_json(const nlohmann::json& j);
LatticeD lattice_d_from_json(const nlohmann::json& j);
GenD gen_d_from_json(const nlohmann::json& j);
ChainD chain_d_from_json(const nlohmann::json& j);

// Parses either wire format, deciding by the lattice shape: a "periods" array
// yields a ChainD, otherwise a Chain.
std::variant<Chain, ChainD> any_chain_from_json(const nlohmann::json& j);

}  // namespace tia
