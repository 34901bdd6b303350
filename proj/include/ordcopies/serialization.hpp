#pragma once

// JSON encodings.
//
//   CubeSet     {"dim": n, "prefix": [child...], "cycle": [child...]},
//               dimension-0 children (and a dimension-0 set) are 0 / 1
//   Point       [i1, ..., in]
//   FinCof      {"kind": "finite"|"cofinite", "exceptions": [..]}
//   NatSet      the FinCof form when finite or cofinite, otherwise
//               {"kind": "periodic", "prefix": [0|1...], "cycle": [0|1...]}
//   LayeredSet  {"prefix": [CubeSet of dim n+1 ...], "tail": "empty"|"full"|NatSet}
//   ForcingExpr {"kind": "quotient", "gamma": "<ordinal>"} and friends

#include <string_view>

#include "json.hpp"
#include "ordcopies/cube_set.hpp"
#include "ordcopies/forcing_expr.hpp"
#include "ordcopies/layered_set.hpp"

namespace ordcopies {

// Caps applied when reading untrusted input.
struct Limits {
  std::size_t max_dim = 4;           // CubeSet dimension
  std::size_t max_layer_prefix = 8;  // LayeredSet explicit columns

  // ORDCOPIES_NMAX, when set to a positive integer, replaces both caps.
  static Limits from_env();
};

nlohmann::json to_json(const CubeSet& s);
CubeSet cube_set_from_json(const nlohmann::json& j, const Limits& limits = {});

nlohmann::json to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FinCof& f);
nlohmann::json to_json(const NatSet& s);
NatSet nat_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LayeredSet& s);
LayeredSet layered_set_from_json(const nlohmann::json& j, const Limits& limits = {});

nlohmann::json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const nlohmann::json& j);

// Parses text as JSON, converting library errors to ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace ordcopies
