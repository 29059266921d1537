#pragma once

#include "exsym/algebra.hpp"

#include <json.hpp>

namespace exsym {

using Json = nlohmann::ordered_json;

Json matq_to_json(const MatQ& m);
MatQ matq_from_json(const Json& j);
Json vecq_to_json(const VecQ& v);
VecQ vecq_from_json(const Json& j);

// Schema "algebra.v1". Malformed input throws std::invalid_argument.
Json algebra_to_json(const Algebra& g);
Algebra algebra_from_json(const Json& j);

}  // namespace exsym
