#pragma once

#include "exsym/algebra_json.hpp"
#include "exsym/cocycle.hpp"

namespace exsym {

// entries on strictly increasing index tuples, nonzero only: [[i,...],[c,...]]
Json altform_to_json(const AltForm& w);
AltForm altform_from_json(const Json& j, int arity, int dim, int vdim);

// Schema "quadext.v1": {pair, module, cocycle}. Malformed input throws
// std::invalid_argument.
Json pair_to_json(const LiePair& l);
LiePair pair_from_json(const Json& j);
Json module_to_json(const ModuleData& a);
ModuleData module_from_json(const Json& j, int l_dim);
Json datum_to_json(const LiePair& l, const ModuleData& a, const QuadCocycle& z);
std::tuple<LiePair, ModuleData, QuadCocycle> datum_from_json(const Json& j);

Json cochain_to_json(const QuadCochain& c);
QuadCochain cochain_from_json(const Json& j, int l_dim, int a_dim);

}  // namespace exsym
