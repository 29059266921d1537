#pragma once

#include "exsym/cocycle.hpp"

namespace exsym {

// Metric algebra on l* + a + l (basis order: duals "sigma_<label>", a, l) with
// the cocycle-twisted bracket, split gram, and block D/theta. The checked
// variant throws std::invalid_argument naming the first failing precondition.
Algebra build_extension(const LiePair& l, const ModuleData& a, const QuadCocycle& z);
Algebra build_extension_unchecked(const LiePair& l, const ModuleData& a, const QuadCocycle& z);

}  // namespace exsym
