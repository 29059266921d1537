#pragma once

#include "exsym/cocycle.hpp"
#include "exsym/extension.hpp"

namespace exsym {

// Matrix on (duals, a, l) induced by (S, U, tau, sigma): block upper
// triangular correction over diag((S^{-1})^*, U^{-1}, S). Throws
// std::invalid_argument when S or U is singular.
MatQ assemble_automorphism(const LiePair& l, const ModuleData& a, const MatQ& S, const MatQ& U,
                           const QuadCochain& c);

// Two routes. Route one checks the assembled matrix directly on
// build_extension(l, a, z): bracket, inner product, D and theta
// compatibility. Route two checks (S, U) as a pair automorphism, (tau,
// sigma) as a cochain, and the transformation law of the cocycle. The
// report records both verdicts and that they agree.
Report automorphism_check(const LiePair& l, const ModuleData& a, const QuadCocycle& z,
                          const MatQ& S, const MatQ& U, const QuadCochain& c);

}  // namespace exsym
