#pragma once

#include "exsym/cocycle.hpp"

namespace exsym {

// Decides whether the cocycle is balanced by the linear conditions (A_k),
// (B_k) over the radical filtration of l. Requires a certified semisimple
// module; throws UnsupportedError when the filtration, the socle-based ideal
// candidates (k >= 1 with [l, S(l) cap R_k] != 0), or a (B_k) instance with
// nonzero rho fall outside the supported shapes.
//
// Checks are named "A0", "B0", "A1", "B1", ... in the returned report.
Report balanced_check(const LiePair& l, const ModuleData& a, const QuadCocycle& z);

// T1: [l-, l-] = l+ (tau-grading); T2: (a^l)+ = alpha_0(Ker of the bracket on
// pairs from l-), with alpha_0 the orthogonal projection of alpha onto the
// invariants a^l.
std::pair<bool, bool> fullness_T1_T2(const LiePair& l, const ModuleData& a, const QuadCocycle& z);

// orthogonal projector onto the column span of basis (gram nondegenerate there)
MatQ orthogonal_projector(const MatQ& basis, const MatQ& gram);

}  // namespace exsym
