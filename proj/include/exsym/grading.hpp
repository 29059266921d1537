#pragma once

#include "exsym/algebra.hpp"

namespace exsym {

// Four-fold grading of an h-graded algebra. First sign: theta eigenvalue,
// second sign: tau = Id + 2 D^2 eigenvalue. Sub-bases are column matrices in
// the ambient coordinates.
struct Grading {
    MatQ pp, pm, mp, mm;  // g_+^+, g_+^-, g_-^+, g_-^-
    MatQ tau;

    MatQ theta_plus() const { return MatQ::hcat(pp, pm); }
    MatQ theta_minus() const { return MatQ::hcat(mp, mm); }
    MatQ tau_plus() const { return MatQ::hcat(pp, mp); }
    MatQ tau_minus() const { return MatQ::hcat(pm, mm); }
};

// Throws std::domain_error unless D^3 = -D. Asserts D|_{g^+} = 0,
// D(g_+^-) = g_-^-, (D|_{g^-})^2 = -Id on the computed sub-bases.
Grading grade(const Algebra& g);

}  // namespace exsym
