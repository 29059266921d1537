#pragma once

#include "exsym/algebra.hpp"

namespace exsym {

// Equivariant Lie algebra (l, D_l, theta_l) without a metric.
struct LiePair {
    int dim = 0;
    std::vector<std::string> labels;
    BracketTensor bracket;
    MatQ D, theta;
};

// Orthogonal module over a LiePair: rho[i] = rho(e_i) acting on a.
struct ModuleData {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<MatQ> rho;
    MatQ gram, D, theta;

    MatQ rho_of(const VecQ& x) const;  // rho(sum x_i e_i)
    bool rho_is_zero() const;
};

Report verify_pair(const LiePair& l);
Report verify_module(const LiePair& l, const ModuleData& a);

// tau-eigenbases of an h-graded operator family (P+ = Id + D^2, P- = -D^2).
MatQ tau_plus_basis(const MatQ& D);
MatQ tau_minus_basis(const MatQ& D);

// Joint kernel of all rho(e_i): the submodule of l-invariant vectors.
MatQ invariants_basis(const ModuleData& a);

struct SemisimplicityCertificate {
    bool certified = false;   // could the question be decided at all
    bool semisimple = false;  // meaningful only when certified
    std::string method;
};

// Constructive semisimplicity certification for the classes the catalog
// needs: zero action, nondegenerate Killing form (Weyl), commuting/abelian
// generator spectra, nilpotent or reductive l via rho([l,l]) reduction.
SemisimplicityCertificate certify_semisimple(const LiePair& l, const ModuleData& a);

}  // namespace exsym
