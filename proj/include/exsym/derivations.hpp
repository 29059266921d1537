#pragma once

#include "exsym/cochain.hpp"
#include "exsym/extension.hpp"

#include <vector>

namespace exsym {

// Derivations phi of g that are antisymmetric for the inner product, commute
// with D and anticommute with theta. inner_basis spans the subspace of ad(v)
// for v in the theta-minus tau-plus summand; it lies inside span(basis).
struct DerivationSpace {
    int dim = 0;  // ambient algebra dimension
    std::vector<MatQ> basis;
    std::vector<MatQ> inner_basis;
    int out_dimension() const;
};

DerivationSpace derivation_space(const Algebra& g);

// Same space on a quadratic extension, parametrised by blocks
// (S-hat, U-hat, tau-hat, sigma-hat) in the basis (duals, a, l). The span
// must agree with derivation_space(build_extension(l, a, z)).
std::vector<MatQ> derivation_space_blockform(const LiePair& l, const ModuleData& a,
                                             const QuadCocycle& z);

// omega_phi = <phi ., .>, coordinate matrix phi^T gram.
AltForm derivation_to_form(const MatQ& phi, const MatQ& gram);

// Representatives of degree-two classes with coefficients in R^r that are
// killed by D and negated by theta: omega_phi for phi running over a basis
// of the outer quotient, tensored with the r coordinate directions.
struct H2Space {
    int r_dim = 1;
    std::vector<MatQ> out_basis;
    std::vector<AltForm> omegas;  // arity 2, vdim r_dim
    int dim() const { return static_cast<int>(omegas.size()); }
};

H2Space out_and_h2(const Algebra& g, int r_dim);

}  // namespace exsym
