#pragma once

#include "exsym/algebra.hpp"
#include "exsym/cochain.hpp"

namespace exsym {

// Closed 2-form on the base with values in R^r, negated by theta and killed
// by D.
struct CentralExtensionDatum {
    Algebra base;
    int r_dim = 1;
    AltForm omega;  // arity 2, dim == base.dim, vdim == r_dim
};

Report verify_central_datum(const CentralExtensionDatum& d);

// True iff omega maps the kernel of the bracket on g_-^- tensor g_+^-
// onto all of R^r.
bool omega_kernel_onto(const Algebra& g, const AltForm& omega);

// Central extension R^r + g with R central, isotropic, fixed by D and
// negated by theta; bracket twisted by omega. The fullness flag combines
// fullness of the base with omega_kernel_onto; it agrees with a direct
// span computation on ext. Throws std::invalid_argument when the datum
// fails its invariants.
struct CentralExtension {
    Algebra ext;
    bool full = false;
    std::string detail;
};

CentralExtension central_extension(const CentralExtensionDatum& d);

}  // namespace exsym
