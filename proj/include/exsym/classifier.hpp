#pragma once

#include "exsym/catalog.hpp"
#include "exsym/central.hpp"

#include <string>
#include <vector>

namespace exsym {

// Orbit datum of a central extension class. Payload by shape:
//   riemann-B      B_t, symmetric on the slot space, one per R-coordinate
//   lorentz-rBeta  r0 in R^r, B_t as above, eta: slots x R^r
//   lorentz-B1B2B  B1_t on V x Vhat, B2_t symmetric on W, B_t as above
// The slot space carries the inner product gram.
struct ClassifierDatum {
    std::string shape;  // riemann-B | lorentz-rBeta | lorentz-B1B2B
    int r_dim = 1;
    MatQ gram;           // p x p, symmetric invertible
    std::vector<MatQ> B;  // r_dim entries, p x p symmetric
    VecQ r0;             // lorentz-rBeta
    MatQ eta;            // lorentz-rBeta, p x r_dim
    std::vector<MatQ> B1;  // lorentz-B1B2B
    std::vector<MatQ> B2;  // lorentz-B1B2B
    int p() const { return gram.rows(); }
};

Report verify_classifier(const ClassifierDatum& d);

// Group element: Ubar isometry of the slot space, abar a translation
// (lorentz-rBeta), gR invertible on R^r, and invertible UV, UVhat plus
// W-isometry UW for shape lorentz-B1B2B.
struct ClassifierAction {
    MatQ Ubar;
    VecQ abar;
    MatQ gR;
    MatQ UV, UVhat, UW;
};

ClassifierAction identity_action(const ClassifierDatum& d);
ClassifierAction compose_actions(const ClassifierAction& x, const ClassifierAction& y);
Report verify_action(const ClassifierDatum& d, const ClassifierAction& e);

// Right action: act(act(d, x), y) == act(d, compose_actions(x, y)).
ClassifierDatum act_on_classifier(const ClassifierDatum& d, const ClassifierAction& e);

// Orthogonal direct split of (slots, R) certifying decomposability.
struct DecompositionWitness {
    MatQ a1, a2;  // column bases of the slot summands, gram-orthogonal
    MatQ R1, R2;  // column bases of the R summands
    VecQ shift;   // lorentz-rBeta: v in span(a2) realising the eta split
};

struct DecompositionResult {
    std::string status;  // decomposable | indecomposable | undecided
    DecompositionWitness witness;  // populated when decomposable
    std::string detail;
};

// Complete for r_dim == 1; bounded coordinate-split search otherwise, with
// an explicit undecided outcome when the search is exhausted. A returned
// witness always passes decomposition_witness_check.
DecompositionResult is_indecomposable_datum(const ClassifierDatum& d);

bool decomposition_witness_check(const ClassifierDatum& d, const DecompositionWitness& w);

// Realise an abstract datum as a central datum on the catalog extension:
// the derivation blocks are assembled per R-coordinate from the datum
// payload and contracted with the inner product. Supported for families
// 1, 2a, 2b and 3; others throw UnsupportedError.
CentralExtensionDatum classifier_to_omega(const CatalogDescriptor& d, const ClassifierDatum& datum);

}  // namespace exsym
