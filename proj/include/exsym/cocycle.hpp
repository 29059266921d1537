#pragma once

#include "exsym/cochain.hpp"
#include "exsym/module_data.hpp"

namespace exsym {

// (alpha, gamma): alpha an a-valued 2-form on l, gamma a scalar 3-form on l.
struct QuadCocycle {
    AltForm alpha, gamma;
    bool operator==(const QuadCocycle& o) const = default;
};

// (tau, sigma): tau a linear map l -> a, sigma a scalar 2-form on l.
struct QuadCochain {
    MatQ tau;
    AltForm sigma;
    bool operator==(const QuadCochain& o) const = default;
};

QuadCocycle zero_cocycle(int nl, int na);
QuadCochain zero_cochain(int nl, int na);

// group law (tau1,sigma1)(tau2,sigma2) = (tau1+tau2, sigma1+sigma2+1/2<tau1^tau2>)
QuadCochain cochain_mul(const QuadCochain& c1, const QuadCochain& c2, const MatQ& gram_a);
QuadCochain cochain_inv(const QuadCochain& c, const MatQ& gram_a);

// right action (alpha,gamma)(tau,sigma)
//   = (alpha + dtau, gamma + dsigma + <(alpha + 1/2 dtau) ^ tau>)
QuadCocycle cocycle_act(const QuadCocycle& z, const QuadCochain& c, const LiePair& l,
                        const ModuleData& a);

// both components (D,theta)-invariant in degree 1
Report is_cochain(const QuadCochain& c, const LiePair& l, const ModuleData& a);
// (D,theta)-invariance, d(alpha) = 0, d(gamma) = 1/2 <alpha ^ alpha>
Report is_cocycle(const QuadCocycle& z, const LiePair& l, const ModuleData& a);

// (S,U): S: l_tgt -> l_src Lie morphism of pairs, U: a_src -> a_tgt isometric
// embedding with U rho_src(S L) = rho_tgt(L) U; pulls cocycles over the source
// pair back to the target pair as (U o S*alpha, S*gamma).
struct PairMorphism {
    MatQ S, U;
};

Report verify_morphism(const LiePair& l_tgt, const ModuleData& a_tgt, const LiePair& l_src,
                       const ModuleData& a_src, const PairMorphism& m);

QuadCocycle pullback_cocycle(const QuadCocycle& z, const PairMorphism& m);

// target == source * c over a single pair
bool class_witness_check(const QuadCocycle& source, const QuadCocycle& target,
                         const QuadCochain& c, const LiePair& l, const ModuleData& a);
// target == (S,U)*source * c; the morphism is verified first
bool class_witness_check(const QuadCocycle& source, const LiePair& l_src, const ModuleData& a_src,
                         const QuadCocycle& target, const LiePair& l_tgt, const ModuleData& a_tgt,
                         const QuadCochain& c, const PairMorphism& m);

}  // namespace exsym
