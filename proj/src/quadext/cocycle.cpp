#include "exsym/cocycle.hpp"

namespace exsym {

QuadCocycle zero_cocycle(int nl, int na) { return {AltForm(2, nl, na), AltForm(3, nl, 1)}; }

QuadCochain zero_cochain(int nl, int na) { return {MatQ(na, nl), AltForm(2, nl, 1)}; }

QuadCochain cochain_mul(const QuadCochain& c1, const QuadCochain& c2, const MatQ& gram_a) {
    QuadCochain r;
    r.tau = c1.tau + c2.tau;
    r.sigma = c1.sigma + c2.sigma + wedge_inner(c1.tau, c2.tau, gram_a).scaled(ratio(1, 2));
    return r;
}

QuadCochain cochain_inv(const QuadCochain& c, const MatQ& gram_a) {
    // <tau ^ tau> = 0 for a symmetric gram, so the inverse is just negation
    QuadCochain r;
    r.tau = Rat(-1) * c.tau;
    r.sigma = c.sigma.scaled(-1);
    (void)gram_a;
    return r;
}

QuadCocycle cocycle_act(const QuadCocycle& z, const QuadCochain& c, const LiePair& l,
                        const ModuleData& a) {
    AltForm dtau = ce_differential(one_form(c.tau), l.bracket, a.rho);
    AltForm dsigma = ce_differential(c.sigma, l.bracket, {});
    QuadCocycle r;
    r.alpha = z.alpha + dtau;
    r.gamma = z.gamma + dsigma +
              wedge_inner(z.alpha + dtau.scaled(ratio(1, 2)), c.tau, a.gram);
    return r;
}

Report is_cochain(const QuadCochain& c, const LiePair& l, const ModuleData& a) {
    Report rep;
    AltForm tf = one_form(c.tau);
    rep.add("tau-D-invariant", form_D_invariant(tf, l.D, a.D));
    rep.add("tau-theta-invariant", form_theta_invariant(tf, l.theta, a.theta, 1));
    rep.add("sigma-D-invariant", form_D_invariant(c.sigma, l.D, MatQ(1, 1)));
    rep.add("sigma-theta-invariant", form_theta_invariant(c.sigma, l.theta, MatQ::identity(1), 1));
    return rep;
}

Report is_cocycle(const QuadCocycle& z, const LiePair& l, const ModuleData& a) {
    Report rep;
    rep.add("alpha-D-invariant", form_D_invariant(z.alpha, l.D, a.D));
    rep.add("alpha-theta-invariant", form_theta_invariant(z.alpha, l.theta, a.theta, 1));
    rep.add("gamma-D-invariant", form_D_invariant(z.gamma, l.D, MatQ(1, 1)));
    rep.add("gamma-theta-invariant", form_theta_invariant(z.gamma, l.theta, MatQ::identity(1), 1));
    {
        AltForm d = ce_differential(z.alpha, l.bracket, a.rho);
        rep.add("d-alpha-zero", d.is_zero());
    }
    {
        AltForm lhs = ce_differential(z.gamma, l.bracket, {});
        AltForm rhs = wedge_inner(z.alpha, z.alpha, a.gram).scaled(ratio(1, 2));
        rep.add("d-gamma-half-wedge", lhs == rhs);
    }
    return rep;
}

Report verify_morphism(const LiePair& l_tgt, const ModuleData& a_tgt, const LiePair& l_src,
                       const ModuleData& a_src, const PairMorphism& m) {
    Report rep;
    bool shape = m.S.rows() == l_src.dim && m.S.cols() == l_tgt.dim && m.U.rows() == a_tgt.dim &&
                 m.U.cols() == a_src.dim;
    rep.add("shape", shape);
    if (!shape) return rep;
    {
        bool ok = true;
        for (int i = 0; i < l_tgt.dim && ok; ++i)
            for (int j = i + 1; j < l_tgt.dim && ok; ++j)
                ok = m.S * l_tgt.bracket.of(i, j) ==
                     l_src.bracket.apply(m.S.col_vec(i), m.S.col_vec(j));
        rep.add("S-homomorphism", ok);
    }
    rep.add("S-D-equivariant", m.S * l_tgt.D == l_src.D * m.S);
    rep.add("S-theta-equivariant", m.S * l_tgt.theta == l_src.theta * m.S);
    rep.add("U-isometric", m.U.transpose() * a_tgt.gram * m.U == a_src.gram);
    rep.add("U-D-equivariant", m.U * a_src.D == a_tgt.D * m.U);
    rep.add("U-theta-equivariant", m.U * a_src.theta == a_tgt.theta * m.U);
    {
        bool ok = true;
        for (int i = 0; i < l_tgt.dim && ok; ++i)
            ok = m.U * a_src.rho_of(m.S.col_vec(i)) == a_tgt.rho[i] * m.U;
        rep.add("U-rho-intertwiner", ok);
    }
    return rep;
}

QuadCocycle pullback_cocycle(const QuadCocycle& z, const PairMorphism& m) {
    QuadCocycle r;
    r.alpha = postcompose(pullback(z.alpha, m.S), m.U);
    r.gamma = pullback(z.gamma, m.S);
    return r;
}

bool class_witness_check(const QuadCocycle& source, const QuadCocycle& target,
                         const QuadCochain& c, const LiePair& l, const ModuleData& a) {
    if (!is_cochain(c, l, a).all_pass()) return false;
    return cocycle_act(source, c, l, a) == target;
}

bool class_witness_check(const QuadCocycle& source, const LiePair& l_src, const ModuleData& a_src,
                         const QuadCocycle& target, const LiePair& l_tgt, const ModuleData& a_tgt,
                         const QuadCochain& c, const PairMorphism& m) {
    (void)l_src;
    if (!verify_morphism(l_tgt, a_tgt, l_src, a_src, m).all_pass()) return false;
    if (!is_cochain(c, l_tgt, a_tgt).all_pass()) return false;
    return cocycle_act(pullback_cocycle(source, m), c, l_tgt, a_tgt) == target;
}

}  // namespace exsym
