#include "exsym/autcheck.hpp"

#include <stdexcept>

namespace exsym {

MatQ assemble_automorphism(const LiePair& l, const ModuleData& a, const MatQ& S, const MatQ& U,
                           const QuadCochain& c) {
    const int nl = l.dim, na = a.dim, n = 2 * nl + na;
    const auto si = inverse(S);
    const auto ui = inverse(U);
    if (!si || !ui) throw std::invalid_argument("assemble_automorphism: singular S or U");

    MatQ p(n, n);
    const MatQ sit = si->transpose();
    const int off = nl + na;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            p(i, j) = sit(i, j);
            p(off + i, off + j) = S(i, j);
        }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) p(nl + i, nl + j) = (*ui)(i, j);

    MatQ q = MatQ::identity(n);
    const MatQ tg = c.tau.transpose() * a.gram;
    const MatQ tgt = tg * c.tau;
    for (int w = 0; w < nl; ++w) {
        for (int u = 0; u < na; ++u) q(w, nl + u) = -tg(w, u);
        for (int u = 0; u < nl; ++u)
            q(w, off + u) = c.sigma.scalar({u, w}) - tgt(u, w) / 2;
        for (int u = 0; u < na; ++u) q(nl + u, off + w) = c.tau(u, w);
    }
    return p * q;
}

Report automorphism_check(const LiePair& l, const ModuleData& a, const QuadCocycle& z,
                          const MatQ& S, const MatQ& U, const QuadCochain& c) {
    Report rep;
    const Algebra g = build_extension(l, a, z);

    bool assembled = true;
    MatQ f;
    try {
        f = assemble_automorphism(l, a, S, U, c);
    } catch (const std::invalid_argument&) {
        assembled = false;
    }
    rep.add("assembled-invertible", assembled);

    bool bracket_ok = false, iso_ok = false, d_ok = false, th_ok = false;
    if (assembled) {
        bracket_ok = true;
        for (int i = 0; i < g.dim && bracket_ok; ++i)
            for (int j = i + 1; j < g.dim && bracket_ok; ++j)
                bracket_ok = f * g.bracket.of(i, j) == g.bracket.apply(f.col_vec(i), f.col_vec(j));
        iso_ok = f.transpose() * g.gram * f == g.gram;
        d_ok = f * g.D == g.D * f;
        th_ok = f * g.theta == g.theta * f;
    }
    rep.add("matrix-bracket", bracket_ok);
    rep.add("matrix-isometry", iso_ok);
    rep.add("matrix-D", d_ok);
    rep.add("matrix-theta", th_ok);
    const bool route_matrix = assembled && bracket_ok && iso_ok && d_ok && th_ok;

    const PairMorphism m{S, U};
    const bool pair_ok = assembled && verify_morphism(l, a, l, a, m).all_pass();
    const bool cochain_ok = is_cochain(c, l, a).all_pass();
    bool law_ok = false;
    if (pair_ok && cochain_ok) {
        const QuadCocycle lhs = pullback_cocycle(z, m);
        const QuadCocycle rhs = cocycle_act(z, cochain_inv(c, a.gram), l, a);
        law_ok = lhs.alpha == rhs.alpha && lhs.gamma == rhs.gamma;
    }
    rep.add("pair-morphism", pair_ok);
    rep.add("cochain", cochain_ok);
    rep.add("cocycle-law", law_ok);
    const bool route_conditions = pair_ok && cochain_ok && law_ok;

    rep.add("routes-agree", route_matrix == route_conditions,
            route_matrix == route_conditions ? "" : "matrix and condition routes disagree");
    return rep;
}

}  // namespace exsym
