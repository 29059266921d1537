#include "exsym/balanced.hpp"

#include "exsym/filtration.hpp"

namespace exsym {

namespace {

// z(l) cap {L : rho(L) = 0}
MatQ central_invariants(const LiePair& l, const ModuleData& a) {
    MatQ z = center_of(l.bracket);
    if (l.dim == 0 || a.dim == 0 || a.rho_is_zero()) return z;
    MatQ flat(a.dim * a.dim, l.dim);
    for (int j = 0; j < l.dim; ++j)
        for (int r = 0; r < a.dim; ++r)
            for (int c = 0; c < a.dim; ++c) flat(r * a.dim + c, j) = a.rho[j](r, c);
    return span_intersect(z, nullspace(flat));
}

// ideal candidates for the higher conditions
MatQ socle_of(const LiePair& l) {
    std::string cls = classify_bracket(l.bracket);
    if (cls == "abelian" || cls == "semisimple" || cls == "reductive")
        return MatQ::identity(l.dim);
    if (cls == "nilpotent") return center_of(l.bracket);
    throw UnsupportedError("socle-unsupported");
}

// kernel of (x, y) -> [x, y] on span(basis1) tensor span(basis2); columns are
// coefficient vectors indexed pair-major (i * basis2.cols() + j)
MatQ pair_bracket_kernel(const BracketTensor& lb, const MatQ& basis1, const MatQ& basis2) {
    const int p = basis1.cols(), q = basis2.cols();
    MatQ m(lb.dim(), p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            m.set_col(i * q + j, lb.apply(basis1.col_vec(i), basis2.col_vec(j)));
    return nullspace(m);
}

MatQ rows_to_mat(const std::vector<VecQ>& rows, int cols) {
    MatQ m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][c];
    return m;
}

// rank of the projection of a solution space onto its first `head` unknowns
int head_rank(const MatQ& sol, int head) {
    MatQ proj(head, sol.cols());
    for (int r = 0; r < head; ++r)
        for (int c = 0; c < sol.cols(); ++c) proj(r, c) = sol(r, c);
    return rank(proj);
}

}  // namespace

MatQ orthogonal_projector(const MatQ& basis, const MatQ& gram) {
    const int n = gram.rows();
    if (basis.cols() == 0) return MatQ(n, n);
    auto inv = inverse(basis.transpose() * gram * basis);
    if (!inv) throw UnsupportedError("projection-target-degenerate");
    return basis * *inv * basis.transpose() * gram;
}

Report balanced_check(const LiePair& l, const ModuleData& a, const QuadCocycle& z) {
    Report rep;
    auto cert = certify_semisimple(l, a);
    if (!cert.certified) throw UnsupportedError("semisimplicity-uncertified");
    if (!cert.semisimple) throw UnsupportedError("module-not-semisimple");

    const int nl = l.dim, na = a.dim;

    // first condition: a joint solution (L0, A0, Z0) of
    //   alpha(L, L0) = rho(L) A0
    //   gamma(L, L0, .) = -<A0, alpha(L, .)> + Z0([L, .])
    // with L0 central and rho-invisible forces L0 = 0
    {
        MatQ cand = central_invariants(l, a);
        const int nc = cand.cols();
        const int nu = nc + na + nl;  // L0 coords, A0, Z0
        std::vector<VecQ> rows;
        for (int Li = 0; Li < nl; ++Li) {
            for (int t = 0; t < na; ++t) {
                VecQ row(nu);
                for (int u = 0; u < nc; ++u)
                    row[u] = z.alpha.eval_mixed(cand.col_vec(u), {Li})[t];
                for (int v = 0; v < na; ++v) row[nc + v] = a.rho[Li](t, v);
                rows.push_back(row);
            }
            for (int Mi = 0; Mi < nl; ++Mi) {
                VecQ row(nu);
                for (int u = 0; u < nc; ++u) {
                    VecQ cu = cand.col_vec(u);
                    Rat s = 0;
                    for (int m = 0; m < nl; ++m)
                        if (cu[m] != 0) s += cu[m] * z.gamma.scalar({Li, m, Mi});
                    row[u] = s;
                }
                VecQ g_al = a.gram * z.alpha.value({Li, Mi});
                for (int v = 0; v < na; ++v) row[nc + v] = g_al[v];
                VecQ br = l.bracket.of(Li, Mi);
                for (int w = 0; w < nl; ++w) row[nc + na + w] = -br[w];
                rows.push_back(row);
            }
        }
        MatQ sol = nullspace(rows_to_mat(rows, nu));
        int bad = head_rank(sol, nc);
        rep.add("A0", bad == 0,
                bad == 0 ? "" : "admissible central directions: " + std::to_string(bad));
    }

    MatQ inv_basis = invariants_basis(a);
    MatQ proj_inv = orthogonal_projector(inv_basis, a.gram);

    // second condition: the projection of alpha(Ker of the bracket on l x l)
    // onto the invariants a^l must be a nondegenerate subspace
    {
        MatQ ker = pair_bracket_kernel(l.bracket, MatQ::identity(nl), MatQ::identity(nl));
        MatQ img(na, ker.cols());
        for (int kc = 0; kc < ker.cols(); ++kc) {
            VecQ v(na);
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nl; ++j) {
                    Rat cij = ker(i * nl + j, kc);
                    if (cij != 0) v = v + cij * z.alpha.value({i, j});
                }
            img.set_col(kc, proj_inv * v);
        }
        MatQ basis = column_space(img);
        bool ok = rank(basis.transpose() * a.gram * basis) == basis.cols();
        rep.add("B0", ok,
                ok ? "" : "degenerate image of dimension " + std::to_string(basis.cols()));
    }

    // higher conditions over the proper nonzero radical filtration terms
    Filtration filt = radical_filtration(l.bracket);
    for (std::size_t k = 1; k + 1 < filt.terms.size(); ++k) {
        const MatQ& rk = filt.terms[k];
        if (rk.cols() == 0) break;
        const int nr = rk.cols();
        std::string kk = std::to_string(k);

        // candidates K in S(l) cap R_k; supported only when l acts trivially
        // on them, so every subspace is an ideal and the quantifier over
        // ideals with equivariant (Phi1, Phi2) reduces to a pointwise system
        MatQ kcand = span_intersect(socle_of(l), rk);
        for (int u = 0; u < kcand.cols(); ++u)
            for (int Li = 0; Li < nl; ++Li) {
                VecQ ei(nl);
                ei[Li] = 1;
                if (!vec_is_zero(l.bracket.apply(ei, kcand.col_vec(u))))
                    throw UnsupportedError("A" + kk + "-ideal-candidates-not-central");
            }
        {
            const int nc = kcand.cols();
            const int nu = nc + na + nr;  // K coords, Phi1(K), Phi2(K)
            std::vector<VecQ> rows;
            for (int Li = 0; Li < nl; ++Li) {
                // alpha(L, K) = rho(L) Phi1(K)
                for (int t = 0; t < na; ++t) {
                    VecQ row(nu);
                    for (int u = 0; u < nc; ++u)
                        row[u] = z.alpha.eval_mixed(kcand.col_vec(u), {Li})[t];
                    for (int v = 0; v < na; ++v) row[nc + v] = a.rho[Li](t, v);
                    rows.push_back(row);
                }
                // gamma(L, K, .) = -<Phi1(K), alpha(L, .)> + <Phi2(K), [L, .]>
                // as a functional on R_k
                for (int Mi = 0; Mi < nr; ++Mi) {
                    VecQ mv = rk.col_vec(Mi);
                    VecQ row(nu);
                    for (int u = 0; u < nc; ++u) {
                        VecQ cu = kcand.col_vec(u);
                        Rat s = 0;
                        for (int m1 = 0; m1 < nl; ++m1) {
                            if (cu[m1] == 0) continue;
                            for (int m2 = 0; m2 < nl; ++m2)
                                if (mv[m2] != 0)
                                    s += cu[m1] * mv[m2] * z.gamma.scalar({Li, m1, m2});
                        }
                        row[u] = s;
                    }
                    VecQ alv = z.alpha.eval_mixed(mv, {Li});  // = -alpha(L, M)
                    VecQ g_al = a.gram * alv;
                    for (int v = 0; v < na; ++v) row[nc + v] = -g_al[v];
                    VecQ ei(nl);
                    ei[Li] = 1;
                    auto coords = solve(rk, MatQ::col(l.bracket.apply(ei, mv)));
                    if (!coords)
                        throw UnsupportedError("A" + kk + "-bracket-leaves-filtration");
                    for (int w = 0; w < nr; ++w) row[nc + na + w] = -(*coords)(w, 0);
                    rows.push_back(row);
                }
            }
            MatQ sol = nullspace(rows_to_mat(rows, nu));
            int bad = head_rank(sol, nc);
            rep.add("A" + kk, bad == 0,
                    bad == 0 ? "" : "admissible ideal directions: " + std::to_string(bad));
        }

        // closed form for the last condition needs a trivial action
        if (!a.rho_is_zero()) throw UnsupportedError("B" + kk + "-nonzero-action");
        {
            // b_k = {B : <alpha(L, K), B> = 0 whenever sum of [L, K] vanishes}
            MatQ ker = pair_bracket_kernel(l.bracket, MatQ::identity(nl), rk);
            std::vector<VecQ> rows;
            for (int kc = 0; kc < ker.cols(); ++kc) {
                VecQ v(na);
                for (int i = 0; i < nl; ++i)
                    for (int j = 0; j < nr; ++j) {
                        Rat cij = ker(i * nr + j, kc);
                        if (cij == 0) continue;
                        v = v + (-cij) * z.alpha.eval_mixed(rk.col_vec(j), {i});
                    }
                rows.push_back(a.gram * v);
            }
            MatQ bk = nullspace(rows_to_mat(rows, na));
            bool ok = rank(bk.transpose() * a.gram * bk) == bk.cols();
            rep.add("B" + kk, ok,
                    ok ? "" : "degenerate block of dimension " + std::to_string(bk.cols()));

            // when nondegenerate, a witness Phi: R_k -> a with
            // <alpha(L, K), B> = <Phi([L, K]), B> on b_k must exist
            if (ok) {
                const int nu = na * nr;
                std::vector<VecQ> prows;
                std::vector<Rat> prhs;
                for (int Li = 0; Li < nl; ++Li)
                    for (int j = 0; j < nr; ++j)
                        for (int bb = 0; bb < bk.cols(); ++bb) {
                            VecQ gB = a.gram * bk.col_vec(bb);
                            VecQ ei(nl);
                            ei[Li] = 1;
                            auto coords =
                                solve(rk, MatQ::col(l.bracket.apply(ei, rk.col_vec(j))));
                            if (!coords)
                                throw UnsupportedError("B" + kk + "-bracket-leaves-filtration");
                            VecQ row(nu);
                            for (int w = 0; w < nr; ++w) {
                                Rat cw = (*coords)(w, 0);
                                if (cw == 0) continue;
                                for (int t = 0; t < na; ++t) row[t * nr + w] += cw * gB[t];
                            }
                            prows.push_back(row);
                            VecQ alv = z.alpha.eval_mixed(rk.col_vec(j), {Li});
                            prhs.push_back(-dot(alv, gB));
                        }
                VecQ pv(prows.size());
                for (std::size_t r = 0; r < prows.size(); ++r) pv[r] = prhs[r];
                if (!solve_vec(rows_to_mat(prows, nu), pv))
                    throw UnsupportedError("B" + kk + "-witness-construction-failed");
            }
        }
    }
    return rep;
}

std::pair<bool, bool> fullness_T1_T2(const LiePair& l, const ModuleData& a, const QuadCocycle& z) {
    const int na = a.dim;
    MatQ lminus = tau_minus_basis(l.D);

    bool t1 = span_equal(bracket_span_of(l.bracket, lminus, lminus), tau_plus_basis(l.D));

    MatQ inv_basis = invariants_basis(a);
    MatQ proj_inv = orthogonal_projector(inv_basis, a.gram);
    MatQ lhs = span_intersect(inv_basis, tau_plus_basis(a.D));
    MatQ ker = pair_bracket_kernel(l.bracket, lminus, lminus);
    MatQ rhs(na, ker.cols());
    const int q = lminus.cols();
    for (int kc = 0; kc < ker.cols(); ++kc) {
        VecQ v(na);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                Rat cij = ker(i * q + j, kc);
                if (cij == 0) continue;
                v = v + cij * z.alpha.eval({lminus.col_vec(i), lminus.col_vec(j)});
            }
        rhs.set_col(kc, proj_inv * v);
    }
    bool t2 = span_equal(lhs, column_space(rhs));
    return {t1, t2};
}

}  // namespace exsym
