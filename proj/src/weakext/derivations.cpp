#include "exsym/derivations.hpp"

#include "exsym/grading.hpp"

#include <algorithm>
#include <utility>

namespace exsym {

namespace {

// Linear functional on flattened matrix entries, phi(i, j) -> i * n + j.
using SparseRow = std::vector<std::pair<int, Rat>>;

bool is_diagonal(const MatQ& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

// Zero-skipping product; keeps the staged parameter bases cheap while
// they are still sparse.
MatQ sparse_mul(const MatQ& a, const MatQ& b) {
    MatQ out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& v = a(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& w = b(k, j);
                if (w != 0) out(i, j) += v * w;
            }
        }
    return out;
}

// Restrict the span of P to the subspace killed by the rows. Chunking keeps
// the dense intermediate small; the column count only ever shrinks.
MatQ refine(MatQ p, const std::vector<SparseRow>& rows, std::size_t chunk = 768) {
    for (std::size_t lo = 0; lo < rows.size() && p.cols() > 0; lo += chunk) {
        const std::size_t hi = std::min(rows.size(), lo + chunk);
        MatQ cp(static_cast<int>(hi - lo), p.cols());
        bool any = false;
        for (std::size_t r = lo; r < hi; ++r)
            for (const auto& [idx, c] : rows[r])
                for (int j = 0; j < p.cols(); ++j) {
                    const Rat& v = p(idx, j);
                    if (v != 0) {
                        cp(static_cast<int>(r - lo), j) += c * v;
                        any = true;
                    }
                }
        if (any) p = sparse_mul(p, nullspace(cp));
    }
    return p;
}

// phi m - m phi = 0, or phi m + m phi = 0 when anti is set.
std::vector<SparseRow> commute_rows(const MatQ& m, int n, bool anti) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseRow row;
            for (int s = 0; s < n; ++s) {
                if (m(s, j) != 0) row.emplace_back(i * n + s, m(s, j));
                if (m(i, s) != 0) row.emplace_back(s * n + j, anti ? m(i, s) : -m(i, s));
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    return rows;
}

// phi^T g + g phi = 0; the condition matrix is symmetric, so i <= j suffices.
std::vector<SparseRow> gram_rows(const MatQ& g, int n) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SparseRow row;
            for (int s = 0; s < n; ++s) {
                if (g(s, j) != 0) row.emplace_back(s * n + i, g(s, j));
                if (g(i, s) != 0) row.emplace_back(s * n + j, g(i, s));
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    return rows;
}

// phi [ei, ej] - [phi ei, ej] - [ei, phi ej] = 0, one row per target
// coordinate t.
std::vector<SparseRow> derivation_rows(const BracketTensor& b, int n) {
    std::vector<MatQ> ad;
    ad.reserve(n);
    for (int i = 0; i < n; ++i) ad.push_back(b.ad_basis(i));
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VecQ c = b.of(i, j);
            for (int t = 0; t < n; ++t) {
                SparseRow row;
                for (int s = 0; s < n; ++s)
                    if (c[s] != 0) row.emplace_back(t * n + s, c[s]);
                for (int s = 0; s < n; ++s) {
                    const Rat& aj = ad[j](t, s);
                    if (aj != 0) row.emplace_back(s * n + i, aj);
                    const Rat& ai = ad[i](t, s);
                    if (ai != 0) row.emplace_back(s * n + j, -ai);
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    return rows;
}

MatQ flatten(const std::vector<MatQ>& mats, int n) {
    MatQ f(n * n, static_cast<int>(mats.size()));
    for (int k = 0; k < f.cols(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f(i * n + j, k) = mats[k](i, j);
    return f;
}

}  // namespace

int DerivationSpace::out_dimension() const {
    return rank(flatten(basis, dim)) - rank(flatten(inner_basis, dim));
}

DerivationSpace derivation_space(const Algebra& g) {
    const int n = g.dim;
    MatQ p;
    if (is_diagonal(g.theta)) {
        std::vector<int> cols;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.theta(i, i) + g.theta(j, j) == 0) cols.push_back(i * n + j);
        p = MatQ(n * n, static_cast<int>(cols.size()));
        for (int k = 0; k < p.cols(); ++k) p(cols[k], k) = 1;
    } else {
        p = refine(MatQ::identity(n * n), commute_rows(g.theta, n, true));
    }
    p = refine(std::move(p), commute_rows(g.D, n, false));
    p = refine(std::move(p), gram_rows(g.gram, n));
    p = refine(std::move(p), derivation_rows(g.bracket, n));

    DerivationSpace out;
    out.dim = n;
    for (int k = 0; k < p.cols(); ++k) {
        MatQ phi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) phi(i, j) = p(i * n + j, k);
        out.basis.push_back(std::move(phi));
    }
    const Grading gr = grade(g);
    for (int c = 0; c < gr.mp.cols(); ++c) out.inner_basis.push_back(g.bracket.ad(gr.mp.col_vec(c)));
    return out;
}

namespace {

// Unknown layout for the block route: S-hat (nl x nl), U-hat (na x na),
// tau-hat (na x nl), sigma-hat on pairs i < j.
struct BlockLayout {
    int nl, na;
    std::vector<std::pair<int, int>> pairs;
    int iS(int i, int j) const { return i * nl + j; }
    int iU(int i, int j) const { return nl * nl + i * na + j; }
    int iT(int i, int j) const { return nl * nl + na * na + i * nl + j; }
    int iSig(int k) const { return nl * nl + na * na + na * nl + k; }
    int total() const { return nl * nl + na * na + na * nl + static_cast<int>(pairs.size()); }
};

struct Blocks {
    MatQ S, U, T;
    AltForm sigma;
};

Blocks unpack(const BlockLayout& lay, const VecQ& x) {
    Blocks b{MatQ(lay.nl, lay.nl), MatQ(lay.na, lay.na), MatQ(lay.na, lay.nl),
             AltForm(2, lay.nl, 1)};
    for (int i = 0; i < lay.nl; ++i)
        for (int j = 0; j < lay.nl; ++j) b.S(i, j) = x[lay.iS(i, j)];
    for (int i = 0; i < lay.na; ++i)
        for (int j = 0; j < lay.na; ++j) b.U(i, j) = x[lay.iU(i, j)];
    for (int i = 0; i < lay.na; ++i)
        for (int j = 0; j < lay.nl; ++j) b.T(i, j) = x[lay.iT(i, j)];
    for (std::size_t k = 0; k < lay.pairs.size(); ++k)
        if (x[lay.iSig(static_cast<int>(k))] != 0)
            b.sigma.set({lay.pairs[k].first, lay.pairs[k].second},
                        {x[lay.iSig(static_cast<int>(k))]});
    return b;
}

void append_mat(VecQ& out, const MatQ& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
}

VecQ basis_vec(int n, int i) {
    VecQ v(n, Rat(0));
    v[i] = 1;
    return v;
}

// Linear defect of the block conditions; the block space is their kernel.
VecQ block_residual(const LiePair& l, const ModuleData& a, const QuadCocycle& z, const Blocks& b) {
    VecQ out;
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) {
            VecQ d = b.S * l.bracket.of(i, j);
            VecQ d2 = l.bracket.apply(b.S.col_vec(i), basis_vec(l.dim, j));
            VecQ d3 = l.bracket.apply(basis_vec(l.dim, i), b.S.col_vec(j));
            for (int t = 0; t < l.dim; ++t) out.push_back(d[t] - d2[t] - d3[t]);
        }
    append_mat(out, b.S * l.D - l.D * b.S);
    append_mat(out, b.S * l.theta + l.theta * b.S);

    append_mat(out, b.U.transpose() * a.gram + a.gram * b.U);
    append_mat(out, b.U * a.D - a.D * b.U);
    append_mat(out, b.U * a.theta + a.theta * b.U);
    for (int i = 0; i < l.dim; ++i)
        append_mat(out, a.rho_of(b.S.col_vec(i)) - a.rho[i] * b.U + b.U * a.rho[i]);

    append_mat(out, b.T * l.D - a.D * b.T);
    append_mat(out, a.theta * b.T * l.theta + b.T);

    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) {
            out.push_back(b.sigma.eval({l.D.col_vec(i), basis_vec(l.dim, j)})[0] +
                          b.sigma.eval({basis_vec(l.dim, i), l.D.col_vec(j)})[0]);
            out.push_back(b.sigma.eval({l.theta.col_vec(i), l.theta.col_vec(j)})[0] +
                          b.sigma.scalar({i, j}));
        }

    const AltForm dtau = ce_differential(one_form(b.T), l.bracket, a.rho);
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) {
            VecQ r = b.U * z.alpha.value({i, j});
            VecQ r2 = z.alpha.eval_mixed(b.S.col_vec(i), {j});
            VecQ r3 = z.alpha.eval_mixed(b.S.col_vec(j), {i});
            VecQ r4 = dtau.value({i, j});
            for (int t = 0; t < a.dim; ++t) out.push_back(r[t] + r2[t] - r3[t] + r4[t]);
        }

    const AltForm dsigma = ce_differential(b.sigma, l.bracket, {});
    const AltForm wedge = wedge_inner(z.alpha, b.T, a.gram);
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j)
            for (int k = j + 1; k < l.dim; ++k) {
                Rat g = z.gamma.eval_mixed(b.S.col_vec(i), {j, k})[0] -
                        z.gamma.eval_mixed(b.S.col_vec(j), {i, k})[0] +
                        z.gamma.eval_mixed(b.S.col_vec(k), {i, j})[0];
                out.push_back(g + dsigma.scalar({i, j, k}) + wedge.scalar({i, j, k}));
            }
    return out;
}

}  // namespace

std::vector<MatQ> derivation_space_blockform(const LiePair& l, const ModuleData& a,
                                             const QuadCocycle& z) {
    BlockLayout lay;
    lay.nl = l.dim;
    lay.na = a.dim;
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) lay.pairs.emplace_back(i, j);

    const int q = lay.total();
    MatQ residuals;
    for (int k = 0; k < q; ++k) {
        VecQ x(q, Rat(0));
        x[k] = 1;
        VecQ r = block_residual(l, a, z, unpack(lay, x));
        if (k == 0) residuals = MatQ(static_cast<int>(r.size()), q);
        for (std::size_t t = 0; t < r.size(); ++t) residuals(static_cast<int>(t), k) = r[t];
    }
    MatQ ker = q > 0 ? nullspace(residuals) : MatQ(0, 0);

    const int n = 2 * l.dim + a.dim;
    std::vector<MatQ> out;
    for (int c = 0; c < ker.cols(); ++c) {
        const Blocks b = unpack(lay, ker.col_vec(c));
        MatQ phi(n, n);
        const MatQ tg = b.T.transpose() * a.gram;
        const int off = l.dim + a.dim;
        for (int w = 0; w < l.dim; ++w) {
            for (int u = 0; u < l.dim; ++u) {
                phi(w, u) = -b.S(u, w);
                phi(w, off + u) = b.sigma.scalar({u, w});
                phi(off + w, off + u) = b.S(w, u);
            }
            for (int u = 0; u < a.dim; ++u) {
                phi(w, l.dim + u) = -tg(w, u);
                phi(l.dim + u, off + w) = b.T(u, w);
            }
        }
        for (int w = 0; w < a.dim; ++w)
            for (int u = 0; u < a.dim; ++u) phi(l.dim + w, l.dim + u) = -b.U(w, u);
        out.push_back(std::move(phi));
    }
    return out;
}

AltForm derivation_to_form(const MatQ& phi, const MatQ& gram) {
    const int n = phi.rows();
    AltForm w(2, n, 1);
    const MatQ m = phi.transpose() * gram;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != 0) w.set({i, j}, {m(i, j)});
    return w;
}

H2Space out_and_h2(const Algebra& g, int r_dim) {
    const DerivationSpace d = derivation_space(g);
    const int n = g.dim;
    const int ni = static_cast<int>(d.inner_basis.size());
    std::vector<MatQ> stacked = d.inner_basis;
    stacked.insert(stacked.end(), d.basis.begin(), d.basis.end());
    std::vector<int> pivots;
    rref(flatten(stacked, n), &pivots);

    H2Space h;
    h.r_dim = r_dim;
    for (int p : pivots)
        if (p >= ni) h.out_basis.push_back(d.basis[p - ni]);
    for (const MatQ& phi : h.out_basis) {
        const AltForm base = derivation_to_form(phi, g.gram);
        for (int t = 0; t < r_dim; ++t) {
            AltForm w(2, n, r_dim);
            for (const auto& [idx, v] : base.entries()) {
                VecQ val(r_dim, Rat(0));
                val[t] = v[0];
                w.set(idx, val);
            }
            h.omegas.push_back(std::move(w));
        }
    }
    return h;
}

}  // namespace exsym
