#include "exsym/module_data.hpp"

#include "exsym/filtration.hpp"

namespace exsym {

MatQ ModuleData::rho_of(const VecQ& x) const {
    MatQ m(dim, dim);
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (x[i] != 0) m = m + rho[i] * x[i];
    return m;
}

bool ModuleData::rho_is_zero() const {
    for (const auto& r : rho)
        if (!r.is_zero()) return false;
    return true;
}

Report verify_pair(const LiePair& l) {
    Report rep;
    const int n = l.dim;
    bool shape = static_cast<int>(l.labels.size()) == n && l.bracket.dim() == n &&
                 l.D.rows() == n && l.D.cols() == n && l.theta.rows() == n && l.theta.cols() == n;
    rep.add("shape", shape);
    if (!shape) return rep;
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int k = j + 1; k < n && ok; ++k)
                    ok = vec_is_zero(jacobi_defect(l.bracket, i, j, k));
        rep.add("jacobi", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                VecQ ei(n), ej(n);
                ei[i] = 1;
                ej[j] = 1;
                ok = l.D * l.bracket.of(i, j) ==
                     l.bracket.apply(l.D.col_vec(i), ej) + l.bracket.apply(ei, l.D.col_vec(j));
            }
        rep.add("D-derivation", ok);
    }
    rep.add("h-graded", (l.D * l.D * l.D) == -l.D);
    rep.add("theta-involution", l.theta * l.theta == MatQ::identity(n));
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                ok = l.theta * l.bracket.of(i, j) ==
                     l.bracket.apply(l.theta.col_vec(i), l.theta.col_vec(j));
        rep.add("theta-automorphism", ok);
    }
    rep.add("D-theta-anticommute", (l.D * l.theta + l.theta * l.D).is_zero());
    return rep;
}

Report verify_module(const LiePair& l, const ModuleData& a) {
    Report rep;
    const int n = a.dim;
    bool shape = static_cast<int>(a.labels.size()) == n &&
                 static_cast<int>(a.rho.size()) == l.dim && a.gram.rows() == n &&
                 a.gram.cols() == n && a.D.rows() == n && a.D.cols() == n && a.theta.rows() == n &&
                 a.theta.cols() == n;
    for (const auto& r : a.rho) shape = shape && r.rows() == n && r.cols() == n;
    rep.add("shape", shape);
    if (!shape) return rep;

    rep.add("gram-symmetric", a.gram.is_symmetric());
    rep.add("gram-nondegenerate", rank(a.gram) == n);
    {
        bool ok = true;
        for (const auto& r : a.rho) ok = ok && (r.transpose() * a.gram + a.gram * r).is_zero();
        rep.add("rho-antisymmetric", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < l.dim && ok; ++i)
            for (int j = i + 1; j < l.dim && ok; ++j)
                ok = a.rho_of(l.bracket.of(i, j)) == a.rho[i] * a.rho[j] - a.rho[j] * a.rho[i];
        rep.add("rho-homomorphism", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < l.dim && ok; ++i)
            ok = a.rho_of(l.theta.col_vec(i)) == a.theta * a.rho[i] * a.theta;
        rep.add("rho-theta-equivariant", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < l.dim && ok; ++i)
            ok = a.rho_of(l.D.col_vec(i)) == a.D * a.rho[i] - a.rho[i] * a.D;
        rep.add("rho-D-equivariant", ok);
    }
    rep.add("D-antisymmetric", (a.D.transpose() * a.gram + a.gram * a.D).is_zero());
    rep.add("h-graded", (a.D * a.D * a.D) == -a.D);
    rep.add("theta-involution", a.theta * a.theta == MatQ::identity(n));
    rep.add("theta-isometry", a.theta.transpose() * a.gram * a.theta == a.gram);
    rep.add("D-theta-anticommute", (a.D * a.theta + a.theta * a.D).is_zero());
    return rep;
}

MatQ tau_plus_basis(const MatQ& D) { return column_space(MatQ::identity(D.rows()) + D * D); }

MatQ tau_minus_basis(const MatQ& D) { return column_space(-(D * D)); }

MatQ invariants_basis(const ModuleData& a) {
    MatQ stacked(0, a.dim);
    for (const auto& r : a.rho) stacked = MatQ::vcat(stacked, r);
    if (stacked.rows() == 0) return MatQ::identity(a.dim);
    return nullspace(stacked);
}

namespace {

// minimal polynomial squarefree <=> the operator is semisimple over R
bool operator_semisimple(const MatQ& m) {
    const int n = m.rows();
    auto flatten = [n](const MatQ& x) {
        VecQ v(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = x(i, j);
        return v;
    };
    // grow powers of m until one depends linearly on the previous ones; the
    // relation is the minimal polynomial (monic, coefficients low..high)
    VecQ minpoly;
    MatQ flat(n * n, 0);
    MatQ cur = MatQ::identity(n);
    while (true) {
        VecQ target = flatten(cur * m);
        MatQ next_flat = MatQ::hcat(flat, MatQ::col(flatten(cur)));
        auto sol = solve(next_flat, MatQ::col(target));
        if (sol) {
            // minimal polynomial: t^{d} - sum sol_i t^i with d = next_flat.cols()
            minpoly = sol->col_vec(0);
            break;
        }
        flat = next_flat;
        cur = cur * m;
    }
    int d = static_cast<int>(minpoly.size());
    VecQ p(d + 1);
    for (int i = 0; i < d; ++i) p[i] = -minpoly[i];
    p[d] = 1;
    // squarefree <=> gcd(p, p') constant
    VecQ dp(d);
    for (int i = 1; i <= d; ++i) dp[i - 1] = Rat(i) * p[i];
    auto degree = [](const VecQ& q) {
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i)
            if (q[i] != 0) return i;
        return -1;
    };
    VecQ r0 = p, r1 = dp;
    while (degree(r1) >= 0) {
        int d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            continue;
        }
        Rat f = r0[d0] / r1[d1];
        for (int i = 0; i <= d1; ++i) r0[i + d0 - d1] -= f * r1[i];
        if (degree(r0) < d1) std::swap(r0, r1);
    }
    return degree(r0) == 0;
}

}  // namespace

SemisimplicityCertificate certify_semisimple(const LiePair& l, const ModuleData& a) {
    SemisimplicityCertificate cert;
    if (l.dim == 0 || a.dim == 0 || a.rho_is_zero()) {
        cert.certified = true;
        cert.semisimple = true;
        cert.method = "trivial-action";
        return cert;
    }
    std::string cls;
    try {
        cls = classify_bracket(l.bracket);
    } catch (const UnsupportedError&) {
        return cert;  // not certified
    }
    if (cls == "semisimple") {
        cert.certified = true;
        cert.semisimple = true;
        cert.method = "killing-nondegenerate";
        return cert;
    }
    // abelian: commuting family is jointly semisimple iff each generator is
    if (cls == "abelian") {
        cert.certified = true;
        cert.semisimple = true;
        cert.method = "abelian-squarefree-minimal-polynomials";
        for (const auto& r : a.rho)
            if (!operator_semisimple(r)) {
                cert.semisimple = false;
                break;
            }
        return cert;
    }
    if (cls == "nilpotent") {
        // semisimple action of a nilpotent algebra factors through the
        // abelianization; check rho kills [l,l] first
        MatQ der = derived_subalgebra(l.bracket);
        for (int j = 0; j < der.cols(); ++j)
            if (!a.rho_of(der.col_vec(j)).is_zero()) {
                cert.certified = true;
                cert.semisimple = false;
                cert.method = "nilpotent-derived-action-nonzero";
                return cert;
            }
        cert.certified = true;
        cert.semisimple = true;
        cert.method = "nilpotent-factors-through-abelianization";
        for (const auto& r : a.rho)
            if (!operator_semisimple(r)) {
                cert.semisimple = false;
                break;
            }
        return cert;
    }
    if (cls == "reductive") {
        // center acts by commuting operators, derived part by Weyl
        MatQ z = center_of(l.bracket);
        cert.certified = true;
        cert.semisimple = true;
        cert.method = "reductive-center-spectra-plus-weyl";
        for (int j = 0; j < z.cols(); ++j)
            if (!operator_semisimple(a.rho_of(z.col_vec(j)))) {
                cert.semisimple = false;
                break;
            }
        return cert;
    }
    return cert;
}

}  // namespace exsym
