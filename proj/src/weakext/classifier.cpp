#include "exsym/classifier.hpp"

#include "exsym/derivations.hpp"
#include "exsym/extension.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace exsym {

namespace {

bool symmetric_list(const std::vector<MatQ>& v, int p) {
    for (const auto& m : v)
        if (m.rows() != p || m.cols() != p || !m.is_symmetric()) return false;
    return true;
}

VecQ basis_vec(int n, int i) {
    VecQ v(n, Rat(0));
    v[i] = 1;
    return v;
}

}  // namespace

Report verify_classifier(const ClassifierDatum& d) {
    Report rep;
    const int p = d.p();
    rep.add("shape-tag", d.shape == "riemann-B" || d.shape == "lorentz-rBeta" ||
                             d.shape == "lorentz-B1B2B");
    rep.add("r-dim", d.r_dim >= 1);
    rep.add("gram", d.gram.cols() == p && d.gram.is_symmetric() && inverse(d.gram).has_value());
    rep.add("B-symmetric", static_cast<int>(d.B.size()) == d.r_dim && symmetric_list(d.B, p));
    if (d.shape == "lorentz-rBeta") {
        rep.add("r0-size", static_cast<int>(d.r0.size()) == d.r_dim);
        rep.add("eta-shape", d.eta.rows() == p && d.eta.cols() == d.r_dim);
    }
    if (d.shape == "lorentz-B1B2B") {
        bool b1 = static_cast<int>(d.B1.size()) == d.r_dim;
        for (std::size_t k = 1; k < d.B1.size() && b1; ++k)
            b1 = d.B1[k].rows() == d.B1[0].rows() && d.B1[k].cols() == d.B1[0].cols();
        rep.add("B1-shape", b1);
        bool b2 = static_cast<int>(d.B2.size()) == d.r_dim;
        for (const auto& m : d.B2)
            if (m.rows() != m.cols() || !m.is_symmetric()) b2 = false;
        for (std::size_t k = 1; k < d.B2.size() && b2; ++k) b2 = d.B2[k].rows() == d.B2[0].rows();
        rep.add("B2-shape", b2);
    }
    return rep;
}

ClassifierAction identity_action(const ClassifierDatum& d) {
    ClassifierAction e;
    e.Ubar = MatQ::identity(d.p());
    e.gR = MatQ::identity(d.r_dim);
    if (d.shape == "lorentz-rBeta") e.abar = VecQ(d.p(), Rat(0));
    if (d.shape == "lorentz-B1B2B") {
        e.UV = MatQ::identity(d.B1.empty() ? 0 : d.B1[0].rows());
        e.UVhat = MatQ::identity(d.B1.empty() ? 0 : d.B1[0].cols());
        e.UW = MatQ::identity(d.B2.empty() ? 0 : d.B2[0].rows());
    }
    return e;
}

ClassifierAction compose_actions(const ClassifierAction& x, const ClassifierAction& y) {
    ClassifierAction e;
    e.Ubar = x.Ubar * y.Ubar;
    e.gR = x.gR * y.gR;
    if (!x.abar.empty()) e.abar = x.abar + x.Ubar * y.abar;
    if (x.UV.rows() || y.UV.rows()) {
        e.UV = x.UV * y.UV;
        e.UVhat = x.UVhat * y.UVhat;
        e.UW = x.UW * y.UW;
    }
    return e;
}

Report verify_action(const ClassifierDatum& d, const ClassifierAction& e) {
    Report rep;
    rep.add("Ubar-isometry", e.Ubar.rows() == d.p() && e.Ubar.cols() == d.p() &&
                                 e.Ubar.transpose() * d.gram * e.Ubar == d.gram);
    rep.add("gR-invertible",
            e.gR.rows() == d.r_dim && e.gR.cols() == d.r_dim && inverse(e.gR).has_value());
    if (d.shape == "lorentz-rBeta")
        rep.add("abar-size", static_cast<int>(e.abar.size()) == d.p());
    if (d.shape == "lorentz-B1B2B") {
        const int kv = d.B1.empty() ? 0 : d.B1[0].rows();
        const int kvh = d.B1.empty() ? 0 : d.B1[0].cols();
        const int kw = d.B2.empty() ? 0 : d.B2[0].rows();
        rep.add("UV-invertible", e.UV.rows() == kv && e.UV.cols() == kv &&
                                     (kv == 0 || inverse(e.UV).has_value()));
        rep.add("UVhat-invertible", e.UVhat.rows() == kvh && e.UVhat.cols() == kvh &&
                                        (kvh == 0 || inverse(e.UVhat).has_value()));
        rep.add("UW-orthogonal", e.UW.rows() == kw && e.UW.cols() == kw &&
                                     e.UW.transpose() * e.UW == MatQ::identity(kw));
    }
    return rep;
}

ClassifierDatum act_on_classifier(const ClassifierDatum& d, const ClassifierAction& e) {
    const auto h = inverse(e.gR);
    if (!h) throw std::invalid_argument("act_on_classifier: singular gR");
    const auto recombine = [&](const std::vector<MatQ>& pre) {
        std::vector<MatQ> out;
        for (int s = 0; s < d.r_dim; ++s) {
            MatQ acc(pre[0].rows(), pre[0].cols());
            for (int t = 0; t < d.r_dim; ++t)
                if ((*h)(s, t) != 0) acc = acc + (*h)(s, t) * pre[t];
            out.push_back(std::move(acc));
        }
        return out;
    };

    ClassifierDatum out = d;
    std::vector<MatQ> bpre;
    for (const MatQ& b : d.B) bpre.push_back(e.Ubar.transpose() * b * e.Ubar);
    out.B = recombine(bpre);

    if (d.shape == "lorentz-rBeta") {
        out.r0 = *h * d.r0;
        const auto gi = inverse(d.gram);
        MatQ shifted = d.eta;
        for (int t = 0; t < d.r_dim; ++t) {
            const VecQ sharp = *gi * (d.B[t] * e.abar);
            for (int i = 0; i < d.p(); ++i)
                shifted(i, t) -= sharp[i] + e.abar[i] * d.r0[t];
        }
        const auto ui = inverse(e.Ubar);
        if (!ui) throw std::invalid_argument("act_on_classifier: singular Ubar");
        out.eta = *ui * shifted * h->transpose();
    }
    if (d.shape == "lorentz-B1B2B") {
        std::vector<MatQ> b1pre, b2pre;
        for (const MatQ& b : d.B1) b1pre.push_back(e.UV.transpose() * b * e.UVhat);
        for (const MatQ& b : d.B2) b2pre.push_back(e.UW.transpose() * b * e.UW);
        if (!b1pre.empty()) out.B1 = recombine(b1pre);
        if (!b2pre.empty()) out.B2 = recombine(b2pre);
    }
    return out;
}

namespace {

// Gram-anisotropic vector inside the column span, if any exists.
std::optional<VecQ> anisotropic_in(const MatQ& k, const MatQ& gram) {
    const MatQ m = k.transpose() * gram * k;
    for (int i = 0; i < m.rows(); ++i)
        if (m(i, i) != 0) return k.col_vec(i);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0) return k.col_vec(i) + k.col_vec(j);
    return std::nullopt;
}

MatQ ortho_complement(const VecQ& v, const MatQ& gram) {
    MatQ row(1, static_cast<int>(v.size()));
    const VecQ gv = gram * v;
    for (std::size_t i = 0; i < gv.size(); ++i) row(0, static_cast<int>(i)) = gv[i];
    return nullspace(row);
}

// One anisotropic line split off the radical; shared by the r = 1 branches.
bool split_on_radical(const ClassifierDatum& d, const MatQ& radical, DecompositionResult& res,
                      const VecQ* eta_col) {
    const auto v = anisotropic_in(radical, d.gram);
    if (!v) return false;
    res.status = "decomposable";
    res.witness.a2 = MatQ::from_cols({*v});
    res.witness.a1 = ortho_complement(*v, d.gram);
    res.witness.R1 = MatQ::identity(1);
    res.witness.R2 = MatQ(1, 0);
    if (d.shape == "lorentz-rBeta") {
        res.witness.shift = VecQ(d.p(), Rat(0));
        if (d.r0[0] != 0 && eta_col) {
            // eta component along the split line, divided by r0
            const Rat c = dot(d.gram * *v, *eta_col) / dot(d.gram * *v, *v);
            res.witness.shift = (c / d.r0[0]) * *v;
        }
    }
    return true;
}

DecompositionResult decide_r1(const ClassifierDatum& d) {
    DecompositionResult res;
    const int p = d.p();
    if (d.shape == "riemann-B") {
        if (p == 0) {
            res.status = "indecomposable";
            res.detail = "no slots and a single R line";
            return res;
        }
        if (split_on_radical(d, nullspace(d.B[0]), res, nullptr)) {
            res.detail = "anisotropic line in the radical of B";
            return res;
        }
        res.status = "indecomposable";
        res.detail = "radical of B carries no anisotropic vector";
        return res;
    }
    if (d.shape == "lorentz-rBeta") {
        const VecQ eta0 = d.eta.col_vec(0);
        if (d.r0[0] == 0) {
            const auto v = solve_vec(d.B[0], d.gram * eta0);
            if (v) {
                res.status = "decomposable";
                res.detail = "r0 = 0 and eta lies in the sharp image of B";
                res.witness.a1 = MatQ(p, 0);
                res.witness.a2 = MatQ::identity(p);
                res.witness.R1 = MatQ(1, 0);
                res.witness.R2 = MatQ::identity(1);
                res.witness.shift = *v;
                return res;
            }
        }
        MatQ radical = nullspace(d.B[0]);
        if (d.r0[0] == 0 && radical.cols() > 0) {
            // restrict to the part orthogonal to eta
            MatQ row(1, radical.cols());
            const VecQ ge = d.gram * eta0;
            for (int j = 0; j < radical.cols(); ++j) row(0, j) = dot(ge, radical.col_vec(j));
            radical = radical * nullspace(row);
        }
        if (split_on_radical(d, radical, res, &eta0)) {
            res.detail = "anisotropic line split off the radical";
            return res;
        }
        res.status = "indecomposable";
        res.detail = d.r0[0] == 0 ? "eta escapes both the sharp image and the radical"
                                  : "r0 nonzero and radical carries no anisotropic vector";
        return res;
    }
    // lorentz-B1B2B
    if (d.B1[0].is_zero() && d.B2[0].is_zero()) {
        res.status = "decomposable";
        res.detail = "B1 and B2 vanish; R moves entirely to the second summand";
        res.witness.a1 = MatQ(p, 0);
        res.witness.a2 = MatQ::identity(p);
        res.witness.R1 = MatQ(1, 0);
        res.witness.R2 = MatQ::identity(1);
        return res;
    }
    if (split_on_radical(d, nullspace(d.B[0]), res, nullptr)) {
        res.detail = "anisotropic line in the radical of B";
        return res;
    }
    res.status = "indecomposable";
    res.detail = "B1 or B2 nonzero and the radical of B carries no anisotropic vector";
    return res;
}

DecompositionResult coordinate_search(const ClassifierDatum& d) {
    DecompositionResult res;
    const int p = d.p(), r = d.r_dim;
    if (p > 12 || r > 6) {
        res.status = "undecided";
        res.detail = "split search bound exceeded";
        return res;
    }
    const auto gi = inverse(d.gram);
    for (unsigned sa = 0; sa < (1u << p); ++sa) {
        bool gram_ok = true;
        for (int i = 0; i < p && gram_ok; ++i)
            for (int j = 0; j < p && gram_ok; ++j)
                if ((sa >> i & 1u) != (sa >> j & 1u) && d.gram(i, j) != 0) gram_ok = false;
        if (!gram_ok) continue;
        for (unsigned sr = 0; sr < (1u << r); ++sr) {
            const int ca = __builtin_popcount(sa), cr = __builtin_popcount(sr);
            if (ca + cr == 0) continue;
            if (d.shape == "riemann-B" && (p - ca) + (r - cr) == 0) continue;

            bool ok = true;
            for (int i = 0; i < p && ok; ++i)
                for (int j = i; j < p && ok; ++j) {
                    const bool ia = sa >> i & 1u, ja = sa >> j & 1u;
                    for (int t = 0; t < r && ok; ++t) {
                        const bool tr = sr >> t & 1u;
                        if (d.B[t](i, j) == 0) continue;
                        if (ia != ja || (ia && ja && !tr) || (!ia && !ja && tr)) ok = false;
                    }
                }
            if (!ok) continue;
            if (d.shape == "lorentz-B1B2B")
                for (int t = 0; t < r && ok; ++t)
                    if ((sr >> t & 1u) && (!d.B1[t].is_zero() || !d.B2[t].is_zero())) ok = false;
            if (!ok) continue;

            VecQ shift;
            if (d.shape == "lorentz-rBeta") {
                for (int t = 0; t < r && ok; ++t)
                    if ((sr >> t & 1u) && d.r0[t] != 0) ok = false;
                if (!ok) continue;
                std::vector<int> unknowns;
                for (int i = 0; i < p; ++i)
                    if (sa >> i & 1u) unknowns.push_back(i);
                std::vector<std::pair<int, int>> eqs;
                for (int i = 0; i < p; ++i)
                    for (int t = 0; t < r; ++t)
                        if ((sa >> i & 1u) || (sr >> t & 1u)) eqs.emplace_back(i, t);
                MatQ sys(static_cast<int>(eqs.size()), static_cast<int>(unknowns.size()));
                VecQ rhs(eqs.size());
                std::vector<MatQ> gb;
                for (int t = 0; t < r; ++t) gb.push_back(*gi * d.B[t]);
                for (std::size_t e = 0; e < eqs.size(); ++e) {
                    const auto [i, t] = eqs[e];
                    for (std::size_t u = 0; u < unknowns.size(); ++u) {
                        Rat c = gb[t](i, unknowns[u]);
                        if (i == unknowns[u]) c += d.r0[t];
                        sys(static_cast<int>(e), static_cast<int>(u)) = c;
                    }
                    rhs[e] = d.eta(i, t);
                }
                const auto v = solve_vec(sys, rhs);
                if (!v) continue;
                shift = VecQ(p, Rat(0));
                for (std::size_t u = 0; u < unknowns.size(); ++u) shift[unknowns[u]] = (*v)[u];
            }

            res.status = "decomposable";
            res.detail = "coordinate split";
            std::vector<VecQ> a1c, a2c, r1c, r2c;
            for (int i = 0; i < p; ++i)
                ((sa >> i & 1u) ? a2c : a1c).push_back(basis_vec(p, i));
            for (int t = 0; t < r; ++t)
                ((sr >> t & 1u) ? r2c : r1c).push_back(basis_vec(r, t));
            res.witness.a1 = a1c.empty() ? MatQ(p, 0) : MatQ::from_cols(a1c);
            res.witness.a2 = a2c.empty() ? MatQ(p, 0) : MatQ::from_cols(a2c);
            res.witness.R1 = r1c.empty() ? MatQ(r, 0) : MatQ::from_cols(r1c);
            res.witness.R2 = r2c.empty() ? MatQ(r, 0) : MatQ::from_cols(r2c);
            res.witness.shift = std::move(shift);
            return res;
        }
    }
    res.status = "undecided";
    res.detail = "no coordinate split found";
    return res;
}

}  // namespace

DecompositionResult is_indecomposable_datum(const ClassifierDatum& d) {
    if (!verify_classifier(d).all_pass())
        throw std::invalid_argument("is_indecomposable_datum: malformed datum");
    if (d.r_dim == 1) return decide_r1(d);
    return coordinate_search(d);
}

bool decomposition_witness_check(const ClassifierDatum& d, const DecompositionWitness& w) {
    const int p = d.p(), r = d.r_dim;
    const int s1 = w.a1.cols(), s2 = w.a2.cols(), t1 = w.R1.cols(), t2 = w.R2.cols();
    if (w.a1.rows() != p || w.a2.rows() != p || w.R1.rows() != r || w.R2.rows() != r) return false;
    if (s1 + s2 != p || rank(MatQ::hcat(w.a1, w.a2)) != p) return false;
    if (t1 + t2 != r || rank(MatQ::hcat(w.R1, w.R2)) != r) return false;
    if (!(w.a1.transpose() * d.gram * w.a2).is_zero()) return false;
    if (d.shape == "riemann-B" && (s1 + t1 == 0 || s2 + t2 == 0)) return false;
    if (d.shape != "riemann-B" && s2 + t2 == 0) return false;

    const auto bvec = [&](const VecQ& x, const VecQ& y) {
        VecQ v(r);
        for (int t = 0; t < r; ++t) v[t] = dot(x, d.B[t] * y);
        return v;
    };
    for (int i = 0; i < s1; ++i)
        for (int j = 0; j < s2; ++j)
            if (!vec_is_zero(bvec(w.a1.col_vec(i), w.a2.col_vec(j)))) return false;
    for (int i = 0; i < s1; ++i)
        for (int j = i; j < s1; ++j)
            if (!span_contains(w.R1, MatQ::col(bvec(w.a1.col_vec(i), w.a1.col_vec(j)))))
                return false;
    for (int i = 0; i < s2; ++i)
        for (int j = i; j < s2; ++j)
            if (!span_contains(w.R2, MatQ::col(bvec(w.a2.col_vec(i), w.a2.col_vec(j)))))
                return false;

    if (d.shape == "lorentz-rBeta") {
        if (!span_contains(w.R1, MatQ::col(d.r0))) return false;
        if (static_cast<int>(w.shift.size()) != p || !span_contains(w.a2, MatQ::col(w.shift)))
            return false;
        const auto gi = inverse(d.gram);
        MatQ rem = d.eta;
        for (int t = 0; t < r; ++t) {
            const VecQ sharp = *gi * (d.B[t] * w.shift);
            for (int i = 0; i < p; ++i) rem(i, t) -= w.shift[i] * d.r0[t] + sharp[i];
        }
        for (int t = 0; t < r; ++t)
            if (!span_contains(w.a1, MatQ::col(rem.col_vec(t)))) return false;
        for (int i = 0; i < p; ++i)
            if (!span_contains(w.R1, MatQ::col(rem.row_vec(i)))) return false;
    }
    if (d.shape == "lorentz-B1B2B") {
        const auto rows_in = [&](const std::vector<MatQ>& mats, const MatQ& span) {
            if (mats.empty()) return true;
            for (int i = 0; i < mats[0].rows(); ++i)
                for (int j = 0; j < mats[0].cols(); ++j) {
                    VecQ v(r);
                    for (int t = 0; t < r; ++t) v[t] = mats[t](i, j);
                    if (!span_contains(span, MatQ::col(v))) return false;
                }
            return true;
        };
        if (!rows_in(d.B1, w.R1) || !rows_in(d.B2, w.R1)) return false;
    }
    return true;
}

namespace {

// phi with <phi(D x), y> = b(x, y) on the minus span, extended by
// commutation with D across the plus span, zero elsewhere.
MatQ sym_to_so(const MatQ& b, const std::vector<int>& minus_idx, const std::vector<int>& plus_idx,
               const MatQ& D, const MatQ& gram) {
    const int n = D.rows(), p = static_cast<int>(minus_idx.size());
    MatQ gm(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) gm(i, j) = gram(minus_idx[i], minus_idx[j]);
    const auto gmi = inverse(gm);
    if (!gmi) throw std::invalid_argument("sym_to_so: degenerate slot gram");
    const MatQ c = *gmi * b;
    MatQ dm(n, p);
    for (int i = 0; i < p; ++i) dm.set_col(i, D.col_vec(minus_idx[i]));
    MatQ phi(n, n);
    for (int i = 0; i < p; ++i) {
        VecQ v(n, Rat(0));
        for (int t = 0; t < p; ++t) v[minus_idx[t]] = c(t, i);
        const VecQ w = D * v;
        for (int s = 0; s < n; ++s) phi(s, minus_idx[i]) = -w[s];
    }
    for (int q : plus_idx) {
        const auto beta = solve_vec(dm, basis_vec(n, q));
        if (!beta) throw std::invalid_argument("sym_to_so: plus index outside the D image");
        VecQ img(n, Rat(0));
        for (int i = 0; i < p; ++i)
            for (int t = 0; t < p; ++t) img[minus_idx[t]] += (*beta)[i] * c(t, i);
        for (int s = 0; s < n; ++s) phi(s, q) = img[s];
    }
    return phi;
}

}  // namespace

CentralExtensionDatum classifier_to_omega(const CatalogDescriptor& d,
                                          const ClassifierDatum& datum) {
    if (d.case_id != "1" && d.case_id != "2a" && d.case_id != "2b" && d.case_id != "3")
        throw UnsupportedError("classifier_to_omega: family " + d.case_id + " not realised");
    if (!verify_classifier(datum).all_pass())
        throw std::invalid_argument("classifier_to_omega: malformed datum");

    const CatalogData cd = catalog(d);
    const Algebra g = build_extension(cd.l, cd.a, cd.z);
    const int nl = cd.l.dim, na = cd.a.dim, n = g.dim, r = datum.r_dim;

    std::vector<int> minus_idx, plus_idx;
    if (d.case_id == "1") {
        for (int i = 0; i < na; ++i)
            (cd.a.theta(i, i) == -1 ? minus_idx : plus_idx).push_back(i);
    } else {
        for (int i = 0; i < na; ++i) {
            const std::string& lab = cd.a.labels[i];
            if (lab.rfind("a0_", 0) != 0) continue;
            (lab.back() == 'm' ? minus_idx : plus_idx).push_back(i);
        }
    }
    const int p = static_cast<int>(minus_idx.size());
    const std::string want = d.case_id == "1" ? "riemann-B" : "lorentz-rBeta";
    if (datum.shape != want || datum.p() != p)
        throw std::invalid_argument("classifier_to_omega: datum does not match the family");
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (datum.gram(i, j) != cd.a.gram(minus_idx[i], minus_idx[j]))
                throw std::invalid_argument("classifier_to_omega: slot gram mismatch");

    AltForm omega(2, n, r);
    for (int t = 0; t < r; ++t) {
        MatQ phi(n, n);
        if (d.case_id == "1") {
            phi = sym_to_so(datum.B[t], minus_idx, plus_idx, cd.a.D, cd.a.gram);
        } else {
            const Rat mu = datum.r0[t];
            const MatQ s = mu * cd.l.D;
            MatQ ublk = Rat(-1) * sym_to_so(datum.B[t], minus_idx, plus_idx, cd.a.D, cd.a.gram);
            if (d.case_id == "3") {
                ublk(0, 1) += mu;  // U(A2) += mu A1
                ublk(1, 0) -= mu;  // U(A1) -= mu A2
            }
            VecQ ahat(na, Rat(0));
            for (int i = 0; i < p; ++i) ahat[minus_idx[i]] = datum.eta(i, t);
            MatQ tblk(na, nl);
            tblk.set_col(0, ahat);
            tblk.set_col(1, cd.a.D * ahat);
            const MatQ tg = tblk.transpose() * cd.a.gram;
            const int off = nl + na;
            for (int w = 0; w < nl; ++w) {
                for (int u = 0; u < nl; ++u) {
                    phi(w, u) = -s(u, w);
                    phi(off + w, off + u) = s(w, u);
                }
                for (int u = 0; u < na; ++u) {
                    phi(w, nl + u) = -tg(w, u);
                    phi(nl + u, off + w) = tblk(u, w);
                }
            }
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < na; ++j) phi(nl + i, nl + j) = -ublk(i, j);
        }
        const AltForm base = derivation_to_form(phi, g.gram);
        for (const auto& [idx, v] : base.entries()) {
            VecQ val = omega.value(idx);
            val[t] += v[0];
            omega.set(idx, val);
        }
    }

    CentralExtensionDatum out;
    out.base = g;
    out.r_dim = r;
    out.omega = std::move(omega);
    return out;
}

}  // namespace exsym
