#include <algorithm>
#include <cmath>
#include <map>

#include "exsym/geom.hpp"

namespace exsym {

namespace {

int index_of(const Algebra& g, const std::string& label) {
    const auto it = std::find(g.labels.begin(), g.labels.end(), label);
    if (it == g.labels.end())
        throw std::logic_error("case_frame: missing basis label " + label);
    return static_cast<int>(it - g.labels.begin());
}

VecD unit(int dim, int i) {
    VecD v = VecD::Zero(dim);
    v(i) = 1.0;
    return v;
}

}  // namespace

CaseFrame case_frame(const CatalogDescriptor& d) {
    if (d.a0 != 0)
        throw std::invalid_argument("case_frame: slot pairs have no printed parametrization");

    CaseFrame cf;
    cf.desc = d;
    const CatalogData cd = catalog(d);
    cf.g = build_extension(cd.l, cd.a, cd.z);
    cf.minus = minus_indices(cf.g);

    std::map<int, int> mpos;  // ambient index -> position in the minus coordinates
    for (std::size_t i = 0; i < cf.minus.size(); ++i) mpos[cf.minus[i]] = static_cast<int>(i);
    const int nm = static_cast<int>(cf.minus.size());
    const Algebra& g = cf.g;
    auto mcol = [&](const std::vector<std::pair<std::string, double>>& combo) {
        VecD v = VecD::Zero(nm);
        for (const auto& [label, coeff] : combo) v(mpos.at(index_of(g, label))) = coeff;
        return v;
    };

    int sign2 = 1;
    if (d.case_id == "1")
        cf.item = 1;
    else if (d.case_id == "2a" || d.case_id == "2b") {
        cf.item = 2;
        sign2 = d.case_id == "2a" ? -1 : 1;
    } else if (d.case_id == "3")
        cf.item = 3;
    else
        cf.item = d.case_id == "4" ? 4 : 5;

    cf.closed = closed_form_sampler(cf.item, d.k, d.l, d.m, d.c.get_d(), sign2);
    if (cf.closed.ambient_dim != nm)
        throw std::logic_error("case_frame: printed ambient dimension mismatch");

    MatD frame(nm, nm);
    const double rt2 = std::sqrt(2.0);
    const double cb = std::cbrt(2.0);
    const double rt8 = std::sqrt(8.0);
    if (cf.item == 1) {
        frame.col(0) = mcol({{"A2", -1.0}});
        const int a1 = index_of(g, "A1");
        cf.word = [a1](const VecD& p) {
            return std::vector<WordFactor>{{{{a1, p(0)}}}};
        };
    } else if (cf.item == 2) {
        frame.col(0) = mcol({{"sigma_Y", -1.0 / rt2}});
        frame.col(1) = mcol({{"A0", -1.0}});
        frame.col(2) = mcol({{"Y", -rt2}});
        const int sx = index_of(g, "sigma_X"), x = index_of(g, "X");
        const double eps = sign2;
        cf.word = [sx, x, rt2, eps](const VecD& p) {
            const double r = p(0), s = p(1);
            const double u = rt2 * s;
            const double w = (r + (2.0 * eps / 3.0) * s * s * s) / rt2;
            return std::vector<WordFactor>{{{{sx, w}}}, {{{x, u}}}};
        };
    } else if (cf.item == 3) {
        frame.col(0) = mcol({{"sigma_Y", 1.0 / cb}});
        frame.col(1) = mcol({{"sigma_Z", -cb}});
        frame.col(2) = mcol({{"A1", 1.0}});
        frame.col(3) = mcol({{"Y", cb}});
        frame.col(4) = mcol({{"Z", -cb * cb / 2.0}});
        const int sx = index_of(g, "sigma_X"), a2 = index_of(g, "A2"), x = index_of(g, "X");
        cf.word = [sx, a2, x, cb](const VecD& p) {
            const double r = p(0), s = p(1), t = p(2);
            const double u = -cb * r;
            const double y = t - r * r * r / 3.0;
            const double xz = y * u * u / 2.0 - std::pow(u, 5) / 120.0 - s / cb;
            return std::vector<WordFactor>{{{{x, u}}}, {{{sx, xz}, {a2, y}}}};
        };
    } else {
        const int k = d.k, l = d.l, m = d.m;
        frame.col(0) = mcol({{"sigma_X", 1.0}});
        frame.col(1) = mcol({{"sigma_Y", 1.0}});
        for (int i = 0; i < k; ++i)
            frame.col(2 + i) = mcol({{"a3_" + std::to_string(i + 1) + "_H", 1.0 / rt8}});
        for (int i = 0; i < l; ++i) {
            const std::string tag = "a3h_" + std::to_string(i + 1);
            frame.col(2 + k + i) = mcol({{tag + "_Y", 1.0 / rt8}});
            frame.col(2 + k + l + i) = mcol({{tag + "_X", 1.0 / rt8}});
        }
        for (int i = 0; i < m; ++i) {
            const std::string tag = "a4_" + std::to_string(i + 1);
            frame.col(2 + k + 2 * l + i) = mcol({{tag + "_a4", 1.0}});
            frame.col(2 + k + 2 * l + m + i) = mcol({{tag + "_a3", 1.0}});
        }
        frame.col(nm - 2) = mcol({{"X", 1.0}});
        frame.col(nm - 1) = mcol({{"Y", 1.0}});

        const int h = index_of(g, "H"), sh = index_of(g, "sigma_H");
        std::vector<int> ai, vi, ui;
        for (int i = 0; i < k; ++i) ai.push_back(index_of(g, "a3_" + std::to_string(i + 1) + "_Y"));
        for (int i = 0; i < l; ++i)
            vi.push_back(index_of(g, "a3h_" + std::to_string(i + 1) + "_H"));
        for (int i = 0; i < m; ++i)
            ui.push_back(index_of(g, "a4_" + std::to_string(i + 1) + "_a2"));
        cf.word = [h, sh, ai, vi, ui, rt8, k, l, m](const VecD& p) {
            WordFactor second{{{sh, p(1)}}};
            for (int i = 0; i < k; ++i) second.terms.emplace_back(ai[i], p(2 + i) / rt8);
            for (int i = 0; i < l; ++i) second.terms.emplace_back(vi[i], p(2 + k + i) / rt8);
            for (int i = 0; i < m; ++i) second.terms.emplace_back(ui[i], p(2 + k + l + i));
            return std::vector<WordFactor>{{{{h, p(0) / 2.0}}}, second};
        };
    }
    cf.frame = frame;

    // gram of the minus part in its own coordinates
    MatD gm(nm, nm);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) gm(i, j) = g.gram(cf.minus[i], cf.minus[j]).get_d();

    // the printed grams square to the identity, so orthonormality inverts the frame
    const MatD finv = cf.closed.gram * frame.transpose() * gm;
    if ((finv * frame - MatD::Identity(nm, nm)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("case_frame: frame is not orthonormal for the printed gram");

    // cache the unit generators needed by the words
    std::map<int, AffineGenerator> units;
    {
        VecD probe = VecD::Zero(cf.closed.param_dim);
        for (const WordFactor& f : cf.word(probe))
            for (const auto& [idx, coeff] : f.terms) {
                (void)coeff;
                if (!units.count(idx)) {
                    VecQ e(g.dim, Rat(0));
                    e[idx] = 1;
                    units.emplace(idx, phi_rep(g, e));
                }
            }
    }

    cf.orbit.tag = cf.closed.tag + "-orbit";
    cf.orbit.ambient_dim = nm;
    cf.orbit.param_dim = cf.closed.param_dim;
    cf.orbit.gram = cf.closed.gram;
    const auto word = cf.word;
    cf.orbit.eval = [units, word, finv, gm, nm](const VecD& p) {
        AffineIsometry acc{MatD::Identity(nm, nm), VecD::Zero(nm), gm};
        for (const WordFactor& f : word(p)) {
            AffineGenerator gen{MatD::Zero(nm, nm), VecD::Zero(nm), gm};
            for (const auto& [idx, coeff] : f.terms) {
                const AffineGenerator& u = units.at(idx);
                gen.linear += coeff * u.linear;
                gen.translation += coeff * u.translation;
            }
            acc = acc.after(exp_affine(gen, 1.0));
        }
        return VecD(finv * acc.translation);
    };
    return cf;
}

}  // namespace exsym
