#include "exsym/filtration.hpp"

namespace exsym {

MatQ killing_form(const BracketTensor& b) {
    const int n = b.dim();
    std::vector<MatQ> ads;
    ads.reserve(n);
    for (int i = 0; i < n; ++i) ads.push_back(b.ad_basis(i));
    MatQ k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat tr = 0;
            MatQ prod = ads[i] * ads[j];
            for (int t = 0; t < n; ++t) tr += prod(t, t);
            k(i, j) = k(j, i) = tr;
        }
    return k;
}

MatQ bracket_span_of(const BracketTensor& b, const MatQ& u, const MatQ& v) {
    std::vector<VecQ> vals;
    for (int i = 0; i < u.cols(); ++i)
        for (int j = 0; j < v.cols(); ++j) vals.push_back(b.apply(u.col_vec(i), v.col_vec(j)));
    if (vals.empty()) return MatQ(b.dim(), 0);
    return column_space(MatQ::from_cols(vals));
}

MatQ derived_subalgebra(const BracketTensor& b) {
    MatQ id = MatQ::identity(b.dim());
    return bracket_span_of(b, id, id);
}

MatQ center_of(const BracketTensor& b) {
    const int n = b.dim();
    MatQ stacked(0, n);
    for (int i = 0; i < n; ++i) stacked = MatQ::vcat(stacked, b.ad_basis(i));
    return nullspace(stacked);
}

namespace {

std::vector<MatQ> lower_central_series(const BracketTensor& b) {
    std::vector<MatQ> chain;
    MatQ id = MatQ::identity(b.dim());
    MatQ cur = derived_subalgebra(b);
    while (true) {
        chain.push_back(cur);
        if (cur.cols() == 0) break;
        MatQ next = bracket_span_of(b, id, cur);
        if (next.cols() == cur.cols()) break;  // stabilized above zero: not nilpotent
        cur = next;
    }
    return chain;
}

}  // namespace

std::string classify_bracket(const BracketTensor& b) {
    if (b.is_zero()) return "abelian";
    const int n = b.dim();
    MatQ k = killing_form(b);
    if (rank(k) == n) return "semisimple";
    std::vector<MatQ> lcs = lower_central_series(b);
    if (!lcs.empty() && lcs.back().cols() == 0) return "nilpotent";
    // reductive: g = z + [g,g] with [g,g] semisimple and the sum direct
    MatQ z = center_of(b);
    MatQ d = derived_subalgebra(b);
    if (z.cols() + d.cols() == n && span_intersect(z, d).cols() == 0) {
        // Killing form of the derived subalgebra in its own coordinates
        BracketTensor sub(d.cols());
        bool closed = true;
        for (int i = 0; i < d.cols() && closed; ++i)
            for (int j = i + 1; j < d.cols() && closed; ++j) {
                auto coeff = solve(d, MatQ::col(b.apply(d.col_vec(i), d.col_vec(j))));
                if (!coeff)
                    closed = false;
                else
                    sub.set(i, j, coeff->col_vec(0));
            }
        if (closed && rank(killing_form(sub)) == d.cols()) return "reductive";
    }
    throw UnsupportedError("filtration-unsupported: algebra class not recognized");
}

Filtration radical_filtration(const BracketTensor& b) {
    Filtration f;
    f.algebra_class = classify_bracket(b);
    f.terms.push_back(MatQ::identity(b.dim()));
    if (f.algebra_class == "nilpotent") {
        // Nilpotent adjoint action: semisimple quotient module means trivial
        // action, so R_k is the lower central series.
        for (const MatQ& t : lower_central_series(b)) f.terms.push_back(t);
    } else {
        // abelian / semisimple / reductive: adjoint module already semisimple
        f.terms.push_back(MatQ(b.dim(), 0));
    }
    return f;
}

MatQ isotropic_radical_sum(const Algebra& g) {
    Filtration f = radical_filtration(g.bracket);
    MatQ acc(g.dim, 0);
    for (const MatQ& r : f.terms) {
        if (r.cols() == 0) continue;
        MatQ perp = nullspace(r.transpose() * g.gram);
        acc = span_sum(acc, span_intersect(r, perp));
    }
    return acc;
}

}  // namespace exsym
