#include "exsym/structure.hpp"

namespace exsym {

MatQ bracket_span(const BracketTensor& b, const MatQ& vectors) {
    std::vector<VecQ> vals;
    for (int i = 0; i < vectors.cols(); ++i)
        for (int j = i + 1; j < vectors.cols(); ++j)
            vals.push_back(b.apply(vectors.col_vec(i), vectors.col_vec(j)));
    if (vals.empty()) return MatQ(b.dim(), 0);
    return column_space(MatQ::from_cols(vals));
}

MatQ bracket_span(const BracketTensor& b, const MatQ& u, const MatQ& v) {
    std::vector<VecQ> vals;
    for (int i = 0; i < u.cols(); ++i)
        for (int j = 0; j < v.cols(); ++j) vals.push_back(b.apply(u.col_vec(i), v.col_vec(j)));
    if (vals.empty()) return MatQ(b.dim(), 0);
    return column_space(MatQ::from_cols(vals));
}

SpanCertificate is_extrinsic_triple(const Algebra& g) {
    Grading gr = grade(g);
    SpanCertificate c;
    c.actual = bracket_span(g.bracket, gr.pm);
    c.expected = gr.pp;
    c.holds = span_equal(c.actual, c.expected);
    c.detail = "[g_+^-, g_+^-] span dim " + std::to_string(c.actual.cols()) + ", g_+^+ dim " +
               std::to_string(c.expected.cols());
    return c;
}

SpanCertificate is_full(const Algebra& g) {
    Grading gr = grade(g);
    SpanCertificate c;
    c.actual = bracket_span(g.bracket, gr.tau_minus());
    c.expected = gr.tau_plus();
    c.holds = span_equal(c.actual, c.expected);
    c.detail = "[g^-, g^-] span dim " + std::to_string(c.actual.cols()) + ", g^+ dim " +
               std::to_string(c.expected.cols());
    return c;
}

}  // namespace exsym
