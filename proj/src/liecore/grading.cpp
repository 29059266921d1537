#include "exsym/grading.hpp"

namespace exsym {

Grading grade(const Algebra& g) {
    if (!is_h_graded(g)) throw std::domain_error("grade: D^3 != -D (not h-graded)");
    const int n = g.dim;
    MatQ id = MatQ::identity(n);
    MatQ d2 = g.D * g.D;
    MatQ p_tau_plus = id + d2;   // projector onto g^+ along g^-
    MatQ p_tau_minus = -d2;
    MatQ half = ratio(1, 2) * id;
    MatQ q_plus = half + ratio(1, 2) * g.theta;
    MatQ q_minus = half - ratio(1, 2) * g.theta;

    Grading gr;
    gr.tau = id + Rat(2) * d2;
    gr.pp = column_space(q_plus * p_tau_plus);
    gr.pm = column_space(q_plus * p_tau_minus);
    gr.mp = column_space(q_minus * p_tau_plus);
    gr.mm = column_space(q_minus * p_tau_minus);

    if (gr.pp.cols() + gr.pm.cols() + gr.mp.cols() + gr.mm.cols() != n)
        throw std::domain_error("grade: intersection dimensions do not sum to dim");
    // (ED): D vanishes on g^+, maps g_+^- onto g_-^-, squares to -Id on g^-.
    if (!(g.D * gr.pp).is_zero() || !(g.D * gr.mp).is_zero())
        throw std::domain_error("grade: D does not vanish on g^+");
    if (!span_equal(column_space(g.D * gr.pm), gr.mm))
        throw std::domain_error("grade: D(g_+^-) != g_-^-");
    MatQ tm = gr.tau_minus();
    if (!(d2 * tm + tm).is_zero())
        throw std::domain_error("grade: D^2 != -Id on g^-");
    return gr;
}

}  // namespace exsym
