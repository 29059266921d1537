#include "exsym/central.hpp"

#include "exsym/grading.hpp"
#include "exsym/structure.hpp"

#include <stdexcept>

namespace exsym {

Report verify_central_datum(const CentralExtensionDatum& d) {
    Report rep;
    const Algebra& g = d.base;
    const bool shape = d.r_dim >= 1 && d.omega.arity() == 2 && d.omega.dim() == g.dim &&
                       d.omega.vdim() == d.r_dim;
    rep.add("shape", shape);
    if (!shape) return rep;
    rep.add("omega-closed", ce_differential(d.omega, g.bracket, {}).is_zero());
    rep.add("omega-theta-negated",
            form_theta_invariant(d.omega, g.theta, MatQ::identity(d.r_dim), -1));
    rep.add("omega-D-killed", form_D_invariant(d.omega, g.D, MatQ(d.r_dim, d.r_dim)));
    return rep;
}

bool omega_kernel_onto(const Algebra& g, const AltForm& omega) {
    const int r = omega.vdim();
    const Grading gr = grade(g);
    const int p = gr.mm.cols(), q = gr.pm.cols();
    MatQ pairing(g.dim, p * q);
    MatQ values(r, p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            const VecQ x = gr.mm.col_vec(i), y = gr.pm.col_vec(j);
            const VecQ br = g.bracket.apply(x, y);
            const VecQ om = omega.eval({x, y});
            for (int t = 0; t < g.dim; ++t) pairing(t, i * q + j) = br[t];
            for (int t = 0; t < r; ++t) values(t, i * q + j) = om[t];
        }
    return rank(values * nullspace(pairing)) == r;
}

CentralExtension central_extension(const CentralExtensionDatum& d) {
    Report pre = verify_central_datum(d);
    if (!pre.all_pass()) {
        for (const auto& c : pre.checks)
            if (c.status != "pass")
                throw std::invalid_argument("central_extension: datum fails " + c.name);
    }
    const Algebra& g = d.base;
    const int r = d.r_dim, n = g.dim;

    Algebra ext;
    ext.dim = r + n;
    ext.weak = true;
    for (int t = 0; t < r; ++t) ext.labels.push_back("r" + std::to_string(t + 1));
    ext.labels.insert(ext.labels.end(), g.labels.begin(), g.labels.end());

    ext.bracket = BracketTensor(ext.dim);
    g.bracket.for_each([&](int i, int j, const std::vector<BracketTerm>&) {
        const VecQ c = g.bracket.of(i, j);
        VecQ v(ext.dim, Rat(0));
        for (int t = 0; t < n; ++t) v[r + t] = c[t];
        ext.bracket.set(r + i, r + j, v);
    });
    for (const auto& [idx, val] : d.omega.entries()) {
        VecQ v = ext.bracket.of(r + idx[0], r + idx[1]);
        for (int t = 0; t < r; ++t) v[t] += val[t];
        ext.bracket.set(r + idx[0], r + idx[1], v);
    }

    ext.gram = MatQ::block_diag(MatQ(r, r), g.gram);
    ext.D = MatQ::block_diag(MatQ(r, r), g.D);
    ext.theta = MatQ::block_diag(Rat(-1) * MatQ::identity(r), g.theta);

    CentralExtension out;
    out.ext = std::move(ext);
    const bool base_full = is_full(g).holds;
    const bool onto = omega_kernel_onto(g, d.omega);
    out.full = base_full && onto;
    out.detail = std::string("base ") + (base_full ? "full" : "not full") + ", kernel image " +
                 (onto ? "onto" : "proper");
    return out;
}

}  // namespace exsym
