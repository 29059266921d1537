#include "exsym/extension.hpp"

#include <stdexcept>

namespace exsym {

Algebra build_extension_unchecked(const LiePair& l, const ModuleData& a, const QuadCocycle& z) {
    const int nl = l.dim, na = a.dim, n = 2 * nl + na;
    // index maps: dual i -> i, a j -> nl + j, l i -> nl + na + i
    auto du = [nl](int i) { return i; };
    auto av = [nl](int j) { return nl + j; };
    auto lv = [nl, na](int i) { return nl + na + i; };

    Algebra g;
    g.dim = n;
    for (const auto& s : l.labels) g.labels.push_back("sigma_" + s);
    for (const auto& s : a.labels) g.labels.push_back(s);
    for (const auto& s : l.labels) g.labels.push_back(s);

    g.bracket = BracketTensor(n);
    // [L_i, L_j] = gamma(L_i,L_j,.) + alpha(L_i,L_j) + [L_i,L_j]_l
    for (int i = 0; i < nl; ++i)
        for (int j = i + 1; j < nl; ++j) {
            for (int k = 0; k < nl; ++k) {
                Rat c = z.gamma.scalar({i, j, k});
                if (c != 0) g.bracket.add(lv(i), lv(j), du(k), c);
            }
            VecQ al = z.alpha.value({i, j});
            for (int k = 0; k < na; ++k)
                if (al[k] != 0) g.bracket.add(lv(i), lv(j), av(k), al[k]);
            VecQ lb = l.bracket.of(i, j);
            for (int k = 0; k < nl; ++k)
                if (lb[k] != 0) g.bracket.add(lv(i), lv(j), lv(k), lb[k]);
        }
    // [L_i, A_j] = -<A_j, alpha(L_i, .)> + rho(L_i) A_j
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < na; ++j) {
            for (int k = 0; k < nl; ++k) {
                Rat c = -dot(a.gram.col_vec(j), z.alpha.value({i, k}));
                if (c != 0) g.bracket.add(lv(i), av(j), du(k), c);
            }
            VecQ r = a.rho[i].col_vec(j);
            for (int k = 0; k < na; ++k)
                if (r[k] != 0) g.bracket.add(lv(i), av(j), av(k), r[k]);
        }
    // [A_i, A_j] = <rho(.) A_i, A_j>
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j)
            for (int k = 0; k < nl; ++k) {
                Rat c = dot(a.gram.col_vec(j), a.rho[k].col_vec(i));
                if (c != 0) g.bracket.add(av(i), av(j), du(k), c);
            }
    // [L_i, Z_j] = ad*(L_i) Z_j, value on L_k: -Z_j([L_i, L_k])
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            for (int k = 0; k < nl; ++k) {
                Rat c = -l.bracket.of(i, k)[j];
                if (c != 0) g.bracket.add(lv(i), du(j), du(k), c);
            }

    g.gram = MatQ(n, n);
    for (int i = 0; i < nl; ++i) {
        g.gram(du(i), lv(i)) = 1;
        g.gram(lv(i), du(i)) = 1;
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) g.gram(av(i), av(j)) = a.gram(i, j);

    g.D = MatQ(n, n);
    g.theta = MatQ(n, n);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            g.D(du(i), du(j)) = -l.D(j, i);
            g.theta(du(i), du(j)) = l.theta(j, i);
            g.D(lv(i), lv(j)) = l.D(i, j);
            g.theta(lv(i), lv(j)) = l.theta(i, j);
        }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            g.D(av(i), av(j)) = a.D(i, j);
            g.theta(av(i), av(j)) = a.theta(i, j);
        }
    return g;
}

namespace {

void require_pass(const Report& rep, const std::string& what) {
    if (rep.all_pass()) return;
    for (const auto& c : rep.checks)
        if (c.status != "pass")
            throw std::invalid_argument("build_extension: " + what + " check failed: " + c.name);
}

}  // namespace

Algebra build_extension(const LiePair& l, const ModuleData& a, const QuadCocycle& z) {
    require_pass(verify_pair(l), "pair");
    require_pass(verify_module(l, a), "module");
    require_pass(is_cocycle(z, l, a), "cocycle");
    return build_extension_unchecked(l, a, z);
}

}  // namespace exsym
