#include "exsym/algebra.hpp"

#include "exsym/grading.hpp"

#include <algorithm>

namespace exsym {

void BracketTensor::set(int i, int j, const VecQ& value) {
    if (i == j) throw std::invalid_argument("BracketTensor::set: i == j");
    if (static_cast<int>(value.size()) != n_)
        throw std::invalid_argument("BracketTensor::set: bad value length");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    std::vector<BracketTerm> terms;
    for (int k = 0; k < n_; ++k)
        if (value[k] != 0) terms.push_back({k, flip ? -value[k] : value[k]});
    if (terms.empty())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(terms);
}

void BracketTensor::add(int i, int j, int k, const Rat& c) {
    VecQ v = of(i, j);
    v[k] += c;
    set(i, j, v);
}

VecQ BracketTensor::of(int i, int j) const {
    VecQ v(n_);
    if (i == j) return v;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return v;
    for (const auto& t : it->second) v[t.k] = flip ? -t.c : t.c;
    return v;
}

VecQ BracketTensor::apply(const VecQ& x, const VecQ& y) const {
    VecQ out(n_);
    for (const auto& [ij, terms] : entries_) {
        auto [i, j] = ij;
        Rat coeff = x[i] * y[j] - x[j] * y[i];
        if (coeff == 0) continue;
        for (const auto& t : terms) out[t.k] += coeff * t.c;
    }
    return out;
}

MatQ BracketTensor::ad(const VecQ& x) const {
    MatQ m(n_, n_);
    for (const auto& [ij, terms] : entries_) {
        auto [i, j] = ij;
        // [x, e_j] picks up x_i * c, [x, e_i] picks up -x_j * c
        if (x[i] != 0)
            for (const auto& t : terms) m(t.k, j) += x[i] * t.c;
        if (x[j] != 0)
            for (const auto& t : terms) m(t.k, i) -= x[j] * t.c;
    }
    return m;
}

MatQ BracketTensor::ad_basis(int i) const {
    VecQ x(n_);
    x[i] = 1;
    return ad(x);
}

VecQ jacobi_defect(const BracketTensor& b, int i, int j, int k) {
    VecQ ek(b.dim()), ei(b.dim()), ej(b.dim());
    ei[i] = 1;
    ej[j] = 1;
    ek[k] = 1;
    VecQ d = b.apply(b.of(i, j), ek);
    d = d + b.apply(b.of(j, k), ei);
    d = d + b.apply(b.of(k, i), ej);
    return d;
}

bool is_h_graded(const Algebra& g) { return (g.D * g.D * g.D) == -g.D; }

Report verify_algebra(const Algebra& g) {
    Report rep;
    const int n = g.dim;
    bool shape_ok = static_cast<int>(g.labels.size()) == n && g.bracket.dim() == n &&
                    g.gram.rows() == n && g.gram.cols() == n && g.D.rows() == n &&
                    g.D.cols() == n && g.theta.rows() == n && g.theta.cols() == n;
    rep.add("shape", shape_ok);
    if (!shape_ok) return rep;

    rep.add("gram-symmetric", g.gram.is_symmetric());
    if (g.weak)
        rep.add_status("gram-nondegenerate", "skip", "weak: gram may degenerate");
    else
        rep.add("gram-nondegenerate", rank(g.gram) == n);

    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int k = j + 1; k < n && ok; ++k) {
                    VecQ d = jacobi_defect(g.bracket, i, j, k);
                    if (!vec_is_zero(d)) {
                        ok = false;
                        detail = "defect on (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")";
                    }
                }
        rep.add("jacobi", ok, detail);
    }

    {
        // <[x,y],z> + <y,[x,z]> = 0  <=>  ad(x)^T gram + gram ad(x) = 0
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            MatQ a = g.bracket.ad_basis(i);
            ok = (a.transpose() * g.gram + g.gram * a).is_zero();
        }
        rep.add("gram-invariance", ok);
    }

    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                VecQ ei(n), ej(n);
                ei[i] = 1;
                ej[j] = 1;
                VecQ lhs = g.D * g.bracket.of(i, j);
                VecQ rhs = g.bracket.apply(g.D.col_vec(i), ej) +
                           g.bracket.apply(ei, g.D.col_vec(j));
                ok = (lhs == rhs);
            }
        rep.add("D-derivation", ok);
    }
    rep.add("D-antisymmetric", (g.D.transpose() * g.gram + g.gram * g.D).is_zero());

    rep.add("theta-involution", g.theta * g.theta == MatQ::identity(n));
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                VecQ lhs = g.theta * g.bracket.of(i, j);
                VecQ rhs = g.bracket.apply(g.theta.col_vec(i), g.theta.col_vec(j));
                ok = (lhs == rhs);
            }
        rep.add("theta-automorphism", ok);
    }
    rep.add("theta-isometry", g.theta.transpose() * g.gram * g.theta == g.gram);
    rep.add("D-theta-anticommute", (g.D * g.theta + g.theta * g.D).is_zero());
    rep.add("h-graded", is_h_graded(g));
    return rep;
}

Algebra direct_sum(const Algebra& g1, const Algebra& g2) {
    if (g1.weak != g2.weak) throw std::invalid_argument("direct_sum: weak flags differ");
    Algebra g;
    g.dim = g1.dim + g2.dim;
    g.labels = g1.labels;
    g.labels.insert(g.labels.end(), g2.labels.begin(), g2.labels.end());
    g.weak = g1.weak;
    g.gram = MatQ::block_diag(g1.gram, g2.gram);
    g.D = MatQ::block_diag(g1.D, g2.D);
    g.theta = MatQ::block_diag(g1.theta, g2.theta);
    g.bracket = BracketTensor(g.dim);
    g1.bracket.for_each([&](int i, int j, const std::vector<BracketTerm>& t) {
        for (const auto& e : t) g.bracket.add(i, j, e.k, e.c);
    });
    g2.bracket.for_each([&](int i, int j, const std::vector<BracketTerm>& t) {
        for (const auto& e : t) g.bracket.add(g1.dim + i, g1.dim + j, g1.dim + e.k, e.c);
    });
    return g;
}

bool split_check(const Algebra& g, const std::vector<int>& first) {
    std::vector<bool> in_first(g.dim, false);
    for (int i : first) {
        if (i < 0 || i >= g.dim || in_first[i]) return false;
        in_first[i] = true;
    }
    std::vector<int> second;
    for (int i = 0; i < g.dim; ++i)
        if (!in_first[i]) second.push_back(i);

    auto supported_in = [&](const VecQ& v, bool first_block) {
        for (int i = 0; i < g.dim; ++i)
            if (v[i] != 0 && in_first[i] != first_block) return false;
        return true;
    };
    // cross brackets vanish, blocks are subalgebras
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            VecQ v = g.bracket.of(i, j);
            if (in_first[i] != in_first[j]) {
                if (!vec_is_zero(v)) return false;
            } else if (!supported_in(v, in_first[i])) {
                return false;
            }
        }
    // orthogonality and Phi-invariance of both blocks
    for (int i : first)
        for (int j : second)
            if (g.gram(i, j) != 0) return false;
    for (int i = 0; i < g.dim; ++i) {
        if (!supported_in(g.D.col_vec(i), in_first[i])) return false;
        if (!supported_in(g.theta.col_vec(i), in_first[i])) return false;
    }
    return true;
}

}  // namespace exsym
