#include "exsym/cochain.hpp"

#include <algorithm>

namespace exsym {

namespace {

// sorts idx in place, returns the permutation sign, or 0 on a repeat
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

// signed minor det(args[j][combo[i]]) over permutations, k <= 4
Rat alt_minor(const std::vector<VecQ>& args, const std::vector<int>& combo) {
    const int k = static_cast<int>(combo.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Rat det = 0;
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Rat term = sign;
        for (int i = 0; i < k; ++i) term *= args[perm[i]][combo[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

VecQ AltForm::value(std::vector<int> idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return VecQ(vdim_);
    auto it = entries_.find(idx);
    if (it == entries_.end()) return VecQ(vdim_);
    return sign == 1 ? it->second : Rat(-1) * it->second;
}

Rat AltForm::scalar(const std::vector<int>& idx) const { return value(idx)[0]; }

void AltForm::set(std::vector<int> idx, VecQ v) {
    int sign = sort_sign(idx);
    if (sign == 0) return;
    if (sign == -1) v = Rat(-1) * v;
    if (vec_is_zero(v))
        entries_.erase(idx);
    else
        entries_[idx] = std::move(v);
}

void AltForm::add(std::vector<int> idx, VecQ v) {
    int sign = sort_sign(idx);
    if (sign == 0) return;
    if (sign == -1) v = Rat(-1) * v;
    auto it = entries_.find(idx);
    if (it == entries_.end()) {
        if (!vec_is_zero(v)) entries_[idx] = std::move(v);
        return;
    }
    it->second = it->second + v;
    if (vec_is_zero(it->second)) entries_.erase(it);
}

VecQ AltForm::eval(const std::vector<VecQ>& args) const {
    VecQ out(vdim_);
    for (const auto& [combo, v] : entries_) {
        Rat m = alt_minor(args, combo);
        if (m != 0) out = out + m * v;
    }
    return out;
}

VecQ AltForm::eval_mixed(const VecQ& first, const std::vector<int>& rest) const {
    VecQ out(vdim_);
    std::vector<int> idx(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), idx.begin() + 1);
    for (int m = 0; m < dim_; ++m) {
        if (first[m] == 0) continue;
        idx[0] = m;
        out = out + first[m] * value(idx);
    }
    return out;
}

bool AltForm::is_zero() const { return entries_.empty(); }

AltForm AltForm::operator+(const AltForm& o) const {
    AltForm r = *this;
    for (const auto& [combo, v] : o.entries_) r.add(combo, v);
    return r;
}

AltForm AltForm::operator-(const AltForm& o) const {
    AltForm r = *this;
    for (const auto& [combo, v] : o.entries_) r.add(combo, Rat(-1) * v);
    return r;
}

AltForm AltForm::scaled(const Rat& c) const {
    AltForm r(arity_, dim_, vdim_);
    if (c == 0) return r;
    for (const auto& [combo, v] : entries_) r.entries_[combo] = c * v;
    return r;
}

std::vector<std::vector<int>> AltForm::combos(int dim, int arity) {
    std::vector<std::vector<int>> out;
    if (arity == 0 || arity > dim) return out;
    std::vector<int> cur(arity);
    for (int i = 0; i < arity; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = arity - 1;
        while (i >= 0 && cur[i] == dim - arity + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < arity; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

AltForm ce_differential(const AltForm& w, const BracketTensor& lb, const std::vector<MatQ>& rho) {
    const int k = w.arity();
    AltForm d(k + 1, w.dim(), w.vdim());
    for (const auto& combo : AltForm::combos(w.dim(), k + 1)) {
        VecQ val(w.vdim());
        if (!rho.empty()) {
            for (int i = 0; i <= k; ++i) {
                std::vector<int> rest;
                for (int t = 0; t <= k; ++t)
                    if (t != i) rest.push_back(combo[t]);
                VecQ term = rho[combo[i]] * w.value(rest);
                val = val + (i % 2 == 0 ? term : Rat(-1) * term);
            }
        }
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                std::vector<int> rest;
                for (int t = 0; t <= k; ++t)
                    if (t != i && t != j) rest.push_back(combo[t]);
                VecQ term = w.eval_mixed(lb.of(combo[i], combo[j]), rest);
                val = val + ((i + j) % 2 == 0 ? term : Rat(-1) * term);
            }
        d.set(combo, val);
    }
    return d;
}

AltForm one_form(const MatQ& tau) {
    AltForm w(1, tau.cols(), tau.rows());
    for (int i = 0; i < tau.cols(); ++i) w.set({i}, tau.col_vec(i));
    return w;
}

AltForm wedge_inner(const MatQ& tau1, const MatQ& tau2, const MatQ& gram) {
    const int n = tau1.cols();
    MatQ p = tau1.transpose() * gram * tau2;
    AltForm w(2, n, 1);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) w.set({x, y}, VecQ{p(x, y) - p(y, x)});
    return w;
}

AltForm wedge_inner(const AltForm& beta, const MatQ& tau, const MatQ& gram) {
    const int n = beta.dim();
    AltForm w(3, n, 1);
    for (const auto& combo : AltForm::combos(n, 3)) {
        int x = combo[0], y = combo[1], z = combo[2];
        Rat s = dot(beta.value({x, y}), gram * tau.col_vec(z)) +
                dot(beta.value({y, z}), gram * tau.col_vec(x)) +
                dot(beta.value({z, x}), gram * tau.col_vec(y));
        w.set(combo, VecQ{s});
    }
    return w;
}

AltForm wedge_inner(const AltForm& alpha, const AltForm& beta, const MatQ& gram) {
    const int n = alpha.dim();
    AltForm w(4, n, 1);
    auto ip = [&](const VecQ& u, const VecQ& v) { return dot(u, gram * v); };
    for (const auto& c : AltForm::combos(n, 4)) {
        // alternating sum over (2,2)-shuffles of (c0,c1,c2,c3)
        Rat s = ip(alpha.value({c[0], c[1]}), beta.value({c[2], c[3]})) -
                ip(alpha.value({c[0], c[2]}), beta.value({c[1], c[3]})) +
                ip(alpha.value({c[0], c[3]}), beta.value({c[1], c[2]})) +
                ip(alpha.value({c[2], c[3]}), beta.value({c[0], c[1]})) -
                ip(alpha.value({c[1], c[3]}), beta.value({c[0], c[2]})) +
                ip(alpha.value({c[1], c[2]}), beta.value({c[0], c[3]}));
        w.set(c, VecQ{s});
    }
    return w;
}

bool form_D_invariant(const AltForm& w, const MatQ& D_dom, const MatQ& D_val) {
    const int k = w.arity();
    for (const auto& combo : AltForm::combos(w.dim(), k)) {
        VecQ lhs(w.vdim());
        for (int i = 0; i < k; ++i) {
            std::vector<int> idx = combo;
            const VecQ dcol = D_dom.col_vec(combo[i]);
            for (int m = 0; m < w.dim(); ++m) {
                if (dcol[m] == 0) continue;
                idx[i] = m;
                lhs = lhs + dcol[m] * w.value(idx);
            }
            idx[i] = combo[i];
        }
        if (lhs != D_val * w.value(combo)) return false;
    }
    return true;
}

bool form_theta_invariant(const AltForm& w, const MatQ& th_dom, const MatQ& th_val, int sign) {
    const int k = w.arity();
    for (const auto& combo : AltForm::combos(w.dim(), k)) {
        std::vector<VecQ> args;
        for (int i = 0; i < k; ++i) args.push_back(th_dom.col_vec(combo[i]));
        VecQ lhs = th_val * w.eval(args);
        VecQ rhs = Rat(sign) * w.value(combo);
        if (lhs != rhs) return false;
    }
    return true;
}

AltForm pullback(const AltForm& w, const MatQ& S) {
    AltForm r(w.arity(), S.cols(), w.vdim());
    for (const auto& combo : AltForm::combos(S.cols(), w.arity())) {
        std::vector<VecQ> args;
        for (int i : combo) args.push_back(S.col_vec(i));
        r.set(combo, w.eval(args));
    }
    return r;
}

AltForm postcompose(const AltForm& w, const MatQ& U) {
    AltForm r(w.arity(), w.dim(), U.rows());
    for (const auto& [combo, v] : w.entries()) r.set(combo, U * v);
    return r;
}

}  // namespace exsym
