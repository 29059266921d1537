#include "exsym/matq.hpp"

#include <stdexcept>

namespace exsym {

MatQ::MatQ(std::initializer_list<std::initializer_list<Rat>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(r_) * c_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("MatQ: ragged rows");
        for (const auto& x : row) a_.push_back(x);
    }
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatQ MatQ::diag(const VecQ& d) {
    MatQ m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
}

MatQ MatQ::col(const VecQ& v) {
    MatQ m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = v[i];
    return m;
}

MatQ MatQ::from_cols(const std::vector<VecQ>& cols) {
    if (cols.empty()) return MatQ();
    MatQ m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (cols[j].size() != cols[0].size()) throw std::invalid_argument("from_cols: ragged");
        for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("MatQ+: shape mismatch");
    MatQ m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("MatQ-: shape mismatch");
    MatQ m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

MatQ MatQ::operator-() const {
    MatQ m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (c_ != o.r_) throw std::invalid_argument("MatQ*: shape mismatch");
    MatQ m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o(k, j) == 0) continue;
                m(i, j) += x * o(k, j);
            }
        }
    return m;
}

VecQ MatQ::operator*(const VecQ& v) const {
    if (c_ != static_cast<int>(v.size())) throw std::invalid_argument("MatQ*vec: shape mismatch");
    VecQ out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if ((*this)(i, j) == 0 || v[j] == 0) continue;
            out[i] += (*this)(i, j) * v[j];
        }
    return out;
}

MatQ MatQ::operator*(const Rat& s) const {
    MatQ m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

MatQ MatQ::transpose() const {
    MatQ m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool MatQ::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool MatQ::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool MatQ::is_antisymmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i; j < c_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

MatQ MatQ::block(int i0, int j0, int nr, int nc) const {
    MatQ m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
}

VecQ MatQ::col_vec(int j) const {
    VecQ v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

VecQ MatQ::row_vec(int i) const {
    VecQ v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
}

void MatQ::set_col(int j, const VecQ& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

MatQ MatQ::hcat(const MatQ& a, const MatQ& b) {
    if (a.empty() && a.r_ == 0) return b;
    if (b.empty() && b.r_ == 0) return a;
    if (a.r_ != b.r_) throw std::invalid_argument("hcat: row mismatch");
    MatQ m(a.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i) {
        for (int j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.c_; ++j) m(i, a.c_ + j) = b(i, j);
    }
    return m;
}

MatQ MatQ::vcat(const MatQ& a, const MatQ& b) {
    if (a.empty() && a.c_ == 0) return b;
    if (b.empty() && b.c_ == 0) return a;
    if (a.c_ != b.c_) throw std::invalid_argument("vcat: col mismatch");
    MatQ m(a.r_ + b.r_, a.c_);
    for (int j = 0; j < a.c_; ++j) {
        for (int i = 0; i < a.r_; ++i) m(i, j) = a(i, j);
        for (int i = 0; i < b.r_; ++i) m(a.r_ + i, j) = b(i, j);
    }
    return m;
}

MatQ MatQ::block_diag(const MatQ& a, const MatQ& b) {
    MatQ m(a.r_ + b.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) m(a.r_ + i, a.c_ + j) = b(i, j);
    return m;
}

MatQ operator*(const Rat& s, const MatQ& m) { return m * s; }

VecQ operator+(const VecQ& a, const VecQ& b) {
    VecQ v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
    return v;
}

VecQ operator-(const VecQ& a, const VecQ& b) {
    VecQ v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
    return v;
}

VecQ operator*(const Rat& s, const VecQ& v) {
    VecQ o(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) o[i] = s * v[i];
    return o;
}

bool vec_is_zero(const VecQ& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const VecQ& a, const VecQ& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

MatQ rref(const MatQ& a, std::vector<int>* pivots) {
    MatQ m = a;
    if (pivots) pivots->clear();
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
        Rat inv = 1 / m(lead, col);
        for (int j = col; j < m.cols(); ++j) m(lead, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return m;
}

int rank(const MatQ& a) {
    std::vector<int> piv;
    rref(a, &piv);
    return static_cast<int>(piv.size());
}

std::optional<MatQ> solve(const MatQ& a, const MatQ& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    std::vector<int> piv;
    MatQ r = rref(MatQ::hcat(a, b), &piv);
    int n = a.cols();
    for (int p : piv)
        if (p >= n) return std::nullopt;  // pivot in the rhs block: inconsistent
    MatQ x(n, b.cols());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (int j = 0; j < b.cols(); ++j) x(piv[k], j) = r(static_cast<int>(k), n + j);
    return x;
}

std::optional<VecQ> solve_vec(const MatQ& a, const VecQ& b) {
    auto x = solve(a, MatQ::col(b));
    if (!x) return std::nullopt;
    return x->col_vec(0);
}

MatQ nullspace(const MatQ& a) {
    std::vector<int> piv;
    MatQ r = rref(a, &piv);
    int n = a.cols();
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<VecQ> cols;
    for (int j = 0; j < n; ++j) {
        if (is_piv[j]) continue;
        VecQ v(n);
        v[j] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(static_cast<int>(k), j);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return MatQ(n, 0);
    return MatQ::from_cols(cols);
}

std::optional<MatQ> inverse(const MatQ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    std::vector<int> piv;
    MatQ r = rref(MatQ::hcat(a, MatQ::identity(a.rows())), &piv);
    if (static_cast<int>(piv.size()) != a.rows()) return std::nullopt;
    for (std::size_t k = 0; k < piv.size(); ++k)
        if (piv[k] != static_cast<int>(k)) return std::nullopt;
    return r.block(0, a.cols(), a.rows(), a.cols());
}

MatQ column_space(const MatQ& a) {
    std::vector<int> piv;
    rref(a, &piv);
    MatQ m(a.rows(), static_cast<int>(piv.size()));
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) m(i, static_cast<int>(k)) = a(i, piv[k]);
    return m;
}

bool span_contains(const MatQ& basis, const MatQ& v) {
    if (v.cols() == 0) return true;
    if (basis.cols() == 0) return v.is_zero();
    return rank(MatQ::hcat(basis, v)) == rank(basis);
}

bool span_equal(const MatQ& a, const MatQ& b) { return span_contains(a, b) && span_contains(b, a); }

MatQ span_sum(const MatQ& a, const MatQ& b) { return column_space(MatQ::hcat(a, b)); }

MatQ span_intersect(const MatQ& a, const MatQ& b) {
    if (a.cols() == 0 || b.cols() == 0) return MatQ(a.rows(), 0);
    // x in both spans: a u = b w; kernel of [a | -b] gives (u, w).
    MatQ k = nullspace(MatQ::hcat(a, -b));
    std::vector<VecQ> cols;
    for (int j = 0; j < k.cols(); ++j) {
        VecQ u(a.cols());
        for (int i = 0; i < a.cols(); ++i) u[i] = k(i, j);
        cols.push_back(a * u);
    }
    if (cols.empty()) return MatQ(a.rows(), 0);
    return column_space(MatQ::from_cols(cols));
}

std::pair<int, int> inertia(const MatQ& sym) {
    if (!sym.is_symmetric()) throw std::invalid_argument("inertia: not symmetric");
    MatQ m = sym;
    int n = m.rows();
    int neg = 0, pos = 0;
    auto add_multiple = [&](int dst, int src, const Rat& f) {
        // symmetric congruence: row and column update
        for (int j = 0; j < n; ++j) m(dst, j) += f * m(src, j);
        for (int i = 0; i < n; ++i) m(i, dst) += f * m(i, src);
    };
    auto swap_rc = [&](int i, int j) {
        for (int k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
        for (int k = 0; k < n; ++k) std::swap(m(k, i), m(k, j));
    };
    for (int k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            int d = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, i) != 0) {
                    d = i;
                    break;
                }
            if (d >= 0) {
                swap_rc(k, d);
            } else {
                int j = -1;
                for (int i = k + 1; i < n && j < 0; ++i)
                    if (m(k, i) != 0) j = i;
                if (j < 0) continue;  // zero row: radical direction
                add_multiple(k, j, 1);  // now m(k,k) = 2 m(k,j) != 0
            }
        }
        Rat p = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            add_multiple(i, k, -m(i, k) / p);
        }
    }
    for (int k = 0; k < n; ++k) {
        if (m(k, k) > 0) ++pos;
        if (m(k, k) < 0) ++neg;
    }
    return {neg, pos};
}

Rat det(const MatQ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
    MatQ m = a;
    int n = m.rows();
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        Rat inv = 1 / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) * inv;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

}  // namespace exsym
