#pragma once

#include "exsym/rational.hpp"

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace exsym {

using VecQ = std::vector<Rat>;

// Dense matrix over the rationals. Row-major.
class MatQ {
public:
    MatQ() = default;
    MatQ(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    MatQ(std::initializer_list<std::initializer_list<Rat>> rows);

    static MatQ identity(int n);
    static MatQ diag(const VecQ& d);
    static MatQ col(const VecQ& v);
    static MatQ from_cols(const std::vector<VecQ>& cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator-() const;
    MatQ operator*(const MatQ& o) const;
    VecQ operator*(const VecQ& v) const;
    MatQ operator*(const Rat& s) const;
    bool operator==(const MatQ& o) const = default;

    MatQ transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    MatQ block(int i0, int j0, int nr, int nc) const;
    VecQ col_vec(int j) const;
    VecQ row_vec(int i) const;
    void set_col(int j, const VecQ& v);

    static MatQ hcat(const MatQ& a, const MatQ& b);
    static MatQ vcat(const MatQ& a, const MatQ& b);
    static MatQ block_diag(const MatQ& a, const MatQ& b);

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

MatQ operator*(const Rat& s, const MatQ& m);
VecQ operator+(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a, const VecQ& b);
VecQ operator*(const Rat& s, const VecQ& v);
bool vec_is_zero(const VecQ& v);
Rat dot(const VecQ& a, const VecQ& b);

// Reduced row echelon form. Pivot columns reported through pivots if nonnull.
MatQ rref(const MatQ& a, std::vector<int>* pivots = nullptr);

int rank(const MatQ& a);

// One solution of A x = b, or nullopt if inconsistent. b may have several columns.
std::optional<MatQ> solve(const MatQ& a, const MatQ& b);
std::optional<VecQ> solve_vec(const MatQ& a, const VecQ& b);

// Columns form a basis of {x : A x = 0}. cols == a.cols(), rows chosen by rref.
MatQ nullspace(const MatQ& a);

std::optional<MatQ> inverse(const MatQ& a);

// Subset of the input columns forming a basis of the column span.
MatQ column_space(const MatQ& a);

// span(cols of v) contained in span(cols of basis)?
bool span_contains(const MatQ& basis, const MatQ& v);
bool span_equal(const MatQ& a, const MatQ& b);
MatQ span_sum(const MatQ& a, const MatQ& b);
MatQ span_intersect(const MatQ& a, const MatQ& b);

// (n_negative, n_positive) of a symmetric matrix; n - sum = dim of radical.
// Exact, via symmetric congruence elimination.
std::pair<int, int> inertia(const MatQ& sym);

Rat det(const MatQ& a);

}  // namespace exsym
