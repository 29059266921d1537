#pragma once

#include "exsym/matq.hpp"

#include <utility>
#include <vector>

namespace exsym {

// Coefficients of det(x I - m), leading first: [1, c1, ..., cn].
VecQ charpoly(const MatQ& m);

// Rational roots with multiplicities; open_degree counts the remaining
// irrational part. Throws UnsupportedError when divisor enumeration on the
// scaled integer polynomial overflows the search bound.
struct RootSplit {
    std::vector<std::pair<Rat, int>> roots;
    int open_degree = 0;
};
RootSplit rational_roots(const VecQ& poly);

// Canonical diagonal representative of a symmetric matrix under orthogonal
// conjugation combined with nonzero rescaling: eigenvalues scaled so the
// nonzero one of least magnitude becomes 1, sorted by increasing magnitude
// with zeros last; sign ties resolved lexicographically. Two inputs are
// orbit-equivalent iff their normal forms are equal. Throws
// UnsupportedError when the spectrum is irrational.
MatQ pencil_normal_form(const MatQ& b);

// Orbit equality under the same action, decided through scaling relations
// between characteristic polynomials; no splitting required.
bool pencil_orbit_equal(const MatQ& b1, const MatQ& b2);

// (I - a)^{-1} (I + a) for antisymmetric a: a rational orthogonal matrix.
MatQ cayley_orthogonal(const MatQ& a);

}  // namespace exsym
