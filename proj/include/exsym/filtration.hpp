#pragma once

#include "exsym/algebra.hpp"

namespace exsym {

MatQ killing_form(const BracketTensor& b);

// Basis of span{[x, y] : x in span u, y in span v}.
MatQ bracket_span_of(const BracketTensor& b, const MatQ& u, const MatQ& v);

MatQ derived_subalgebra(const BracketTensor& b);
MatQ center_of(const BracketTensor& b);

// "abelian" | "semisimple" | "nilpotent" | "reductive"; throws
// UnsupportedError for anything else.
std::string classify_bracket(const BracketTensor& b);

struct Filtration {
    // terms[0] = whole algebra, strictly decreasing, terms.back() = 0.
    std::vector<MatQ> terms;
    std::string algebra_class;
};

// R_k = smallest ideal inside R_{k-1} with semisimple quotient module.
// Supported classes: abelian, semisimple, reductive (R_1 = 0) and nilpotent
// (lower central series). Throws UnsupportedError("filtration-unsupported")
// otherwise.
Filtration radical_filtration(const BracketTensor& b);

// i(g) = sum over k of R_k cap R_k-perp (gram-orthogonal complements).
MatQ isotropic_radical_sum(const Algebra& g);

}  // namespace exsym
