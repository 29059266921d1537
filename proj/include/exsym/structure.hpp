#pragma once

#include "exsym/grading.hpp"

namespace exsym {

struct SpanCertificate {
    bool holds = false;
    MatQ actual;    // basis of the bracket span
    MatQ expected;  // basis of the target subspace
    std::string detail;
};

// Span of pairwise brackets of the columns of `vectors`.
MatQ bracket_span(const BracketTensor& b, const MatQ& vectors);
MatQ bracket_span(const BracketTensor& b, const MatQ& u, const MatQ& v);

// [g_+^-, g_+^-] = g_+^+ (requires h-graded; throws like grade otherwise).
SpanCertificate is_extrinsic_triple(const Algebra& g);

// [g^-, g^-] = g^+.
SpanCertificate is_full(const Algebra& g);

}  // namespace exsym
