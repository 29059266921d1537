#pragma once

#include <gmpxx.h>

#include <string>

namespace exsym {

// Exact rational scalar. Always kept in lowest terms with positive denominator.
using Rat = mpq_class;

// n/d with canonicalization; d must be nonzero.
Rat ratio(long n, long d);

// Parses "p" or "p/q" (optional sign, arbitrary precision). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Lowest-terms decimal string, "p" or "p/q".
std::string rat_str(const Rat& x);

// Correctly rounded (nearest, ties to even) conversion. Throws
// std::range_error if the value is outside the finite double range.
double rat_to_double(const Rat& x);

}  // namespace exsym
