#pragma once

#include <gmpxx.h>

#include <string>

namespace qforge {

// Exact rational scalar. GMP keeps values canonical: positive denominator,
// coprime numerator/denominator, zero stored as 0/1.
using Rational = mpq_class;

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rational& r);

// Parses the same two forms. Rejects anything else, including zero
// denominators; the result is canonicalized.
Rational rat_from_string(const std::string& s);

} // namespace qforge
