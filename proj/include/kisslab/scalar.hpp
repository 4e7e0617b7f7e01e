#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kisslab {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values canonical: gcd(num, den) = 1
// and den > 0, so equality and ordering are plain value comparisons.
using Scalar = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Decimal points,
// exponents and empty strings are rejected with ParseError.
Scalar parse_scalar(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise, '-' on the numerator.
std::string scalar_text(const Scalar& value);

// floor(value) as an exact integer.
Int scalar_floor(const Scalar& value);

// Lossy conversion for rendering and diagnostics only; never used in predicates.
double scalar_double(const Scalar& value);

} // namespace kisslab
