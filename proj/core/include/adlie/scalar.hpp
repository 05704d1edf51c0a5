#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adlie {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; the helpers below canonicalize on input.
using Scalar = mpq_class;

/// Parses "p", "-p", or "p/q". Throws Error(ParseError) on malformed input or
/// a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }
inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

Scalar make_scalar(long numerator, long denominator = 1);

}  // namespace adlie
