#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superlie {

/// Exact rational scalar. gmpxx keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Parses "p/q" or an integer. Decimal notation is rejected.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace superlie
