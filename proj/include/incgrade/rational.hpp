#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace incgrade {

/// Exact rational scalar. Values are kept in canonical (reduced) form.
using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" otherwise, d > 0.
std::string to_string(const Rational& q);

/// Parses "n" or "n/d" (optional sign on n). Throws InputError on anything else
/// or on a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace incgrade
