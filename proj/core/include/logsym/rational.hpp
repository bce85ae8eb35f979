#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace logsym {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Lowest terms, positive denominator; integers are written without "/1".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_natural(const Rational& q);  // nonnegative integer, 0 included

}  // namespace logsym
