#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wildrep {

/// Arbitrary-precision rational, always kept in canonical form.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q".
Rat parse_rat(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Denominator as a machine integer; throws if it does not fit.
std::int64_t den_of(const Rat& r);
std::int64_t num_of(const Rat& r);

bool is_integer(const Rat& r);
Rat floor_rat(const Rat& r);

/// Fractional part in [0,1).
Rat frac(const Rat& r);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Least multiple of `step` strictly greater than `x`.
Rat next_multiple_above(const Rat& x, const Rat& step);

}  // namespace wildrep
