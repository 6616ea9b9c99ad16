#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hetcache {

// Exact rational arithmetic everywhere; decimal rendering happens only at
// output boundaries.
using Rational = mpq_class;

// Canonical rational from integer numerator/denominator.
Rational make_rational(long num, long den = 1);

// Accepts "3", "5/8" and decimal literals like "0.97" (parsed exactly).
Rational parse_rational(std::string_view text);

// Comma-separated list, e.g. "1/8,1/4,1/2,1".
std::vector<Rational> parse_rational_list(std::string_view text);

// "5/8" or "3" when the denominator is 1.
std::string format_rational(const Rational& q);

std::string format_rational_list(std::span<const Rational> values);

// Fixed-point decimal with `frac_digits` digits after the point, rounded
// half away from zero. Pure integer arithmetic, so output is deterministic.
std::string to_decimal_string(const Rational& q, int frac_digits = 6);

double to_double(const Rational& q);

Rational pow_rational(const Rational& base, unsigned exponent);

// Nearest integer, halves rounded up.
std::int64_t round_half_up(const Rational& q);

}  // namespace hetcache
