#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace multistat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact parse of "12", "-3/4", "0.02", "1.5e-3". Decimals never pass
/// through floating point: 0.02 becomes 1/50.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` significant digits (round half away from zero).
std::string to_decimal(const Rational& q, int digits);

/// Terminating decimal when the denominator is 2^a 5^b, else "n/d".
std::string to_exact_decimal(const Rational& q);

double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);

Rational pow(const Rational& q, unsigned e);
Integer pow(const Integer& z, unsigned e);

/// Simplest rational (smallest denominator, then smallest magnitude) strictly
/// inside the open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Round outward to a dyadic rational with denominator 2^bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

}  // namespace multistat
