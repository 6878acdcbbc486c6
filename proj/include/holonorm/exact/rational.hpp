#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace holonorm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p/q" or a plain decimal such as "0.25" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational pow(const Rational& base, unsigned long exponent);

/// lcm of the denominators; 1 for an empty span.
Integer denominator_lcm(std::span<const Rational> values);

/// gcd of |numerators|; 0 when every entry is zero.
Integer numerator_gcd(std::span<const Rational> values);

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace holonorm
