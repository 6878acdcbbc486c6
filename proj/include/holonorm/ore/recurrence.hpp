#pragma once

#include "holonorm/ore/ore_poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace holonorm {

/// sum_i p_i(n) t(n+i) = 0 for n >= start, with integer polynomial coefficients.
/// `initial` holds t(0), t(1), ... up to past the last nonnegative root of p_d shifted by the order,
/// so generate() never divides by zero.
struct Recurrence {
    std::vector<Poly> coeffs;
    long start = 0;
    std::vector<Rational> initial;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int degree() const;

    RecurrenceOperator to_operator() const;
    /// Clears denominators and normalizes; `terms` seeds the initial values.
    static Recurrence from_operator(const RecurrenceOperator& op, long start, std::span<const Rational> terms);

    /// Number of initial values needed: max(start, 1 + largest nonnegative integer root of p_d) + order.
    size_t initial_count() const;

    /// Terms t(0), ..., t(count-1).
    std::vector<Rational> generate(size_t count) const;

    std::string text() const;
};

/// Nonnegative integer roots of an integer-coefficient polynomial, ascending.
std::vector<long> nonnegative_integer_roots(const Poly& p);

} // namespace holonorm
