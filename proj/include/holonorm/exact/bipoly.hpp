#pragma once

#include "holonorm/exact/poly.hpp"
#include "holonorm/exact/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace holonorm {

/// Sparse polynomial in n and x over the rationals, keyed by (deg_n, deg_x).
/// Monomials are ordered lexicographically with n before x; the leading term is the largest key.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(Terms terms);
    BiPoly(long c); // NOLINT(google-explicit-constructor): integer constants read naturally
    explicit BiPoly(const Rational& c);
    /// Lifts a polynomial in n.
    static BiPoly from_n(const Poly& p);
    static BiPoly n();
    static BiPoly x();
    static BiPoly monomial(const Rational& c, int dn, int dx);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Terms& terms() const { return terms_; }
    const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
    const Rational& leading_coeff() const { return terms_.rbegin()->second; }
    int degree_n() const;
    int degree_x() const;
    int total_degree() const;

    Rational operator()(const Rational& n, const Rational& x) const;
    /// Substitutes a value for x, leaving a polynomial in n.
    Poly at_x(const Rational& x) const;
    /// p(n + h, x).
    BiPoly shifted_n(long h) const;
    BiPoly derivative_x() const;

    /// Integer coefficients with gcd 1 and positive leading coefficient; returns the factor removed.
    Rational make_primitive();
    BiPoly primitive() const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& c);
    BiPoly operator-() const;

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Expanded form in descending monomial order, e.g. "n^2*x+3*x-1".
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    Terms terms_;
};

/// Quotient of an exact division (multivariate division in lex order). Throws if inexact.
BiPoly exact_div(const BiPoly& dividend, const BiPoly& divisor);

/// Attempts exact division; returns false (leaving quotient unspecified) if divisor does not divide.
bool try_exact_div(const BiPoly& dividend, const BiPoly& divisor, BiPoly& quotient);

/// Fraction of two bivariate polynomials. Normalization removes integer content and makes the
/// denominator primitive with positive leading coefficient; no multivariate gcd is taken, so two
/// equal fractions need not share a representation. Compare with is_zero() of the difference.
class BiFrac {
public:
    BiFrac() : num_(), den_(1) {}
    BiFrac(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    explicit BiFrac(const Rational& c) : num_(c), den_(1) {}
    explicit BiFrac(BiPoly num) : num_(std::move(num)), den_(1) {}
    BiFrac(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws DivisionByZero at a pole.
    Rational operator()(const Rational& n, const Rational& x) const;
    BiFrac shifted(long h) const;
    BiFrac derivative_x() const;

    BiFrac& operator+=(const BiFrac& rhs);
    BiFrac& operator-=(const BiFrac& rhs);
    BiFrac& operator*=(const BiFrac& rhs);
    BiFrac& operator/=(const BiFrac& rhs);
    BiFrac operator-() const;

    friend BiFrac operator+(BiFrac a, const BiFrac& b) { return a += b; }
    friend BiFrac operator-(BiFrac a, const BiFrac& b) { return a -= b; }
    friend BiFrac operator*(BiFrac a, const BiFrac& b) { return a *= b; }
    friend BiFrac operator/(BiFrac a, const BiFrac& b) { return a /= b; }
    /// Mathematical equality (cross-multiplied).
    friend bool operator==(const BiFrac& a, const BiFrac& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

    std::string to_string() const;

private:
    void normalize();
    BiPoly num_;
    BiPoly den_;
};

} // namespace holonorm
