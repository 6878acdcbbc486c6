#pragma once

#include "holonorm/exact/bigfloat.hpp"
#include "holonorm/exact/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace holonorm {

/// Dense univariate polynomial over the rationals.
/// Coefficient i multiplies var^i; there are never trailing zero coefficients,
/// so the zero polynomial has an empty coefficient list and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    /// The indeterminate itself.
    static Poly var();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    BigFloat operator()(const BigFloat& x) const;

    Poly derivative() const;
    /// p(var + h).
    Poly shifted(const Rational& h) const;
    /// p(-var).
    Poly reflected() const;
    Poly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    Poly primitive() const;
    /// Integer coefficients with content 1, scaled by a positive rational (sign kept).
    Poly content_free() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Expanded form in descending degree, e.g. "n^2+4*n+4".
    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor). Throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& dividend, const Poly& divisor);

/// Quotient of an exact division; throws if the remainder is nonzero.
Poly exact_div(const Poly& dividend, const Poly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

Poly lcm(const Poly& a, const Poly& b);

/// p / gcd(p, p').
Poly square_free_part(const Poly& p);

/// Yun's algorithm: result[i] collects the roots of multiplicity i+1 (each entry monic,
/// possibly constant 1). The product of result[i]^(i+1) equals p up to a constant.
std::vector<Poly> square_free_factorization(const Poly& p);

} // namespace holonorm
