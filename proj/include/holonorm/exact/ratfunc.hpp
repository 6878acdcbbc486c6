#pragma once

#include "holonorm/exact/poly.hpp"

#include <string>

namespace holonorm {

/// Rational function in n: num/den in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly{1}) {}
    RatFunc(long c) : num_(Poly::constant(c)), den_(Poly{1}) {} // NOLINT(google-explicit-constructor)
    explicit RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly{1}) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly{1}) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws DivisionByZero at a pole.
    Rational operator()(const Rational& n) const;
    /// f(n + h).
    RatFunc shifted(long h) const;

    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

} // namespace holonorm
