#pragma once

#include "holonorm/exact/bipoly.hpp"
#include "holonorm/exact/ratfunc.hpp"

#include <vector>

namespace holonorm {

/// Ties a coefficient field K of OrePoly to a polynomial ring whose fraction field it is.
/// lclm and normalization work on ring elements after clearing denominators.
template <class K>
struct CoefficientField;

template <>
struct CoefficientField<RatFunc> {
    using Ring = Poly;

    static Ring one() { return Poly{1}; }

    static const Ring& numerator(const RatFunc& c) { return c.num(); }
    static const Ring& denominator(const RatFunc& c) { return c.den(); }
    static RatFunc from_ring(Ring r) { return RatFunc(std::move(r)); }
    static RatFunc fraction(Ring num, Ring den) { return RatFunc(std::move(num), std::move(den)); }
    static Ring common_multiple(const Ring& a, const Ring& b) { return lcm(a, b); }
    static Ring exact_quotient(const Ring& a, const Ring& b) { return exact_div(a, b); }
    static Ring shift(const Ring& r, long h) { return r.shifted(h); }
    static int total_degree(const Ring& r) { return r.degree(); }
    static std::vector<Rational> ring_coeffs(const Ring& r) { return r.coeffs(); }
    static Rational leading_coeff(const Ring& r) { return r.is_zero() ? Rational(0) : r.leading(); }
    static Ring scale(const Ring& r, const Rational& c) { return r * c; }
};

template <>
struct CoefficientField<BiFrac> {
    using Ring = BiPoly;

    static Ring one() { return BiPoly(1); }

    static const Ring& numerator(const BiFrac& c) { return c.num(); }
    static const Ring& denominator(const BiFrac& c) { return c.den(); }
    static BiFrac from_ring(Ring r) { return BiFrac(std::move(r)); }
    static BiFrac fraction(Ring num, Ring den) { return BiFrac(std::move(num), std::move(den)); }
    static Ring common_multiple(const Ring& a, const Ring& b) {
        // No multivariate gcd: reuse a factor when one divides the other, else take the product.
        Ring q;
        if (try_exact_div(a, b, q))
            return a;
        if (try_exact_div(b, a, q))
            return b;
        return a * b;
    }
    static Ring exact_quotient(const Ring& a, const Ring& b) { return exact_div(a, b); }
    static Ring shift(const Ring& r, long h) { return r.shifted_n(h); }
    static int total_degree(const Ring& r) { return r.total_degree(); }
    static std::vector<Rational> ring_coeffs(const Ring& r) {
        std::vector<Rational> out;
        for (const auto& [e, c] : r.terms())
            out.push_back(c);
        return out;
    }
    static Rational leading_coeff(const Ring& r) { return r.is_zero() ? Rational(0) : r.leading_coeff(); }
    static Ring scale(const Ring& r, const Rational& c) { return r * c; }
};

} // namespace holonorm
