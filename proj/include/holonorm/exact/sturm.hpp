#pragma once

#include "holonorm/exact/bigfloat.hpp"
#include "holonorm/exact/poly.hpp"

#include <optional>
#include <vector>

namespace holonorm {

/// An endpoint of a real interval; std::nullopt stands for -inf on the left and +inf on the right.
using Endpoint = std::optional<Rational>;

/// Sturm chain of the square-free part of a polynomial. Chain members are kept primitive
/// (positive scaling does not change sign sequences).
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    /// Distinct real roots in (lo, hi].
    int count(const Endpoint& lo, const Endpoint& hi) const;
    int variations_at(const Rational& x) const;
    int variations_at_infinity(bool positive) const;
    const Poly& square_free() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

/// Number of distinct real roots of p in (lo, hi]. Throws InvalidInput for p = 0.
int sturm_count(const Poly& p, const Endpoint& lo = std::nullopt, const Endpoint& hi = std::nullopt);

/// Real roots counted with multiplicity (via square-free factorization exponents).
int real_root_count_with_multiplicity(const Poly& p);

/// Certified enclosure [lo, hi] of a real root; lo == hi for an exactly located rational root.
struct RootEnclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool overlaps(const RootEnclosure& other) const { return lo <= other.hi && other.lo <= hi; }
};

struct RootSelector {
    enum class Kind { LargestReal, Interval };
    Kind kind = Kind::LargestReal;
    Endpoint lo;
    Endpoint hi;

    static RootSelector largest_real() { return {}; }
    /// Largest root inside (lo, hi].
    static RootSelector interval(Endpoint lo, Endpoint hi) { return {Kind::Interval, std::move(lo), std::move(hi)}; }
};

/// Refines the selected root by Sturm bisection until width <= 2^(1-precision) * |root|.
/// Throws NoSuchRoot when nothing matches the selector.
RootEnclosure isolate_root(const Poly& p, const RootSelector& selector, int precision);

/// Midpoint of the enclosure at the given precision.
BigFloat enclosure_value(const RootEnclosure& e, int precision);

/// A power of two strictly above every root modulus (Cauchy bound).
Rational root_bound(const Poly& p);

} // namespace holonorm
