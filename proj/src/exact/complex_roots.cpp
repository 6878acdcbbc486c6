#include "holonorm/exact/complex_roots.hpp"

#include "holonorm/errors.hpp"
#include "holonorm/exact/sturm.hpp"

#include <cmath>

namespace holonorm {

BigFloat BigComplex::modulus() const { return sqrt(re * re + im * im); }

namespace {

struct C {
    BigFloat re, im;
};

C add(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
C sub(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
C mul(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
C div(const C& a, const C& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat norm1(const C& a) { return abs(a.re) + abs(a.im); }

// Horner evaluation of p and p'.
std::pair<C, C> eval(const std::vector<BigFloat>& coeffs, const C& z, int prec) {
    C p{BigFloat(prec), BigFloat(prec)};
    C dp{BigFloat(prec), BigFloat(prec)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        dp = add(mul(dp, z), p);
        p = add(mul(p, z), C{*it, BigFloat(prec)});
    }
    return {p, dp};
}

} // namespace

std::vector<BigComplex> complex_roots(const Poly& sf, int precision) {
    const int deg = sf.degree();
    if (deg <= 0)
        return {};
    const int prec = precision + 32;
    std::vector<BigFloat> coeffs;
    for (int i = 0; i <= deg; ++i)
        coeffs.emplace_back(sf.coeff(i) / sf.leading(), prec);

    // Starting points on a circle of radius half the root bound, rotated off the real axis.
    BigFloat radius(root_bound(sf) / 2, prec);
    std::vector<C> z;
    for (int k = 0; k < deg; ++k) {
        double angle = 2.0 * M_PI * (k + 0.25) / deg + 0.4;
        z.push_back({radius * BigFloat::from_double(std::cos(angle), prec),
                     radius * BigFloat::from_double(std::sin(angle), prec)});
    }

    const BigFloat tol = two_pow(-(precision + 8), prec);
    const C one{BigFloat(1, prec), BigFloat(prec)};
    for (int iter = 0; iter < 2000; ++iter) {
        BigFloat worst(prec);
        for (int k = 0; k < deg; ++k) {
            auto [p, dp] = eval(coeffs, z[k], prec);
            if (p.re.is_zero() && p.im.is_zero())
                continue;
            C ratio = div(p, dp);
            C sum{BigFloat(prec), BigFloat(prec)};
            for (int j = 0; j < deg; ++j)
                if (j != k)
                    sum = add(sum, div(one, sub(z[k], z[j])));
            C step = div(ratio, sub(one, mul(ratio, sum)));
            z[k] = sub(z[k], step);
            BigFloat rel = norm1(step) / max(norm1(z[k]), BigFloat(1, prec));
            worst = max(worst, rel);
        }
        if (worst <= tol)
            break;
    }

    std::vector<BigComplex> out;
    for (auto& r : z)
        out.push_back({r.re.with_precision(precision), r.im.with_precision(precision)});
    return out;
}

} // namespace holonorm
