#include "holonorm/asym/series.hpp"

#include "holonorm/exact/paired.hpp"

#include <algorithm>

namespace holonorm {

namespace {

long integer_gap(const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (!is_integer(d))
        throw AnchorMismatch("anchors " + to_string(a) + " and " + to_string(b) + " differ by a non-integer");
    return d.get_num().get_si();
}

} // namespace

TruncSeries::TruncSeries(Rational anchor, std::vector<BigFloat> coeffs)
    : anchor_(std::move(anchor)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidInput("a truncated series needs at least one coefficient");
}

TruncSeries TruncSeries::from_form(const AsymptoticForm& form) {
    if (!form.r_exact)
        throw AnchorMismatch("exponent " + form.r_text() + " is not rational");
    std::vector<BigFloat> c{BigFloat(1L, form.lambda.precision())};
    for (const auto& b : form.b)
        c.push_back(b);
    return TruncSeries(*form.r_exact, std::move(c));
}

int TruncSeries::precision() const {
    int p = 0;
    for (const auto& c : coeffs_)
        p = std::max(p, c.precision());
    return p;
}

BigFloat TruncSeries::at_exponent(const Rational& e) const {
    const long s = integer_gap(anchor_, e);
    if (s < 0 || s > order())
        return BigFloat(precision());
    return coeffs_[static_cast<size_t>(s)];
}

TruncSeries TruncSeries::truncated(int m) const {
    std::vector<BigFloat> c(coeffs_.begin(), coeffs_.begin() + std::min(m, order()) + 1);
    return TruncSeries(anchor_, std::move(c));
}

TruncSeries TruncSeries::shifted(const Rational& k) const { return TruncSeries(anchor_ + k, coeffs_); }

namespace {

// Aligns both series at the larger anchor; the result keeps only exponents both represent.
TruncSeries combine(const TruncSeries& u, const TruncSeries& v, int sign) {
    const long gap = integer_gap(u.anchor(), v.anchor());
    const Rational anchor = gap >= 0 ? u.anchor() : v.anchor();
    const long su = gap >= 0 ? 0 : -gap, sv = gap >= 0 ? gap : 0;
    const long m = std::min(u.order() + su, v.order() + sv);
    const int prec = std::max(u.precision(), v.precision());
    std::vector<BigFloat> c;
    for (long s = 0; s <= m; ++s) {
        BigFloat x(prec);
        if (s - su >= 0)
            x += u.coeff(static_cast<int>(s - su));
        if (s - sv >= 0) {
            if (sign > 0)
                x += v.coeff(static_cast<int>(s - sv));
            else
                x -= v.coeff(static_cast<int>(s - sv));
        }
        c.push_back(std::move(x));
    }
    return TruncSeries(anchor, std::move(c));
}

} // namespace

TruncSeries operator+(const TruncSeries& u, const TruncSeries& v) { return combine(u, v, 1); }
TruncSeries operator-(const TruncSeries& u, const TruncSeries& v) { return combine(u, v, -1); }

TruncSeries operator*(const TruncSeries& u, const TruncSeries& v) {
    const int m = std::min(u.order(), v.order());
    const int prec = std::max(u.precision(), v.precision());
    std::vector<BigFloat> c;
    for (int s = 0; s <= m; ++s) {
        BigFloat x(prec);
        for (int k = 0; k <= s; ++k)
            x += u.coeff(k) * v.coeff(s - k);
        c.push_back(std::move(x));
    }
    return TruncSeries(u.anchor() + v.anchor(), std::move(c));
}

TruncSeries operator/(const TruncSeries& u, const TruncSeries& v) {
    const int prec = std::max(u.precision(), v.precision());
    const BigFloat scale = [&] {
        BigFloat mx(prec);
        for (const auto& c : v.coeffs())
            mx = max(mx, abs(c));
        return mx;
    }();
    if (v.coeff(0).is_zero() || abs(v.coeff(0)) <= two_pow(-(prec / 2), prec) * scale)
        throw DivisionByVanishingSeries("leading coefficient of the divisor vanishes");
    const int m = std::min(u.order(), v.order());
    std::vector<BigFloat> q;
    for (int s = 0; s <= m; ++s) {
        BigFloat x = u.coeff(s).with_precision(prec);
        for (int k = 1; k <= s; ++k)
            x -= v.coeff(k) * q[static_cast<size_t>(s - k)];
        q.push_back(x / v.coeff(0));
    }
    return TruncSeries(u.anchor() - v.anchor(), std::move(q));
}

TruncSeries operator*(const BigFloat& c, const TruncSeries& u) {
    std::vector<BigFloat> v;
    for (const auto& x : u.coeffs())
        v.push_back(c * x);
    return TruncSeries(u.anchor(), std::move(v));
}

std::string TruncSeries::to_string(int digits) const {
    std::string out;
    for (int s = 0; s <= order(); ++s) {
        if (s)
            out += " + ";
        out += "(" + render_decimal(coeffs_[static_cast<size_t>(s)], digits) + ")*n^(" + holonorm::to_string(anchor_ - s) + ")";
    }
    return out;
}

} // namespace holonorm
