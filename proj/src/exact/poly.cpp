#include "holonorm/exact/poly.hpp"

#include "holonorm/errors.hpp"

#include <algorithm>
#include <sstream>

namespace holonorm {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::var() { return monomial(1, 1); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

BigFloat Poly::operator()(const BigFloat& x) const {
    BigFloat acc(x.precision());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += BigFloat(*it, x.precision());
    }
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rational& h) const {
    // Horner in the ring: ((c_d)(x+h) + c_{d-1})(x+h) + ...
    const Poly step(std::vector<Rational>{h, Rational(1)});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= step;
        acc += constant(*it);
    }
    return acc;
}

Poly Poly::reflected() const {
    std::vector<Rational> v = coeffs_;
    for (size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    Rational lc = leading();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v)
        c /= lc;
    return Poly(std::move(v));
}

Poly Poly::primitive() const {
    if (is_zero())
        return *this;
    Integer l = denominator_lcm(coeffs_);
    std::vector<Rational> v = coeffs_;
    for (auto& c : v)
        c *= l;
    Integer g = numerator_gcd(v);
    if (leading() < 0)
        g = -g;
    for (auto& c : v)
        c /= g;
    return Poly(std::move(v));
}

Poly Poly::content_free() const {
    Poly r = primitive();
    return leading() < 0 ? -r : r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (c < 0)
            out << "-";
        else if (!first)
            out << "+";
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << var;
        if (i > 1)
            out << "^" << i;
    }
    return out.str();
}

std::pair<Poly, Poly> divrem(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = dividend.coeffs();
    int dq = dividend.degree() - divisor.degree();
    if (dq < 0)
        return {Poly(), dividend};
    std::vector<Rational> quot(static_cast<size_t>(dq) + 1);
    const Rational& lc = divisor.leading();
    int dd = divisor.degree();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + dd)] / lc;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k + j)] -= q * divisor.coeffs()[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
    auto [q, r] = divrem(dividend, divisor);
    if (!r.is_zero())
        throw Error("inexact polynomial division");
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    return exact_div(a * b, gcd(a, b)).monic();
}

Poly square_free_part(const Poly& p) {
    if (p.degree() <= 0)
        return p;
    return exact_div(p, gcd(p, p.derivative()));
}

std::vector<Poly> square_free_factorization(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0)
        return out;
    Poly a = p.monic();
    Poly b = a.derivative();
    Poly c = gcd(a, b);
    Poly w = exact_div(a, c);
    Poly y = exact_div(b, c);
    Poly z = y - w.derivative();
    while (w.degree() > 0) {
        Poly g = gcd(w, z);
        out.push_back(g);
        w = exact_div(w, g);
        y = exact_div(z, g);
        z = y - w.derivative();
    }
    while (!out.empty() && out.back().degree() <= 0)
        out.pop_back();
    return out;
}

} // namespace holonorm
