#include "holonorm/exact/bipoly.hpp"

#include "holonorm/errors.hpp"

#include <sstream>
#include <vector>

namespace holonorm {

BiPoly::BiPoly(Terms terms) {
    for (auto& [e, c] : terms)
        if (c != 0)
            terms_.emplace(e, std::move(c));
}

BiPoly::BiPoly(long c) {
    if (c != 0)
        terms_.emplace(Exponent{0, 0}, Rational(c));
}

BiPoly::BiPoly(const Rational& c) {
    if (c != 0)
        terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::from_n(const Poly& p) {
    Terms t;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0)
            t.emplace(Exponent{i, 0}, p.coeff(i));
    return BiPoly(std::move(t));
}

BiPoly BiPoly::n() { return monomial(1, 1, 0); }
BiPoly BiPoly::x() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, int dn, int dx) {
    Terms t;
    t.emplace(Exponent{dn, dx}, c);
    return BiPoly(std::move(t));
}

bool BiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }

int BiPoly::degree_n() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first);
    return d;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

Rational BiPoly::operator()(const Rational& n, const Rational& x) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_)
        acc += c * pow(n, static_cast<unsigned long>(e.first)) * pow(x, static_cast<unsigned long>(e.second));
    return acc;
}

Poly BiPoly::at_x(const Rational& x) const {
    std::vector<Rational> v(static_cast<size_t>(std::max(degree_n(), 0)) + 1);
    for (const auto& [e, c] : terms_)
        v[static_cast<size_t>(e.first)] += c * pow(x, static_cast<unsigned long>(e.second));
    return Poly(std::move(v));
}

BiPoly BiPoly::shifted_n(long h) const {
    // (n+h)^i expanded with binomial coefficients.
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        for (int j = e.first; j >= 0; --j) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e.first), static_cast<unsigned long>(j));
            // coefficient of n^j in (n+h)^i is C(i,j) h^(i-j)
            Integer hpow;
            mpz_pow_ui(hpow.get_mpz_t(), Integer(h).get_mpz_t(), static_cast<unsigned long>(e.first - j));
            out.add_term({j, e.second}, c * Rational(binom * hpow));
        }
    }
    return out;
}

BiPoly BiPoly::derivative_x() const {
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0)
            out.add_term({e.first, e.second - 1}, c * e.second);
    return out;
}

Rational BiPoly::make_primitive() {
    if (terms_.empty())
        return 1;
    std::vector<Rational> cs;
    cs.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        cs.push_back(c);
    Rational factor(numerator_gcd(cs), denominator_lcm(cs));
    factor.canonicalize();
    if (leading_coeff() < 0)
        factor = -factor;
    for (auto& [e, c] : terms_)
        c /= factor;
    return factor;
}

BiPoly BiPoly::primitive() const {
    BiPoly r(*this);
    r.make_primitive();
    return r;
}

void BiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (c < 0)
            out << "-";
        else if (!first)
            out << "+";
        first = false;
        bool constant = e.first == 0 && e.second == 0;
        if (constant) {
            out << mag.get_str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            out << mag.get_str();
            need_star = true;
        }
        auto emit = [&](const char* var, int power) {
            if (power == 0)
                return;
            if (need_star)
                out << "*";
            out << var;
            if (power > 1)
                out << "^" << power;
            need_star = true;
        };
        emit("n", e.first);
        emit("x", e.second);
    }
    return out.str();
}

bool try_exact_div(const BiPoly& dividend, const BiPoly& divisor, BiPoly& quotient) {
    if (divisor.is_zero())
        throw DivisionByZero("bivariate division by zero");
    quotient = BiPoly();
    BiPoly rem = dividend;
    const auto [ln, lx] = divisor.leading_exponent();
    const Rational& lc = divisor.leading_coeff();
    while (!rem.is_zero()) {
        const auto [rn, rx] = rem.leading_exponent();
        if (rn < ln || rx < lx)
            return false;
        BiPoly t = BiPoly::monomial(rem.leading_coeff() / lc, rn - ln, rx - lx);
        quotient += t;
        rem -= t * divisor;
    }
    return true;
}

BiPoly exact_div(const BiPoly& dividend, const BiPoly& divisor) {
    BiPoly q;
    if (!try_exact_div(dividend, divisor, q))
        throw Error("inexact bivariate division");
    return q;
}

BiFrac::BiFrac(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZero("BiFrac with zero denominator");
    normalize();
}

void BiFrac::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    Rational f = den_.make_primitive();
    num_ *= 1 / f;
    if (!den_.is_constant()) {
        BiPoly q;
        if (try_exact_div(num_, den_, q)) {
            num_ = std::move(q);
            den_ = BiPoly(1);
        }
    }
}

Rational BiFrac::operator()(const Rational& n, const Rational& x) const {
    Rational d = den_(n, x);
    if (d == 0)
        throw DivisionByZero("BiFrac pole at n=" + n.get_str() + ", x=" + x.get_str());
    return num_(n, x) / d;
}

BiFrac BiFrac::shifted(long h) const { return BiFrac(num_.shifted_n(h), den_.shifted_n(h)); }

BiFrac BiFrac::derivative_x() const {
    if (den_.is_constant())
        return BiFrac(num_.derivative_x(), den_);
    return BiFrac(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
}

BiFrac& BiFrac::operator+=(const BiFrac& rhs) {
    if (den_ == rhs.den_)
        num_ += rhs.num_;
    else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

BiFrac& BiFrac::operator-=(const BiFrac& rhs) {
    if (den_ == rhs.den_)
        num_ -= rhs.num_;
    else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

BiFrac& BiFrac::operator*=(const BiFrac& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

BiFrac& BiFrac::operator/=(const BiFrac& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero("BiFrac division by zero");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    normalize();
    return *this;
}

BiFrac BiFrac::operator-() const {
    BiFrac r(*this);
    r.num_ = -r.num_;
    return r;
}

std::string BiFrac::to_string() const {
    if (den_.is_constant())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace holonorm
