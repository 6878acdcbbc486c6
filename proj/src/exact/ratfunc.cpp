#include "holonorm/exact/ratfunc.hpp"

#include "holonorm/errors.hpp"

namespace holonorm {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly{1};
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        num_ *= 1 / lc;
        den_ *= 1 / lc;
    }
}

Rational RatFunc::operator()(const Rational& n) const {
    Rational d = den_(n);
    if (d == 0)
        throw DivisionByZero("pole at n=" + n.get_str());
    return num_(n) / d;
}

RatFunc RatFunc::shifted(long h) const {
    if (h == 0)
        return *this;
    return RatFunc(num_.shifted(h), den_.shifted(h));
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    if (den_ == rhs.den_)
        num_ += rhs.num_;
    else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero("rational function division by zero");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    reduce();
    return *this;
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace holonorm
