#include "holonorm/exact/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace holonorm {

BigFloat::BigFloat(int precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int precision) {
    mpfr_init2(value_, precision);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int precision) {
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_double(double value, int precision) {
    BigFloat r(precision);
    mpfr_set_d(r.value_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::with_precision(int precision) const {
    BigFloat r(precision);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

namespace {

// Widens the destination before an in-place binary operation.
void widen(mpfr_ptr dst, mpfr_srcptr rhs) {
    if (mpfr_get_prec(rhs) > mpfr_get_prec(dst))
        mpfr_prec_round(dst, mpfr_get_prec(rhs), MPFR_RNDN);
}

} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    widen(value_, rhs.value_);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    widen(value_, rhs.value_);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    widen(value_, rhs.value_);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    widen(value_, rhs.value_);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", std::max(digits, 1), value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long exponent) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), exponent, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& exponent) {
    BigFloat r(std::max(x.precision(), exponent.precision()));
    mpfr_pow(r.get(), x.get(), exponent.get(), MPFR_RNDN);
    return r;
}

BigFloat log10(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log10(r.get(), x.get(), MPFR_RNDN);
    return r;
}

const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat two_pow(long exponent, int precision) {
    BigFloat r(1, precision);
    mpfr_mul_2si(r.get(), r.get(), exponent, MPFR_RNDN);
    return r;
}

} // namespace holonorm
