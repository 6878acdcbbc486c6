#pragma once

#include "holonorm/exact/rational.hpp"

#include <mpfr.h>

#include <string>

namespace holonorm {

/// Binary floating-point value at a fixed working precision (MPFR, round-to-nearest).
/// Binary operations produce a result at the larger of the two operand precisions.
class BigFloat {
public:
    static constexpr int kDefaultPrecision = 256;

    explicit BigFloat(int precision = kDefaultPrecision);
    BigFloat(long value, int precision);
    BigFloat(const Rational& value, int precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_double(double value, int precision);

    int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
    BigFloat with_precision(int precision) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

    bool is_zero() const { return mpfr_zero_p(value_); }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// %g-style rendering with `digits` significant digits.
    std::string to_string(int digits) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow(const BigFloat& x, long exponent);
BigFloat pow(const BigFloat& x, const BigFloat& exponent);
BigFloat log10(const BigFloat& x);
const BigFloat& max(const BigFloat& a, const BigFloat& b);

/// Smallest precision-relative quantum 2^(-bits) at precision `prec`.
BigFloat two_pow(long exponent, int precision);

} // namespace holonorm
