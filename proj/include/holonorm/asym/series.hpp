#pragma once

#include "holonorm/asym/asymptotics.hpp"

#include <vector>

namespace holonorm {

class AnchorMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByVanishingSeries : public Error {
public:
    using Error::Error;
};

/// sum_{s=0..M} c_s n^(e - s), truncated at M.
class TruncSeries {
public:
    TruncSeries(Rational anchor, std::vector<BigFloat> coeffs);

    /// 1 + b_1/n + ... + b_M/n^M at anchor r.
    static TruncSeries from_form(const AsymptoticForm& form);

    const Rational& anchor() const { return anchor_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigFloat>& coeffs() const { return coeffs_; }
    const BigFloat& coeff(int s) const { return coeffs_[static_cast<size_t>(s)]; }
    int precision() const;

    /// Coefficient of n^e, zero outside the represented range; throws AnchorMismatch if e - anchor
    /// is not an integer.
    BigFloat at_exponent(const Rational& e) const;

    /// Drops terms beyond order m.
    TruncSeries truncated(int m) const;

    friend TruncSeries operator+(const TruncSeries& u, const TruncSeries& v);
    friend TruncSeries operator-(const TruncSeries& u, const TruncSeries& v);
    friend TruncSeries operator*(const TruncSeries& u, const TruncSeries& v);
    /// Requires |v_0| above the cancellation threshold of v's precision.
    friend TruncSeries operator/(const TruncSeries& u, const TruncSeries& v);
    friend TruncSeries operator*(const BigFloat& c, const TruncSeries& u);

    /// Multiply by n^k.
    TruncSeries shifted(const Rational& k) const;

    std::string to_string(int digits = 12) const;

private:
    Rational anchor_;
    std::vector<BigFloat> coeffs_;
};

} // namespace holonorm
