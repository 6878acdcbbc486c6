#pragma once

#include "holonorm/exact/bigfloat.hpp"
#include "holonorm/exact/rational.hpp"
#include "holonorm/errors.hpp"

#include <span>

namespace holonorm {

struct RatioConfig {
    int depth = 6;
    double tolerance = 1e-8; // on the stability indicator, relative to max(|value|, 1)
    int precision = 512;     // only used when the gap is not an integer
};

/// Limit of num(n) / (den(n) n^gap) by Neville extrapolation in x = 1/n.
struct RatioEstimate {
    BigFloat value;
    int depth = 0;
    BigFloat stability; // max disagreement among the last three depths
    long last_index = 0;
    bool stable = false;

    /// Decimal digits backed by the stability indicator.
    int digits() const;
};

class UnstableExtrapolation : public Error {
public:
    UnstableExtrapolation(const std::string& what, RatioEstimate estimate)
        : Error(what), estimate_(std::move(estimate)) {}
    const RatioEstimate& estimate() const { return estimate_; }

private:
    RatioEstimate estimate_;
};

/// Terms are indexed from n = 0 and both lists must have equal length >= depth + 8.
/// The last depth+1 indices feed the extrapolation. Throws UnstableExtrapolation when the
/// stability indicator exceeds the tolerance; the estimate is still attached.
RatioEstimate estimate_ratio(std::span<const Rational> num, std::span<const Rational> den, const Rational& gap,
                             const RatioConfig& cfg = {});
/// Numeric gap, for non-rational exponents.
RatioEstimate estimate_ratio(std::span<const Rational> num, std::span<const Rational> den, const BigFloat& gap,
                             const RatioConfig& cfg = {});

} // namespace holonorm
