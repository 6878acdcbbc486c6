#pragma once

#include "holonorm/exact/bigfloat.hpp"

#include <functional>
#include <vector>

namespace holonorm {

struct PairedConfig {
    int precision = BigFloat::kDefaultPrecision;
    int target_digits = 30;
    int precision_cap = 4096;
};

struct PairedResult {
    std::vector<BigFloat> values; // from the higher-precision run
    int agreed_digits = 0;
    int precision = 0; // the lower precision of the accepted pair
};

/// Decimal digits on which x and y agree, relative to max(|y|, 1); capped by the precision.
int agreed_digits(const BigFloat& x, const BigFloat& y);

/// Runs `compute` at P and 2P, doubling P while fewer than target_digits agree (up to the cap).
/// The returned agreement is the minimum over all outputs.
PairedResult paired_compute(const std::function<std::vector<BigFloat>(int precision)>& compute,
                            const PairedConfig& config);

/// Renders a value for reports: "0" when |v| < 10^-digits, else min(digits, 25) significant digits.
std::string render_decimal(const BigFloat& v, int digits);

} // namespace holonorm
