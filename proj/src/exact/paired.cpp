#include "holonorm/exact/paired.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace holonorm {

int agreed_digits(const BigFloat& x, const BigFloat& y) {
    int prec = std::min(x.precision(), y.precision());
    int cap = static_cast<int>(std::floor(prec * std::log10(2.0)));
    BigFloat diff = abs(x - y);
    if (diff.is_zero())
        return cap;
    BigFloat scale = max(abs(y), BigFloat(1, prec));
    double rel = (diff / scale).to_double();
    if (rel <= 0)
        return cap;
    int d = static_cast<int>(std::floor(-std::log10(rel)));
    return std::clamp(d, 0, cap);
}

PairedResult paired_compute(const std::function<std::vector<BigFloat>(int precision)>& compute,
                            const PairedConfig& config) {
    int prec = config.precision;
    std::vector<BigFloat> low = compute(prec);
    PairedResult best;
    for (;;) {
        std::vector<BigFloat> high = compute(2 * prec);
        int agreed = std::numeric_limits<int>::max();
        for (size_t i = 0; i < low.size(); ++i)
            agreed = std::min(agreed, agreed_digits(low[i], high[i]));
        if (low.empty())
            agreed = static_cast<int>(prec * std::log10(2.0));
        if (agreed > best.agreed_digits || best.values.empty())
            best = PairedResult{high, agreed, prec};
        if (agreed >= config.target_digits || 2 * prec > config.precision_cap)
            return best;
        prec *= 2;
        low = std::move(high);
    }
}

std::string render_decimal(const BigFloat& v, int digits) {
    BigFloat threshold(1, v.precision());
    if (digits > 0) {
        BigFloat ten(10, v.precision());
        threshold = pow(ten, -static_cast<long>(digits));
    }
    if (abs(v) < threshold)
        return "0";
    return v.to_string(std::clamp(digits, 1, 25));
}

} // namespace holonorm
