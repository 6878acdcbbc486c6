#include "holonorm/asym/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace holonorm {

int RatioEstimate::digits() const {
    if (stability.is_zero())
        return value.precision() * 3 / 10;
    BigFloat rel = stability / max(abs(value), BigFloat(1L, value.precision()));
    return std::max(0, static_cast<int>(std::floor(-log10(rel).to_double())));
}

namespace {

// P_{i,j} over points x_i..x_j, evaluated at 0; returns the diagonal estimates for depths 0..k.
template <class T>
std::vector<T> neville_at_zero(const std::vector<T>& x, const std::vector<T>& y) {
    const size_t k = x.size();
    std::vector<T> p = y, est;
    est.push_back(p.back());
    for (size_t len = 1; len < k; ++len) {
        for (size_t i = 0; i + len < k; ++i) {
            const size_t j = i + len;
            p[i] = (x[i] * p[i + 1] - x[j] * p[i]) / (x[i] - x[j]);
        }
        est.push_back(p[k - 1 - len]);
    }
    return est;
}

void check_lengths(std::span<const Rational> num, std::span<const Rational> den, const RatioConfig& cfg) {
    if (cfg.depth < 2)
        throw InvalidInput("extrapolation depth must be at least 2");
    if (num.size() != den.size())
        throw InvalidInput("numerator and denominator term lists differ in length");
    if (num.size() < static_cast<size_t>(cfg.depth) + 8)
        throw InvalidInput("ratio estimation needs at least depth + 8 terms");
}

RatioEstimate finish(std::vector<BigFloat> est, int depth, long last, const RatioConfig& cfg) {
    RatioEstimate out;
    out.value = est[static_cast<size_t>(depth)];
    out.depth = depth;
    out.last_index = last;
    BigFloat spread(out.value.precision());
    for (int a = depth - 2; a <= depth; ++a)
        for (int b = a + 1; b <= depth; ++b)
            spread = max(spread, abs(est[static_cast<size_t>(a)] - est[static_cast<size_t>(b)]));
    out.stability = spread;
    const BigFloat rel = spread / max(abs(out.value), BigFloat(1L, out.value.precision()));
    out.stable = rel.to_double() <= cfg.tolerance;
    if (!out.stable)
        throw UnstableExtrapolation("ratio extrapolation unstable: last depths disagree by " + rel.to_string(3), out);
    return out;
}

} // namespace

RatioEstimate estimate_ratio(std::span<const Rational> num, std::span<const Rational> den, const Rational& gap,
                             const RatioConfig& cfg) {
    check_lengths(num, den, cfg);
    if (!is_integer(gap))
        return estimate_ratio(num, den, BigFloat(gap, cfg.precision), cfg);
    const long g = gap.get_num().get_si();
    const long last = static_cast<long>(num.size()) - 1;
    std::vector<Rational> x, y;
    for (long n = last - cfg.depth; n <= last; ++n) {
        if (n <= 0)
            throw InvalidInput("extrapolation window reaches n = 0");
        const Rational& d = den[static_cast<size_t>(n)];
        if (d == 0)
            throw DivisionByZero("denominator term vanishes at n = " + std::to_string(n));
        Rational h = num[static_cast<size_t>(n)] / d;
        h /= (g >= 0 ? pow(Rational(n), static_cast<unsigned long>(g)) : 1 / pow(Rational(n), static_cast<unsigned long>(-g)));
        x.push_back(make_rational(1, n));
        y.push_back(h);
    }
    std::vector<BigFloat> est;
    for (const auto& e : neville_at_zero(x, y))
        est.emplace_back(e, cfg.precision);
    return finish(std::move(est), cfg.depth, last, cfg);
}

RatioEstimate estimate_ratio(std::span<const Rational> num, std::span<const Rational> den, const BigFloat& gap,
                             const RatioConfig& cfg) {
    check_lengths(num, den, cfg);
    const int prec = cfg.precision;
    const long last = static_cast<long>(num.size()) - 1;
    std::vector<BigFloat> x, y;
    for (long n = last - cfg.depth; n <= last; ++n) {
        if (n <= 0)
            throw InvalidInput("extrapolation window reaches n = 0");
        const Rational& d = den[static_cast<size_t>(n)];
        if (d == 0)
            throw DivisionByZero("denominator term vanishes at n = " + std::to_string(n));
        BigFloat nn(n, prec);
        x.push_back(BigFloat(1L, prec) / nn);
        y.push_back(BigFloat(num[static_cast<size_t>(n)] / d, prec) / pow(nn, gap.with_precision(prec)));
    }
    return finish(neville_at_zero(x, y), cfg.depth, last, cfg);
}

} // namespace holonorm
