#include "holonorm/ore/ore_poly.hpp"

namespace holonorm {

TermFn ore_apply(const RecurrenceOperator& op, TermFn terms) {
    return [op, terms = std::move(terms)](long n) {
        Rational acc = 0;
        const Rational at(n);
        for (int i = 0; i <= op.order(); ++i) {
            const RatFunc& c = op.coeffs()[static_cast<size_t>(i)];
            if (c.is_zero())
                continue;
            if (c.den()(at) == 0)
                throw PoleError(n, "coefficient " + std::to_string(i) + " has a pole at n = " + std::to_string(n));
            acc += c(at) * terms(n + i);
        }
        return acc;
    };
}

std::vector<Rational> ore_apply(const RecurrenceOperator& op, std::span<const Rational> terms, long first) {
    std::vector<Rational> out;
    if (op.is_zero()) {
        out.assign(terms.size(), Rational(0));
        return out;
    }
    const long windows = static_cast<long>(terms.size()) - op.order();
    if (windows <= 0)
        return out;
    auto fn = ore_apply(op, [&](long n) { return terms[static_cast<size_t>(n - first)]; });
    out.reserve(static_cast<size_t>(windows));
    for (long j = 0; j < windows; ++j)
        out.push_back(fn(first + j));
    return out;
}

RecurrenceOperator at_x(const XOperator& op, const Rational& x) {
    std::vector<RatFunc> v;
    v.reserve(op.coeffs().size());
    for (const auto& c : op.coeffs()) {
        Poly den = c.den().at_x(x);
        if (den.is_zero())
            throw DivisionByZero("coefficient denominator vanishes at x = " + to_string(x));
        v.emplace_back(c.num().at_x(x), std::move(den));
    }
    return RecurrenceOperator(std::move(v));
}

XOperator derivative_x(const XOperator& op) {
    std::vector<BiFrac> v;
    v.reserve(op.coeffs().size());
    for (const auto& c : op.coeffs())
        v.push_back(c.derivative_x());
    return XOperator(std::move(v));
}

XOperator derivative_closure(const XOperator& l1) {
    const XOperator l2 = derivative_x(l1);
    if (l2.is_zero())
        return l1.normalized();
    const auto res = lclm(l1, l2);
    // L1 f' = -L2 f, so V L1 f' = -V L2 f = -U L1 f = 0.
    return (res.v * l1).normalized();
}

} // namespace holonorm
