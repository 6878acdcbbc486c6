#include "holonorm/exact/sturm.hpp"

#include "holonorm/errors.hpp"

namespace holonorm {

namespace {

int sign_at(const Poly& p, const Rational& x) { return sgn(p(x)); }

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++variations;
        last = s;
    }
    return variations;
}

} // namespace

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("Sturm chain of the zero polynomial");
    Poly sf = square_free_part(p).primitive();
    chain_.push_back(sf);
    if (sf.degree() <= 0)
        return;
    chain_.push_back(sf.derivative().primitive());
    while (true) {
        const Poly& a = chain_[chain_.size() - 2];
        const Poly& b = chain_.back();
        Poly r = divrem(a, b).second;
        if (r.is_zero())
            break;
        chain_.push_back((-r).content_free());
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_)
        signs.push_back(sign_at(q, x));
    return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        int s = sgn(q.leading());
        if (!positive && q.degree() % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::count(const Endpoint& lo, const Endpoint& hi) const {
    int vlo = lo ? variations_at(*lo) : variations_at_infinity(false);
    int vhi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return vlo - vhi;
}

int sturm_count(const Poly& p, const Endpoint& lo, const Endpoint& hi) {
    if (lo && hi && *lo >= *hi)
        return 0;
    return SturmChain(p).count(lo, hi);
}

int real_root_count_with_multiplicity(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("real roots of the zero polynomial");
    int total = 0;
    auto factors = square_free_factorization(p);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0)
            continue;
        total += static_cast<int>(i + 1) * SturmChain(factors[i]).count(std::nullopt, std::nullopt);
    }
    return total;
}

Rational root_bound(const Poly& p) {
    if (p.degree() <= 0)
        return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.leading());
        if (r > m)
            m = r;
    }
    Rational bound = 1;
    while (bound <= m + 1)
        bound *= 2;
    return bound;
}

RootEnclosure isolate_root(const Poly& p, const RootSelector& selector, int precision) {
    if (p.is_zero())
        throw InvalidInput("root isolation of the zero polynomial");
    SturmChain chain(p);
    const Poly& sf = chain.square_free();
    Rational bound = root_bound(sf);

    Rational lo = -bound, hi = bound;
    if (selector.kind == RootSelector::Kind::Interval) {
        if (selector.lo && *selector.lo > lo)
            lo = *selector.lo;
        if (selector.hi && *selector.hi < hi)
            hi = *selector.hi;
    }
    if (lo >= hi || chain.count(lo, hi) == 0)
        throw NoSuchRoot("no real root matches the selector");

    // Shrink (lo, hi] until it holds exactly one root, always keeping the largest one.
    while (chain.count(lo, hi) > 1) {
        Rational mid = (lo + hi) / 2;
        if (chain.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    if (sf(hi) == 0)
        return {hi, hi};

    // One simple root in (lo, hi): bisect on the sign change.
    int shi = sgn(sf(hi));
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(precision - 1));
    Rational rel(Integer(1), denom); // 2^(1-P)
    for (;;) {
        bool straddles_zero = lo < 0 && hi > 0;
        if (!straddles_zero) {
            Rational mag = lo >= 0 ? lo : -hi;
            if (hi - lo <= rel * mag)
                break;
        }
        Rational mid = (lo + hi) / 2;
        int s = sgn(sf(mid));
        if (s == 0)
            return {mid, mid};
        if (s == shi)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

BigFloat enclosure_value(const RootEnclosure& e, int precision) { return BigFloat(e.midpoint(), precision); }

} // namespace holonorm
