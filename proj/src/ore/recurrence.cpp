#include "holonorm/ore/recurrence.hpp"
#include "holonorm/ore/recurrence_json.hpp"
#include "holonorm/ore/text.hpp"
#include "holonorm/exact/sturm.hpp"

#include <algorithm>

namespace holonorm {

int Recurrence::degree() const {
    int d = -1;
    for (const auto& p : coeffs)
        d = std::max(d, p.degree());
    return d;
}

RecurrenceOperator Recurrence::to_operator() const {
    std::vector<RatFunc> v;
    v.reserve(coeffs.size());
    for (const auto& p : coeffs)
        v.emplace_back(p);
    return RecurrenceOperator(std::move(v));
}

Recurrence Recurrence::from_operator(const RecurrenceOperator& op, long start, std::span<const Rational> terms) {
    if (op.is_zero())
        throw InvalidInput("zero operator is not a recurrence");
    Recurrence rec;
    const auto norm = op.normalized();
    for (const auto& c : norm.coeffs())
        rec.coeffs.push_back(c.num());
    rec.start = start;
    const size_t need = rec.initial_count();
    if (terms.size() < need)
        throw InvalidInput("need " + std::to_string(need) + " initial values, got " + std::to_string(terms.size()));
    rec.initial.assign(terms.begin(), terms.begin() + static_cast<long>(need));
    return rec;
}

namespace {

// Integer points k in (lo, hi] with p(k) = 0, found by Sturm splitting down to unit intervals.
void integer_roots_in(const SturmChain& chain, const Poly& p, long lo, long hi, std::vector<long>& out) {
    if (chain.count(Rational(lo), Rational(hi)) == 0)
        return;
    if (hi - lo == 1) {
        if (p(Rational(hi)) == 0)
            out.push_back(hi);
        return;
    }
    const long mid = lo + (hi - lo) / 2;
    integer_roots_in(chain, p, lo, mid, out);
    integer_roots_in(chain, p, mid, hi, out);
}

} // namespace

std::vector<long> nonnegative_integer_roots(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("zero polynomial has every root");
    std::vector<long> roots;
    if (p.degree() == 0)
        return roots;
    const Rational bound = root_bound(p);
    if (bound > Rational(1L << 40))
        throw InvalidInput("leading coefficient roots too large");
    const long hi = Integer(bound.get_num() / bound.get_den()).get_si() + 2;
    integer_roots_in(SturmChain(p), p, -1, hi, roots);
    return roots;
}

size_t Recurrence::initial_count() const {
    long base = start;
    for (long r : nonnegative_integer_roots(coeffs.back()))
        if (r >= start)
            base = std::max(base, r + 1);
    return static_cast<size_t>(base + order());
}

std::vector<Rational> Recurrence::generate(size_t count) const {
    std::vector<Rational> t(initial.begin(), initial.begin() + static_cast<long>(std::min(count, initial.size())));
    const int d = order();
    std::vector<Rational> p_at(coeffs.size());
    while (t.size() < count) {
        const long n = static_cast<long>(t.size()) - d;
        const Rational at(n);
        for (size_t i = 0; i < coeffs.size(); ++i)
            p_at[i] = coeffs[i](at);
        if (p_at.back() == 0)
            throw PoleError(n, "leading coefficient vanishes at n = " + std::to_string(n));
        Rational acc = 0;
        for (int i = 0; i < d; ++i)
            acc += p_at[static_cast<size_t>(i)] * t[static_cast<size_t>(n + i)];
        t.push_back(-acc / p_at.back());
    }
    return t;
}

std::string Recurrence::text() const { return operator_text(to_operator()); }

void to_json(nlohmann::json& j, const Recurrence& r) {
    nlohmann::json init = nlohmann::json::array();
    for (const auto& v : r.initial)
        init.push_back(to_string(v));
    j = nlohmann::json{{"operator", r.text()}, {"start", r.start}, {"initial", init}};
}

void from_json(const nlohmann::json& j, Recurrence& r) {
    RecurrenceOperator op = parse_operator(j.at("operator").get<std::string>());
    std::vector<Rational> init;
    for (const auto& v : j.at("initial"))
        init.push_back(parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
    r = Recurrence::from_operator(op, j.value("start", 0L), init);
}

} // namespace holonorm
