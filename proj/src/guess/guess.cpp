#include "holonorm/guess/guess.hpp"

#include "holonorm/exact/nullspace.hpp"

namespace holonorm {

size_t GuessConfig::required_terms() const {
    return static_cast<size_t>((max_order + 1) * (max_degree + 1) + max_order + verify_count);
}

namespace {

constexpr long kFirstRow = 1;

// Row n of the system sum_i sum_j c_ij n^j t(n+i) = 0; column i*(degree+1)+j.
void fill_row(Matrix<Rational>& m, size_t row, long n, int order, int degree, std::span<const Rational> t) {
    for (int i = 0; i <= order; ++i) {
        Rational npow = 1;
        for (int j = 0; j <= degree; ++j) {
            m(row, static_cast<size_t>(i * (degree + 1) + j)) = npow * t[static_cast<size_t>(n + i)];
            npow *= n;
        }
    }
}

std::vector<std::vector<Rational>> solve(std::span<const Rational> t, int order, int degree, long rows) {
    const size_t unknowns = static_cast<size_t>((order + 1) * (degree + 1));
    Matrix<Rational> m(static_cast<size_t>(rows), unknowns);
    for (long r = 0; r < rows; ++r)
        fill_row(m, static_cast<size_t>(r), kFirstRow + r, order, degree, t);
    return nullspace_ff(m);
}

RecurrenceOperator to_operator(const std::vector<Rational>& v, int order, int degree) {
    std::vector<RatFunc> coeffs;
    for (int i = 0; i <= order; ++i) {
        std::vector<Rational> p(v.begin() + i * (degree + 1), v.begin() + (i + 1) * (degree + 1));
        coeffs.emplace_back(Poly(std::move(p)));
    }
    return RecurrenceOperator(std::move(coeffs));
}

bool annihilates(const RecurrenceOperator& op, std::span<const Rational> t, long from) {
    if (op.order() < 0)
        return false;
    auto fn = ore_apply(op, [&](long n) { return t[static_cast<size_t>(n)]; });
    for (long n = from; n + op.order() < static_cast<long>(t.size()); ++n)
        if (fn(n) != 0)
            return false;
    return true;
}

std::optional<Recurrence> accept(const RecurrenceOperator& op, int order, std::span<const Rational> t) {
    // A candidate whose top coefficient vanishes is really of lower order.
    if (op.order() != order || !annihilates(op, t, kFirstRow))
        return std::nullopt;
    const long start = annihilates(op, t, 0) ? 0 : kFirstRow;
    Recurrence rec = Recurrence::from_operator(op, start, t);
    return rec;
}

std::optional<Recurrence> search_cell(std::span<const Rational> t, int order, int degree) {
    const long windows = static_cast<long>(t.size()) - order - kFirstRow;
    const long unknowns = (order + 1) * (degree + 1);
    for (long rows : {unknowns + 2, unknowns + 8, windows}) {
        rows = std::min(rows, windows);
        auto basis = solve(t, order, degree, rows);
        // Solutions of the full system lie in every subsystem's nullspace.
        if (basis.empty())
            return std::nullopt;
        for (const auto& v : basis)
            if (auto rec = accept(to_operator(v, order, degree), order, t))
                return rec;
        if (basis.size() == 1 && rows < windows) {
            // The unique candidate failed, so the full system has no solution here.
            return std::nullopt;
        }
        if (rows == windows)
            break;
    }
    return std::nullopt;
}

} // namespace

std::optional<Recurrence> try_guess_recurrence(std::span<const Rational> terms, const GuessConfig& cfg) {
    if (cfg.max_order < 1 || cfg.max_degree < 0 || cfg.verify_count < 0)
        throw InvalidInput("guess bounds must be positive");
    if (terms.size() < cfg.required_terms())
        throw InvalidInput("guessing needs at least " + std::to_string(cfg.required_terms()) + " terms, got " +
                           std::to_string(terms.size()));
    for (int order = 1; order <= cfg.max_order; ++order)
        for (int degree = 0; degree <= cfg.max_degree; ++degree)
            if (auto rec = search_cell(terms, order, degree))
                return rec;
    return std::nullopt;
}

Recurrence guess_recurrence(std::span<const Rational> terms, const GuessConfig& cfg) {
    if (auto rec = try_guess_recurrence(terms, cfg))
        return *rec;
    throw NotFound("no recurrence of order <= " + std::to_string(cfg.max_order) + " and degree <= " +
                   std::to_string(cfg.max_degree) + " annihilates the terms");
}

VerifyResult verify_recurrence(const Recurrence& rec, std::span<const Rational> terms) {
    VerifyResult res;
    auto fn = ore_apply(rec.to_operator(), [&](long n) { return terms[static_cast<size_t>(n)]; });
    for (long n = rec.start; n + rec.order() < static_cast<long>(terms.size()); ++n)
        if (fn(n) != 0) {
            res.ok = false;
            res.first_failure = n;
            break;
        }
    return res;
}

} // namespace holonorm
