#include "holonorm/pipeline/analysis.hpp"

#include <algorithm>
#include <typeinfo>

namespace holonorm {

void AnalysisConfig::validate() const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok)
            throw InvalidInput(what);
    };
    need(n_max_terms >= 4, "terms must be at least 4");
    need(guess.max_order > 0 && guess.max_degree >= 0 && guess.verify_count > 0, "guess bounds must be positive");
    need(M > 0, "series order must be positive");
    need(precision >= 64, "precision must be at least 64 bits");
    need(depth > 0, "extrapolation depth must be positive");
    need(sturm_bound > 0 && sturm_bound <= n_max_terms, "sturm bound must be in 1..terms");
    for (long n : stats_n)
        need(n > 0 && n <= n_max_terms, "stats n-list entries must be in 1..terms");
}

std::optional<double> AnalysisReport::mu_leading() const {
    if (!a)
        return std::nullopt;
    return a->value.to_double();
}

std::optional<double> AnalysisReport::sigma2_leading() const {
    if (!sufficiency || !sufficiency->m)
        return std::nullopt;
    return sufficiency->leading.to_double();
}

std::optional<Rational> exact_lambda(const AsymptoticForm& form) {
    const int prec = form.lambda.precision();
    auto cand = rational_reconstruct(form.lambda, 1L << 20, pow(BigFloat(2L, prec), -static_cast<long>(prec / 2)));
    if (!cand || form.char_poly(*cand) != 0 || !form.lambda_enclosure.contains(*cand))
        return std::nullopt;
    return cand;
}

namespace {

const char* fn_name(size_t j) {
    static const char* names[] = {"F0", "F1", "F2"};
    return names[j];
}

std::string error_type(const std::exception& e) {
    if (const auto* u = dynamic_cast<const Unsupported*>(&e))
        return std::string("Unsupported(") + kind_name(u->kind()) + ")";
    if (dynamic_cast<const NotFound*>(&e))
        return "NotFound";
    if (dynamic_cast<const ZeroVariance*>(&e))
        return "ZeroVariance";
    if (dynamic_cast<const AllZeroRow*>(&e))
        return "AllZeroRow";
    if (dynamic_cast<const UnstableExtrapolation*>(&e))
        return "UnstableExtrapolation";
    if (dynamic_cast<const PoleError*>(&e))
        return "PoleError";
    if (dynamic_cast<const DivisionByZero*>(&e))
        return "DivisionByZero";
    if (dynamic_cast<const NonIntegerArgument*>(&e))
        return "NonIntegerArgument";
    if (dynamic_cast<const NoSuchRoot*>(&e))
        return "NoSuchRoot";
    if (dynamic_cast<const InvalidInput*>(&e))
        return "InvalidInput";
    return "Error";
}

// Exact variance sequence vanishes wherever it is defined.
bool degenerate_variance(const std::array<std::vector<Rational>, 3>& F) {
    bool seen = false;
    for (size_t n = 1; n < F[0].size(); ++n) {
        if (F[0][n] == 0)
            continue;
        const Rational m1 = F[1][n] / F[0][n];
        if (F[2][n] / F[0][n] + m1 - m1 * m1 != 0)
            return false;
        seen = true;
    }
    return seen;
}

} // namespace

AnalysisReport analyze(const CoeffTriangle& triangle, const AnalysisConfig& cfg) {
    cfg.validate();
    AnalysisReport rep;
    rep.sequence = triangle.name;
    rep.definition = triangle.definition;
    rep.symmetric = triangle.symmetric;
    rep.n_max_terms = cfg.n_max_terms;
    rep.config = cfg;

    bool blocked = false; // a verdict-relevant stage failed
    auto warn = [&](const std::string& stage, const std::string& type, const std::string& msg, bool blocks = true) {
        rep.warnings.push_back({stage, type, msg});
        blocked = blocked || blocks;
    };
    auto finish = [&]() {
        rep.verdict = Verdict::Inconclusive;
        rep.statement = "inconclusive";
        if (!rep.warnings.empty())
            rep.statement += ": " + rep.warnings.front().stage + " " + rep.warnings.front().type;
        return rep;
    };

    RowData data;
    try {
        data = eval_rows(triangle, cfg.n_max_terms);
    } catch (const std::exception& e) {
        warn("terms", error_type(e), e.what());
        return finish();
    }
    rep.first_negative_row = data.first_negative_row;
    if (data.first_negative_row)
        warn("terms", "NegativeCoefficients", "row " + std::to_string(*data.first_negative_row) +
                                                  " has a negative coefficient");
    if (degenerate_variance(data.F)) {
        warn("moments", "ZeroVariance", "every row is a point mass");
        return finish();
    }

    // Recurrences: guessed on a prefix, verified on every term.
    const size_t guess_terms = std::min(data.F[0].size(), 2 * cfg.guess.required_terms());
    for (size_t j = 0; j < 3; ++j) {
        try {
            auto rec = guess_recurrence(std::span<const Rational>(data.F[j]).first(guess_terms), cfg.guess);
            rep.verification[j] = verify_recurrence(rec, data.F[j]);
            if (!rep.verification[j]->ok)
                warn("guess", "VerificationFailed",
                     std::string(fn_name(j)) + " recurrence fails at n = " +
                         std::to_string(rep.verification[j]->first_failure.value_or(-1)));
            rep.recurrences[j] = std::move(rec);
        } catch (const std::exception& e) {
            warn("guess", error_type(e), std::string(fn_name(j)) + ": " + e.what());
        }
    }

    AsymConfig acfg;
    acfg.M = cfg.M;
    acfg.precision = cfg.precision;
    for (size_t j = 0; j < 3; ++j) {
        if (!rep.recurrences[j])
            continue;
        try {
            rep.forms[j] = expand_asymptotics(*rep.recurrences[j], acfg);
            rep.residuals[j] = residual_check(*rep.recurrences[j], *rep.forms[j]);
            if (!rep.residuals[j]->ok)
                warn("asymptotics", "ResidualCheckFailed",
                     std::string(fn_name(j)) + " residual slope " + std::to_string(rep.residuals[j]->slope));
        } catch (const std::exception& e) {
            warn("asymptotics", error_type(e), std::string(fn_name(j)) + ": " + e.what());
        }
    }

    const bool have_forms = rep.forms[0] && rep.forms[1] && rep.forms[2];
    if (have_forms) {
        bool rational = true;
        for (size_t j = 0; j < 3; ++j)
            if (!rep.forms[j]->r_rational()) {
                rational = false;
                warn("ratios", "NonRationalExponent", std::string(fn_name(j)) + " exponent r = " + rep.forms[j]->r_text());
            }
        if (rational) {
            RatioConfig rcfg;
            rcfg.depth = cfg.depth;
            rcfg.precision = std::max(cfg.precision, 512);
            auto ratio = [&](size_t j) -> std::optional<RatioEstimate> {
                const Rational gap = *rep.forms[j]->r_exact - *rep.forms[0]->r_exact;
                try {
                    return estimate_ratio(data.F[j], data.F[0], gap, rcfg);
                } catch (const UnstableExtrapolation& e) {
                    warn("ratios", "UnstableExtrapolation", std::string(fn_name(j)) + "/F0: " + e.what());
                    return e.estimate();
                } catch (const std::exception& e) {
                    warn("ratios", error_type(e), std::string(fn_name(j)) + "/F0: " + e.what());
                    return std::nullopt;
                }
            };
            rep.a = ratio(1);
            rep.b = ratio(2);
            if (rep.a && rep.b) {
                try {
                    rep.sufficiency = check_sufficiency({*rep.forms[0], *rep.forms[1], *rep.forms[2]}, *rep.a, *rep.b);
                    if (rep.sufficiency->verdict != Verdict::AsymptoticallyNormal)
                        warn("sufficiency", "ConditionNotMet", rep.sufficiency->reason);
                } catch (const std::exception& e) {
                    warn("sufficiency", error_type(e), e.what());
                }
            }
        }
    }

    if (triangle.has_rows()) {
        try {
            // Leading rows that vanish identically carry no distribution and are skipped.
            size_t skip = 0;
            while (skip < data.rows.size() &&
                   std::all_of(data.rows[skip].begin(), data.rows[skip].end(), [](const Rational& c) { return c == 0; }))
                ++skip;
            const size_t upto = static_cast<size_t>(cfg.sturm_bound) + 1;
            if (skip > 0)
                warn("sturm", "ZeroRows", "rows 0.." + std::to_string(skip - 1) + " vanish and were skipped", false);
            if (skip >= upto)
                throw AllZeroRow("every row up to the Sturm bound vanishes");
            rep.real_rooted = real_rooted_upto(std::span<const std::vector<Rational>>(data.rows).subspan(skip, upto - skip));
            rep.real_rooted->bound += static_cast<long>(skip);
            if (rep.real_rooted->first_failure)
                *rep.real_rooted->first_failure += static_cast<long>(skip);
            if (!rep.real_rooted->all_verified)
                warn("sturm", "NotRealRooted",
                     "row " + std::to_string(rep.real_rooted->first_failure.value_or(-1)) + " is not real-rooted");
        } catch (const std::exception& e) {
            warn("sturm", error_type(e), e.what());
        }
    } else {
        warn("sturm", "RowsUnavailable", "real-rootedness needs the coefficient rows");
    }

    if (cfg.run_stats && triangle.has_rows()) {
        for (long n : cfg.stats_n) {
            try {
                auto s = limit_stats(data.rows[static_cast<size_t>(n)]);
                s.n = n;
                rep.stats.push_back(s);
            } catch (const std::exception& e) {
                warn("stats", error_type(e), "n = " + std::to_string(n) + ": " + e.what(), false);
            }
        }
    }

    if (blocked || !rep.sufficiency || rep.sufficiency->verdict != Verdict::AsymptoticallyNormal)
        return finish();
    rep.verdict = Verdict::AsymptoticallyNormal;
    rep.statement = "asymptotically normal by the ratio-limit sufficiency criterion, real-rootedness verified for n <= " +
                    std::to_string(rep.real_rooted->bound) + " (guessed recurrences verified on " +
                    std::to_string(data.F[0].size()) + " terms)";
    return rep;
}

} // namespace holonorm
