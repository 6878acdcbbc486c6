#include "holonorm/pipeline/report.hpp"

#include "holonorm/exact/paired.hpp"
#include "holonorm/ore/recurrence_json.hpp"

#include <cstdio>
#include <sstream>

namespace holonorm {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string rat(const Rational& q) { return q.get_str(); }

// Half-width of a rational interval, 3 significant digits.
std::string radius_text(const RootEnclosure& e) {
    const Rational half = e.width() / 2;
    if (half == 0)
        return "0";
    return BigFloat(half, 64).to_string(3);
}

json lambda_json(const AsymptoticForm& f) {
    json j;
    if (auto q = exact_lambda(f)) {
        j["value"] = rat(*q) + " +/- 0";
        j["exact"] = rat(*q);
    } else {
        j["value"] = render_decimal(f.lambda, f.agreed_digits) + " +/- " + radius_text(f.lambda_enclosure);
        j["exact"] = nullptr;
    }
    return j;
}

json form_json(size_t idx, const AsymptoticForm& f, const std::optional<ResidualCheck>& res) {
    json j;
    j["function"] = "F" + std::to_string(idx);
    j["char_poly"] = f.char_poly.to_string("t");
    j["lambda"] = lambda_json(f);
    j["r"] = f.r_rational() ? rat(*f.r_exact) : render_decimal(f.r, f.agreed_digits);
    j["r_exact"] = f.r_rational();
    j["b"] = json::array();
    for (const auto& c : f.b)
        j["b"].push_back(render_decimal(c, f.agreed_digits));
    j["M"] = std::to_string(f.M);
    j["agreed_digits"] = std::to_string(f.agreed_digits);
    j["precision"] = std::to_string(f.precision);
    if (res) {
        j["residual_slope"] = fmt_double(res->slope);
        j["residual_ok"] = res->ok;
    }
    j["provenance"] = "paired-precision expansion of the guessed recurrence";
    return j;
}

json ratio_json(const RatioEstimate& r, const Rational& gap) {
    return {{"value", render_decimal(r.value, r.digits())},
            {"gap", rat(gap)},
            {"stability", r.stability.to_string(3)},
            {"depth", std::to_string(r.depth)},
            {"last_index", std::to_string(r.last_index)},
            {"stable", r.stable},
            {"provenance", "extrapolated"}};
}

json terms_json(const std::vector<SeriesTerm>& terms, int digits) {
    json out = json::array();
    for (const auto& t : terms)
        out.push_back({{"exponent", rat(t.exponent)},
                       {"coeff", t.zero ? std::string("0") : render_decimal(t.coeff, digits)},
                       {"zero", t.zero}});
    return out;
}

} // namespace

nlohmann::json asymptotic_json(const AsymptoticForm& form, const std::string& function) {
    json j = form_json(0, form, std::nullopt);
    j["function"] = function;
    return j;
}

nlohmann::json report_json(const AnalysisReport& rep) {
    json j;
    j["schema"] = 1;
    j["sequence"] = {{"name", rep.sequence},
                     {"definition", rep.definition},
                     {"symmetric", rep.symmetric},
                     {"terms", std::to_string(rep.n_max_terms + 1)}};

    j["recurrences"] = json::array();
    for (size_t i = 0; i < 3; ++i) {
        if (!rep.recurrences[i])
            continue;
        json r = *rep.recurrences[i];
        r["function"] = "F" + std::to_string(i);
        r["order"] = std::to_string(rep.recurrences[i]->order());
        r["degree"] = std::to_string(rep.recurrences[i]->degree());
        r["verified"] = rep.verification[i] && rep.verification[i]->ok;
        r["verified_terms"] = std::to_string(rep.n_max_terms + 1);
        r["provenance"] = "guessed";
        j["recurrences"].push_back(std::move(r));
    }

    j["asymptotics"] = json::array();
    for (size_t i = 0; i < 3; ++i)
        if (rep.forms[i])
            j["asymptotics"].push_back(form_json(i, *rep.forms[i], rep.residuals[i]));

    j["ratios"] = json::object();
    if (rep.a && rep.forms[0] && rep.forms[1] && rep.forms[1]->r_exact)
        j["ratios"]["a"] = ratio_json(*rep.a, *rep.forms[1]->r_exact - *rep.forms[0]->r_exact);
    else
        j["ratios"]["a"] = nullptr;
    if (rep.b && rep.forms[0] && rep.forms[2] && rep.forms[2]->r_exact)
        j["ratios"]["b"] = ratio_json(*rep.b, *rep.forms[2]->r_exact - *rep.forms[0]->r_exact);
    else
        j["ratios"]["b"] = nullptr;

    json t;
    if (const auto& s = rep.sufficiency) {
        t["condition1"] = s->condition1;
        t["condition2"] = s->condition2;
        t["m"] = s->m ? json(rat(*s->m)) : json(nullptr);
        t["leading"] = s->m ? json(render_decimal(s->leading, s->digits)) : json(nullptr);
        t["ambiguous"] = s->ambiguous;
        t["digits"] = std::to_string(s->digits);
        t["mu"] = {{"exponent", rat(s->mu_exponent)},
                   {"leading", render_decimal(s->mu_leading, s->digits)},
                   {"terms", terms_json(s->mu_terms, s->digits)}};
        t["sigma2_terms"] = terms_json(s->sigma2_terms, s->digits);
        t["reason"] = s->reason;
    } else {
        t["condition1"] = false;
        t["condition2"] = false;
        t["m"] = nullptr;
        t["leading"] = nullptr;
    }
    t["verdict"] = verdict_name(rep.verdict);
    t["statement"] = rep.statement;
    j["theorem23"] = std::move(t);

    if (rep.real_rooted)
        j["real_rooted_upto"] = {{"bound", std::to_string(rep.real_rooted->bound)},
                                 {"all_verified", rep.real_rooted->all_verified},
                                 {"first_failure", rep.real_rooted->first_failure
                                                       ? json(std::to_string(*rep.real_rooted->first_failure))
                                                       : json(nullptr)}};
    else
        j["real_rooted_upto"] = nullptr;

    j["stats"] = json::array();
    for (const auto& s : rep.stats)
        j["stats"].push_back({{"n", std::to_string(s.n)},
                              {"mu", fmt_double(s.mu.get_d())},
                              {"sigma2", fmt_double(s.sigma2.get_d())},
                              {"kolmogorov", fmt_double(s.kolmogorov)},
                              {"llt_sup", fmt_double(s.llt_sup)}});

    j["warnings"] = json::array();
    for (const auto& w : rep.warnings)
        j["warnings"].push_back({{"stage", w.stage}, {"type", w.type}, {"message", w.message}});
    return j;
}

std::string render_report(const AnalysisReport& rep, OutputFormat format) {
    if (format == OutputFormat::Json)
        return report_json(rep).dump(2) + "\n";
    if (format == OutputFormat::Csv)
        return stats_csv(rep.stats);

    std::ostringstream out;
    out << "sequence: " << rep.sequence << "\n";
    if (!rep.definition.empty())
        out << "a(n,k) = " << rep.definition << "\n";
    for (size_t i = 0; i < 3; ++i) {
        if (rep.recurrences[i])
            out << "F" << i << " recurrence: " << rep.recurrences[i]->text() << "\n";
        if (const auto& f = rep.forms[i]) {
            out << "F" << i << " ~ C * lambda^n * n^r, lambda = "
                << (exact_lambda(*f) ? rat(*exact_lambda(*f)) : render_decimal(f->lambda, f->agreed_digits))
                << ", r = " << f->r_text() << "\n";
            for (size_t s = 0; s < f->b.size(); ++s)
                out << "  b" << s + 1 << " = " << render_decimal(f->b[s], f->agreed_digits) << "\n";
        }
    }
    if (const auto& s = rep.sufficiency) {
        out << "mu ~ " << render_decimal(s->mu_leading, std::min(s->digits, 16)) << " * n^" << rat(s->mu_exponent)
            << "\n";
        if (s->m)
            out << "sigma^2 ~ " << render_decimal(s->leading, std::min(s->digits, 16)) << " * n^" << rat(*s->m)
                << "\n";
        out << "condition (1): " << (s->condition1 ? "holds" : "fails") << "\n";
        out << "condition (2): " << (s->condition2 ? "holds" : "fails") << "\n";
    }
    if (const auto& r = rep.real_rooted) {
        out << "real-rooted for n <= " << r->bound << ": " << (r->all_verified ? "yes" : "no");
        if (r->first_failure)
            out << " (first failure at n = " << *r->first_failure << ")";
        out << "\n";
    }
    if (!rep.stats.empty())
        out << "\n" << stats_csv(rep.stats) << "\n";
    for (const auto& w : rep.warnings)
        out << "warning [" << w.stage << "] " << w.type << ": " << w.message << "\n";
    out << "verdict: " << verdict_name(rep.verdict) << " (" << rep.statement << ")\n";
    return out.str();
}

} // namespace holonorm
