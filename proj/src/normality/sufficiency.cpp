#include "holonorm/normality/sufficiency.hpp"

#include <algorithm>
#include <cmath>

namespace holonorm {

const char* verdict_name(Verdict v) {
    return v == Verdict::AsymptoticallyNormal ? "AsymptoticallyNormal" : "Inconclusive";
}

SufficiencyReport check_sufficiency(const TruncSeries& A, const TruncSeries& B, const RatioEstimate& a,
                                    const RatioEstimate& b, int series_digits) {
    SufficiencyReport rep;
    rep.a = a;
    rep.b = b;
    rep.condition1 = a.stable && b.stable;
    rep.mu_exponent = A.anchor();
    rep.mu_leading = a.value;
    rep.digits = std::min({series_digits, a.digits(), b.digits()});

    const int prec = std::max({A.precision(), B.precision(), a.value.precision()});
    const BigFloat av = a.value.with_precision(prec), bv = b.value.with_precision(prec);
    const TruncSeries x = bv * B;           // anchor g3
    const TruncSeries y = av * A;           // anchor g2
    const TruncSeries z = (av * av) * (A * A); // anchor 2 g2

    Rational top = std::max({x.anchor(), y.anchor(), z.anchor()});
    auto lowest = [](const TruncSeries& s) { return s.anchor() - s.order(); };
    const Rational floor_exp = std::max({lowest(x), lowest(y), lowest(z)});
    const BigFloat rel = BigFloat::from_double(std::pow(10.0, -rep.digits / 2.0), prec);

    for (Rational e = y.anchor(); e >= lowest(y); e -= 1) {
        SeriesTerm t;
        t.exponent = e;
        t.coeff = y.at_exponent(e);
        t.scale = abs(av);
        t.zero = e != y.anchor() && abs(t.coeff) <= rel * t.scale;
        rep.mu_terms.push_back(t);
    }

    for (Rational e = top; e >= floor_exp && e >= 1; e -= 1) {
        SeriesTerm t;
        t.exponent = e;
        const BigFloat cx = x.at_exponent(e), cy = y.at_exponent(e), cz = z.at_exponent(e);
        t.coeff = cx + cy - cz;
        t.scale = max(max(abs(cx), abs(cy)), abs(cz));
        t.zero = t.scale.is_zero() || abs(t.coeff) <= rel * t.scale;
        rep.sigma2_terms.push_back(t);
        if (!t.zero && !rep.m) {
            rep.m = e;
            rep.leading = t.coeff;
            rep.ambiguous = abs(t.coeff) < BigFloat(10L, prec) * rel * t.scale;
        }
    }
    if (floor_exp > 1 && !rep.m)
        rep.reason = "series too short to reach exponent 1";

    rep.condition2 = rep.m && *rep.m >= 1 && rep.leading.sign() > 0 && !rep.ambiguous;
    if (!rep.condition1)
        rep.reason = "ratio limits did not stabilize";
    else if (rep.ambiguous)
        rep.reason = "cancellation-ambiguous leading coefficient";
    else if (!rep.m)
        rep.reason = rep.reason.empty() ? "no surviving variance term of exponent >= 1" : rep.reason;
    else if (!rep.condition2)
        rep.reason = "leading variance coefficient is not positive";
    rep.verdict = rep.condition1 && rep.condition2 ? Verdict::AsymptoticallyNormal : Verdict::Inconclusive;
    return rep;
}

SufficiencyReport check_sufficiency(const std::array<AsymptoticForm, 3>& forms, const RatioEstimate& a,
                                    const RatioEstimate& b) {
    for (int j = 1; j < 3; ++j)
        if (!forms[0].lambda_enclosure.overlaps(forms[static_cast<size_t>(j)].lambda_enclosure)) {
            SufficiencyReport rep;
            rep.a = a;
            rep.b = b;
            rep.reason = "dominant roots of the three sequences differ";
            return rep;
        }
    const TruncSeries s0 = TruncSeries::from_form(forms[0]);
    const TruncSeries A = TruncSeries::from_form(forms[1]) / s0;
    const TruncSeries B = TruncSeries::from_form(forms[2]) / s0;
    int digits = std::min({forms[0].agreed_digits, forms[1].agreed_digits, forms[2].agreed_digits});
    SufficiencyReport rep = check_sufficiency(A, B, a, b, digits);
    if (rep.condition1 && !(A.anchor() > 0 && B.anchor() > A.anchor())) {
        rep.condition2 = false;
        rep.verdict = Verdict::Inconclusive;
        rep.reason = "exponents r1 < r2 < r3 do not hold";
    }
    return rep;
}

} // namespace holonorm
