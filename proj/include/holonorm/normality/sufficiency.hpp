#pragma once

#include "holonorm/asym/asymptotics.hpp"
#include "holonorm/asym/ratio.hpp"
#include "holonorm/asym/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holonorm {

enum class Verdict { AsymptoticallyNormal, Inconclusive };

const char* verdict_name(Verdict v);

/// Coefficient of n^exponent in the variance series, with the largest term that fed it.
struct SeriesTerm {
    Rational exponent;
    BigFloat coeff;
    BigFloat scale;
    bool zero = false;
};

struct SufficiencyReport {
    // (1): the ratio limits a = lim F1/(F0 n^(r2-r1)) and b = lim F2/(F0 n^(r3-r1)) exist.
    bool condition1 = false;
    RatioEstimate a;
    RatioEstimate b;

    // (2): the highest surviving exponent m of sigma^2 is >= 1 with a positive coefficient.
    bool condition2 = false;
    std::optional<Rational> m;
    BigFloat leading;
    bool ambiguous = false;

    Rational mu_exponent; // r2 - r1
    BigFloat mu_leading;  // a
    std::vector<SeriesTerm> mu_terms;     // a n^g2 A, highest first; scale is |a|
    std::vector<SeriesTerm> sigma2_terms; // exponents >= 1, highest first
    int digits = 0;                       // working digits behind the zero test

    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
};

/// sigma^2 ~ b n^g3 B + a n^g2 A - a^2 n^(2 g2) A^2 with A = S1/S0, B = S2/S0 for the normalized
/// series S_j = 1 + sum b_s n^-s of F0, F1, F2 and g_j = r_j - r_1. A coefficient is zero when
/// |c| <= 10^(-digits/2) times the largest contribution at its exponent.
SufficiencyReport check_sufficiency(const std::array<AsymptoticForm, 3>& forms, const RatioEstimate& a,
                                    const RatioEstimate& b);

/// Same test on precomputed series: A at anchor g2 and B at anchor g3.
SufficiencyReport check_sufficiency(const TruncSeries& A, const TruncSeries& B, const RatioEstimate& a,
                                    const RatioEstimate& b, int series_digits);

} // namespace holonorm
