#include "doctest.h"

#include "holonorm/guess/guess.hpp"
#include "holonorm/normality/moments.hpp"
#include "holonorm/normality/sufficiency.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace holonorm;

namespace {

std::vector<Integer> binomial_row(long n) {
    std::vector<Integer> row;
    for (long k = 0; k <= n; ++k)
        row.push_back(testsupport::binom(n, k));
    return row;
}

std::vector<Rational> rat_row(const std::vector<Integer>& r) {
    return std::vector<Rational>(r.begin(), r.end());
}

SufficiencyReport analyze_family(std::vector<Integer> (*row)(long), const Rational& scale = 1) {
    std::vector<Rational> f[3];
    std::array<AsymptoticForm, 3> forms;
    for (int j = 0; j < 3; ++j) {
        for (long m = 0; m < 200; ++m)
            f[j].push_back(scale * testsupport::row_derivative(row(m), j, Rational(1)));
        forms[static_cast<size_t>(j)] = expand_asymptotics(guess_recurrence(std::span<const Rational>(f[j]).first(80)));
    }
    auto a = estimate_ratio(f[1], f[0], *forms[1].r_exact - *forms[0].r_exact);
    auto b = estimate_ratio(f[2], f[0], *forms[2].r_exact - *forms[0].r_exact);
    return check_sufficiency(forms, a, b);
}

struct Oracle {
    const char* name;
    long n;
    double mu, var, kol, llt;
};

// Frozen from tests/oracles/limit_stats_oracle.py (independent double-precision brute force).
const Oracle kOracle[] = {
    {"binomial", 25, 12.5, 6.25, 0.079259709439103, 0.0938141326842624},
    {"binomial", 50, 25, 12.5, 0.0561375863296085, 0.0683315892269202},
    {"binomial", 100, 50, 25, 0.0397946186935894, 0.0481854281489408},
    {"binomial", 200, 100, 50, 0.0281742395046282, 0.0342381627557682},
    {"binomial", 400, 200, 100, 0.0199346509818965, 0.0242192125787944},
    {"apery", 25, 15.4694187632267, 2.70301374551288, 0.121945420884814, 0.140843610776772},
    {"apery", 50, 30.9199976506874, 5.34162504092566, 0.0882203151807532, 0.104829432498812},
    {"apery", 100, 61.8215641631539, 10.6199169041901, 0.0626485077161709, 0.0747262038611612},
    {"apery", 200, 123.624897186843, 21.1770249473331, 0.0443303121447096, 0.0535694397728164},
    {"franel", 25, 12.5, 2.13987557025632, 0.133750386749351, 0.143766222492008},
    {"franel", 50, 25, 4.22271593001225, 0.0969103535365131, 0.111243551420819},
    {"franel", 100, 50, 8.38913578769166, 0.0688116522608619, 0.0809688689080536},
    {"franel", 200, 100, 16.7223456771742, 0.0487585882199853, 0.0583979367905058},
};

std::vector<Integer> (*row_fn(const std::string& name))(long) {
    if (name == "apery")
        return testsupport::apery_row;
    if (name == "franel")
        return testsupport::franel_row;
    return binomial_row;
}

} // namespace

TEST_CASE("exact moments") {
    auto m = exact_moments(rat_row(binomial_row(4)));
    CHECK(m.mu == 2);
    CHECK(m.sigma2 == 1);
    auto a = exact_moments(rat_row(testsupport::apery_row(2)));
    CHECK(a.mu == make_rational(24, 19));
    CHECK(a.sigma2 == make_rational(108, 361));
    auto f = exact_moments(rat_row(testsupport::franel_row(2)));
    CHECK(f.mu == 1);
    CHECK(f.sigma2 == make_rational(1, 5));
    CHECK_THROWS_AS(exact_moments(std::vector<Rational>{0, 0}), AllZeroRow);
    CHECK_THROWS_AS(exact_moments(std::vector<Rational>{1, -1}), InvalidInput);
}

TEST_CASE("moments match the probabilistic definition") {
    for (auto fn : {testsupport::apery_row, testsupport::franel_row, binomial_row})
        for (long n = 0; n <= 30; ++n) {
            auto row = rat_row(fn(n));
            auto m = exact_moments(row);
            Rational total = 0, first = 0, second = 0;
            for (const auto& x : row)
                total += x;
            for (size_t k = 0; k < row.size(); ++k) {
                Rational p = row[k] / total;
                first += p * static_cast<long>(k);
                second += p * (static_cast<long>(k) - m.mu) * (static_cast<long>(k) - m.mu);
            }
            CHECK(first == m.mu);
            CHECK(second == m.sigma2);
            CHECK(m.sigma2 >= 0);
            if (fn != testsupport::apery_row)
                CHECK(m.mu == make_rational(n, 2));
        }
}

TEST_CASE("sufficiency verdicts") {
    auto ap = analyze_family(testsupport::apery_row);
    CHECK(ap.verdict == Verdict::AsymptoticallyNormal);
    REQUIRE(ap.m);
    CHECK(*ap.m == 1);
    CHECK(std::abs(ap.leading.to_double() - (5 - 2 * std::sqrt(5.0)) / 5) < 1e-6);
    CHECK(ap.mu_exponent == 1);
    CHECK(std::abs(ap.mu_leading.to_double() - (std::sqrt(5.0) - 1) / 2) < 1e-8);
    REQUIRE(ap.sigma2_terms.size() == 2);
    CHECK(ap.sigma2_terms[0].exponent == 2);
    CHECK(ap.sigma2_terms[0].zero);

    auto fr = analyze_family(testsupport::franel_row);
    CHECK(fr.verdict == Verdict::AsymptoticallyNormal);
    CHECK(*fr.m == 1);
    CHECK(std::abs(fr.leading.to_double() - 1.0 / 12) < 1e-8);

    auto bi = analyze_family(binomial_row);
    CHECK(bi.verdict == Verdict::AsymptoticallyNormal);
    CHECK(*bi.m == 1);
    CHECK(std::abs(bi.leading.to_double() - 0.25) < 1e-12);
}

TEST_CASE("verdict invariant under row scaling") {
    auto base = analyze_family(testsupport::franel_row);
    auto scaled = analyze_family(testsupport::franel_row, make_rational(7, 3));
    CHECK(base.verdict == scaled.verdict);
    CHECK(*base.m == *scaled.m);
    CHECK(std::abs(base.leading.to_double() - scaled.leading.to_double()) < 1e-9);
}

TEST_CASE("sufficiency on synthetic series") {
    const int p = 256;
    auto bf = [&](double v) { return BigFloat::from_double(v, p); };
    RatioEstimate a, b;
    a.value = bf(0.5);
    b.value = bf(0.25);
    a.stability = BigFloat(p);
    b.stability = BigFloat(p);
    a.stable = b.stable = true;
    // A = 1 exactly, B = 1 - 1/n: sigma^2 = n/4.
    TruncSeries A(Rational(1), {bf(1), bf(0), bf(0)});
    TruncSeries B(Rational(2), {bf(1), bf(-1), bf(0)});
    auto rep = check_sufficiency(A, B, a, b, 40);
    CHECK(rep.verdict == Verdict::AsymptoticallyNormal);
    CHECK(std::abs(rep.leading.to_double() - 0.25) < 1e-15);

    // B = 1 - 3/n makes the linear term negative.
    TruncSeries Bneg(Rational(2), {bf(1), bf(-3), bf(0)});
    auto neg = check_sufficiency(A, Bneg, a, b, 40);
    CHECK(neg.verdict == Verdict::Inconclusive);
    CHECK_FALSE(neg.condition2);

    // B = 1 - 2/n cancels the linear term completely: no exponent >= 1 survives.
    TruncSeries Bzero(Rational(2), {bf(1), bf(-2), bf(0)});
    auto z = check_sufficiency(A, Bzero, a, b, 40);
    CHECK_FALSE(z.m.has_value());
    CHECK(z.verdict == Verdict::Inconclusive);

    a.stable = false;
    CHECK(check_sufficiency(A, B, a, b, 40).verdict == Verdict::Inconclusive);
}

TEST_CASE("real-rootedness up to a bound") {
    std::vector<std::vector<Rational>> ap, fr, bad;
    for (long n = 0; n <= 40; ++n) {
        ap.push_back(rat_row(testsupport::apery_row(n)));
        fr.push_back(rat_row(testsupport::franel_row(n)));
        std::vector<Rational> r(static_cast<size_t>(n) + 1, Rational(0));
        r.front() = 1;
        r.back() = 1;
        if (n == 0)
            r = {Rational(1)};
        bad.push_back(r);
    }
    auto ra = real_rooted_upto(ap);
    CHECK(ra.all_verified);
    CHECK(ra.bound == 40);
    CHECK(real_rooted_upto(fr).all_verified);
    auto rb = real_rooted_upto(bad);
    CHECK_FALSE(rb.all_verified);
    REQUIRE(rb.first_failure);
    CHECK(*rb.first_failure == 2);
}

TEST_CASE("limit statistics match the brute-force oracle") {
    for (const auto& o : kOracle) {
        CAPTURE(o.name);
        CAPTURE(o.n);
        auto st = limit_stats(rat_row(row_fn(o.name)(o.n)));
        CHECK(std::abs(st.mu.get_d() - o.mu) < 1e-9 * o.mu);
        CHECK(std::abs(st.sigma2.get_d() - o.var) < 1e-9 * o.var);
        CHECK(std::abs(st.kolmogorov - o.kol) < 1e-9);
        CHECK(std::abs(st.llt_sup - o.llt) < 1e-9);
    }
}

TEST_CASE("limit statistics decrease with n") {
    for (auto fn : {testsupport::apery_row, testsupport::franel_row, binomial_row}) {
        double prev_k = 2, prev_l = 2;
        for (long n : {25, 50, 100, 200}) {
            auto st = limit_stats(rat_row(fn(n)));
            CHECK(st.kolmogorov < prev_k);
            CHECK(st.llt_sup < prev_l);
            CHECK(st.kolmogorov >= 0);
            CHECK(st.kolmogorov <= 1);
            prev_k = st.kolmogorov;
            prev_l = st.llt_sup;
        }
    }
}

TEST_CASE("degenerate and scaled rows") {
    std::vector<Rational> atom(11, Rational(0));
    atom[5] = 1;
    auto st = limit_stats(atom, Rational(5), 1.0);
    CHECK(st.kolmogorov >= 0.5);
    CHECK_THROWS_AS(limit_stats(atom), ZeroVariance);
    CHECK_THROWS_AS(limit_stats(atom, Rational(5), 0.0), ZeroVariance);

    auto row = rat_row(testsupport::apery_row(30));
    auto scaled = row;
    for (auto& x : scaled)
        x *= make_rational(5, 11);
    CHECK(limit_stats(row).kolmogorov == limit_stats(scaled).kolmogorov);
}

TEST_CASE("stats csv") {
    std::vector<LimitStats> t{limit_stats(rat_row(binomial_row(4)))};
    auto csv = stats_csv(t);
    CHECK(csv.rfind("n,mu,sigma2,kolmogorov,llt_sup\n4,2,1,", 0) == 0);
}
