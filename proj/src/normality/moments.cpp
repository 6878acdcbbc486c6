#include "holonorm/normality/moments.hpp"

#include "holonorm/exact/poly.hpp"
#include "holonorm/exact/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace holonorm {

MomentEstimates exact_moments(std::span<const Rational> row) {
    Rational s0 = 0, s1 = 0, s2 = 0;
    for (size_t k = 0; k < row.size(); ++k) {
        if (row[k] < 0)
            throw InvalidInput("negative coefficient at k = " + std::to_string(k));
        const Rational kk(static_cast<long>(k));
        s0 += row[k];
        s1 += kk * row[k];
        s2 += kk * (kk - 1) * row[k];
    }
    if (s0 == 0)
        throw AllZeroRow("row has no positive entry");
    MomentEstimates m;
    m.n = static_cast<long>(row.size()) - 1;
    m.mu = s1 / s0;
    m.sigma2 = s2 / s0 + m.mu - m.mu * m.mu;
    return m;
}

RealRootedness real_rooted_upto(std::span<const std::vector<Rational>> rows) {
    RealRootedness out;
    out.bound = static_cast<long>(rows.size()) - 1;
    for (size_t n = 0; n < rows.size(); ++n) {
        Poly f(rows[n]);
        if (f.is_zero() || real_root_count_with_multiplicity(f) != f.degree()) {
            out.all_verified = false;
            out.first_failure = static_cast<long>(n);
            break;
        }
    }
    return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); }

LimitStats limit_stats(std::span<const Rational> row, const Rational& mu, double sigma) {
    if (!(sigma > 0))
        throw ZeroVariance("standard deviation must be positive");
    Rational total = 0;
    for (const auto& a : row)
        total += a;
    if (total == 0)
        throw AllZeroRow("row has no positive entry");

    LimitStats st;
    st.n = static_cast<long>(row.size()) - 1;
    st.mu = mu;
    const double m = mu.get_d();
    Rational cdf = 0;
    double prev = 0;
    for (size_t k = 0; k < row.size(); ++k) {
        const Rational p = row[k] / total;
        cdf += p;
        const double right = cdf.get_d();
        const double x = (static_cast<double>(k) - m) / sigma;
        const double phi = normal_cdf(x);
        st.kolmogorov = std::max({st.kolmogorov, std::abs(prev - phi), std::abs(right - phi)});
        prev = right;

        const double x1 = (static_cast<double>(k) + 1 - m) / sigma;
        const double level = sigma * p.get_d();
        double hi = std::max(normal_pdf(x), normal_pdf(x1));
        const double lo = std::min(normal_pdf(x), normal_pdf(x1));
        if (x < 0 && x1 > 0)
            hi = normal_pdf(0);
        st.llt_sup = std::max({st.llt_sup, std::abs(level - hi), std::abs(level - lo)});
    }
    // Tails carry no mass: sup of phi over x < -mu/sigma and over x >= (n+1-mu)/sigma.
    const double left_edge = -m / sigma, right_edge = (static_cast<double>(row.size()) - m) / sigma;
    st.llt_sup = std::max({st.llt_sup, normal_pdf(std::min(left_edge, 0.0)), normal_pdf(std::max(right_edge, 0.0))});
    return st;
}

LimitStats limit_stats(std::span<const Rational> row) {
    MomentEstimates mom = exact_moments(row);
    if (mom.sigma2 <= 0)
        throw ZeroVariance("row " + std::to_string(mom.n) + " is a point mass");
    LimitStats st = limit_stats(row, mom.mu, std::sqrt(mom.sigma2.get_d()));
    st.sigma2 = mom.sigma2;
    return st;
}

std::string stats_csv(const std::vector<LimitStats>& table) {
    std::string out = "n,mu,sigma2,kolmogorov,llt_sup\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return std::string(buf);
    };
    for (const auto& s : table)
        out += std::to_string(s.n) + "," + num(s.mu.get_d()) + "," + num(s.sigma2.get_d()) + "," +
               num(s.kolmogorov) + "," + num(s.llt_sup) + "\n";
    return out;
}

} // namespace holonorm
