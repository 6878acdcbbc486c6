#pragma once

#include "holonorm/errors.hpp"
#include "holonorm/exact/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holonorm {

class AllZeroRow : public Error {
public:
    using Error::Error;
};

class ZeroVariance : public Error {
public:
    using Error::Error;
};

struct MomentEstimates {
    long n = 0;
    Rational mu;
    Rational sigma2;
};

/// Mean and variance of k under p(k) = a(n,k) / sum_k a(n,k). Entries must be nonnegative.
MomentEstimates exact_moments(std::span<const Rational> row);

struct RealRootedness {
    bool all_verified = true;
    long bound = 0;                    // rows 0..bound were examined
    std::optional<long> first_failure; // smallest failing n
};

/// For each row n, checks that sum_k a(n,k) x^k has deg-many real roots counted with multiplicity.
/// rows[n] is row n; a zero row fails.
RealRootedness real_rooted_upto(std::span<const std::vector<Rational>> rows);

struct LimitStats {
    long n = 0;
    Rational mu;
    Rational sigma2;
    double kolmogorov = 0; // sup_x |F(mu + x sigma) - Phi(x)|
    double llt_sup = 0;    // sup_x |sigma p(floor(mu + x sigma)) - phi(x)|
};

double normal_cdf(double x);
double normal_pdf(double x);

/// Statistics of the row distribution against the standard normal. `sigma` must be positive.
/// The local sup is taken over cell endpoints, the mode x = 0 when inside a cell, and both tails.
LimitStats limit_stats(std::span<const Rational> row, const Rational& mu, double sigma);
/// Uses the exact moments of the row; throws ZeroVariance for a point mass.
LimitStats limit_stats(std::span<const Rational> row);

/// `n,mu,sigma2,kolmogorov,llt_sup` with 15 significant digits.
std::string stats_csv(const std::vector<LimitStats>& table);

} // namespace holonorm
