#pragma once

#include "holonorm/exact/bigfloat.hpp"
#include "holonorm/exact/sturm.hpp"
#include "holonorm/ore/recurrence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holonorm {

/// The recurrence lies outside the supported scale c(n) ~ C lambda^n n^r with a simple,
/// strictly dominant, positive real lambda.
class Unsupported : public Error {
public:
    enum class Kind {
        Superexponential,
        Subexponential,
        MultipleDominant,
        ComplexDominantPair,
        NegativeDominant,
        RepeatedRoot,
    };
    Unsupported(Kind kind, const std::string& detail);
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* kind_name(Unsupported::Kind kind);

/// sum_i [n^D] p_i * lambda^i with D the largest coefficient degree.
/// Throws Unsupported when it has degree below the order (superexponential) or is a monomial.
Poly char_poly(const Recurrence& rec);

struct AsymConfig {
    int M = 6;
    int precision = BigFloat::kDefaultPrecision;
    int target_digits = 30;
    int precision_cap = 4096;
};

/// c(n) ~ C lambda^n n^r (1 + b_1/n + ... + b_M/n^M).
struct AsymptoticForm {
    Poly char_poly;
    RootEnclosure lambda_enclosure;
    BigFloat lambda;
    BigFloat r;
    std::optional<Rational> r_exact; // empty when rational reconstruction failed
    std::vector<BigFloat> b;         // b[s-1] is the coefficient of n^-s
    int M = 0;
    int agreed_digits = 0; // paired-precision agreement over lambda, r and b
    int precision = 0;

    bool r_rational() const { return r_exact.has_value(); }
    /// r as text: "p/q" when rational, else a decimal approximation.
    std::string r_text() const;
};

/// Dominant-root analysis and the term-by-term expansion, following the paired-precision protocol.
AsymptoticForm expand_asymptotics(const Recurrence& rec, const AsymConfig& cfg = {});

/// p/q with 1 <= q <= max_den closest to x, if within tol * max(1, |x|).
std::optional<Rational> rational_reconstruct(const BigFloat& x, long max_den, const BigFloat& tol);

struct ResidualCheck {
    std::vector<long> points;
    std::vector<double> residuals;
    double slope = 0;
    bool ok = false;
};

/// |sum p_i(n) c^(n+i)| / (|p_d(n)| |c^(n+d)|) for the truncated ansatz c^, with the log-log slope
/// over the points compared against -(M + 0.5).
ResidualCheck residual_check(const Recurrence& rec, const AsymptoticForm& form,
                             const std::vector<long>& points = {100, 200, 400});

} // namespace holonorm
