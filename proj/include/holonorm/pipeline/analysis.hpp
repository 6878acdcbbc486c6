#pragma once

#include "holonorm/asym/asymptotics.hpp"
#include "holonorm/asym/ratio.hpp"
#include "holonorm/guess/guess.hpp"
#include "holonorm/normality/moments.hpp"
#include "holonorm/normality/sufficiency.hpp"
#include "holonorm/seqdef/triangle.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holonorm {

enum class OutputFormat { Json, Csv, Text };

struct AnalysisConfig {
    long n_max_terms = 200; // terms F(0..n_max_terms)
    GuessConfig guess;
    int M = 6;
    int precision = 256;
    int depth = 6;
    long sturm_bound = 40;
    std::vector<long> stats_n{25, 50, 100, 200};
    bool run_stats = true;
    OutputFormat format = OutputFormat::Json;

    /// Throws InvalidInput when a field is out of range.
    void validate() const;
};

/// A stage failure. `type` is the error class (NotFound, Unsupported(...), ZeroVariance, ...).
struct StageWarning {
    std::string stage;
    std::string type;
    std::string message;
};

struct AnalysisReport {
    std::string sequence;
    std::string definition;
    bool symmetric = false;
    long n_max_terms = 0;
    AnalysisConfig config;

    std::array<std::optional<Recurrence>, 3> recurrences;
    std::array<std::optional<VerifyResult>, 3> verification;
    std::array<std::optional<AsymptoticForm>, 3> forms;
    std::array<std::optional<ResidualCheck>, 3> residuals;
    std::optional<RatioEstimate> a;
    std::optional<RatioEstimate> b;
    std::optional<SufficiencyReport> sufficiency;
    std::optional<RealRootedness> real_rooted;
    std::optional<long> first_negative_row;
    std::vector<LimitStats> stats;
    std::vector<StageWarning> warnings;

    Verdict verdict = Verdict::Inconclusive;
    std::string statement;

    /// mu ~ mu_leading n^mu_exponent and sigma^2 ~ sigma2_leading n^m, when available.
    std::optional<double> mu_leading() const;
    std::optional<double> sigma2_leading() const;
};

/// terms -> recurrences -> expansions -> ratio limits -> sufficiency -> real roots -> statistics.
/// Stage failures are recorded as warnings and force Inconclusive; the statistics stage never
/// affects the verdict.
AnalysisReport analyze(const CoeffTriangle& triangle, const AnalysisConfig& cfg = {});

/// The dominant root as an exact rational when it is one (checked against the characteristic polynomial).
std::optional<Rational> exact_lambda(const AsymptoticForm& form);

} // namespace holonorm
