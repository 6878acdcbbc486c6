#pragma once

#include "holonorm/ore/recurrence.hpp"

#include <optional>
#include <span>

namespace holonorm {

struct GuessConfig {
    int max_order = 4;
    int max_degree = 4;
    int verify_count = 12;

    /// (max_order+1)(max_degree+1) + max_order + verify_count
    size_t required_terms() const;
};

class NotFound : public Error {
public:
    using Error::Error;
};

/// Minimal (order, degree) recurrence, lexicographic with order first, that annihilates every
/// supplied term. Terms are indexed from n = 0; equations start at n = 1, and the recurrence
/// is reported valid from n = 0 when the n = 0 window also vanishes.
/// Throws NotFound when no candidate within the bounds survives; InvalidInput on too few terms.
Recurrence guess_recurrence(std::span<const Rational> terms, const GuessConfig& cfg = {});
std::optional<Recurrence> try_guess_recurrence(std::span<const Rational> terms, const GuessConfig& cfg = {});

struct VerifyResult {
    bool ok = true;
    std::optional<long> first_failure;
};

/// Exact check at every index n >= rec.start whose window fits in `terms`.
VerifyResult verify_recurrence(const Recurrence& rec, std::span<const Rational> terms);

} // namespace holonorm
