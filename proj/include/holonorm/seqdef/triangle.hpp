#pragma once

#include "holonorm/ore/recurrence.hpp"
#include "holonorm/seqdef/expr.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace holonorm {

/// Rows 0..n_max computed together (dynamic programming definitions).
using RowGenerator = std::function<std::vector<std::vector<Rational>>(long n_max)>;

/// F0, F1, F2 supplied directly as recurrences; no rows are available.
using TermRecurrences = std::array<Recurrence, 3>;

struct CoeffTriangle {
    std::string name;
    std::string definition; // human-readable a(n,k)
    std::variant<ExprPtr, RowGenerator, TermRecurrences> source;
    bool symmetric = false;
    bool optional_entry = false;
    std::optional<std::vector<Rational>> row0; // replaces row 0 when the closed form is undefined there

    bool has_rows() const { return !std::holds_alternative<TermRecurrences>(source); }
};

struct RowData {
    std::vector<std::vector<Rational>> rows; // empty for TermRecurrences sources
    std::array<std::vector<Rational>, 3> F;  // F0 = sum a, F1 = sum k a, F2 = sum k(k-1) a
    std::optional<long> first_negative_row;
};

/// Rows a(n, 0..n) for n <= n_max and the three derivative sums at x = 1.
RowData eval_rows(const CoeffTriangle& t, long n_max);

class UnknownSequence : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Built-in names; optional entries are included only on request.
std::vector<std::string> catalog_names(bool include_optional = false);

/// Looks up a catalog entry. `generalized-narayana:<r>` selects the parameter (default 1).
/// Optional entries need include_optional.
CoeffTriangle catalog_get(const std::string& name, bool include_optional = false);

/// Definition file:
///   name: <identifier>
///   a(n,k) = <expr>
///   symmetric: true            (optional)
/// or, instead of the a(n,k) line, three lines `F0 = <operator> ; <initial values>` (F1, F2 likewise).
/// Blank lines and lines starting with '#' are ignored.
CoeffTriangle parse_definition(const std::string& text);
CoeffTriangle load_definition(const std::string& path);

} // namespace holonorm
