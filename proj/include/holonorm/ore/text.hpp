#pragma once

#include "holonorm/ore/ore_poly.hpp"

#include <string>

namespace holonorm {

/// Parse error in operator or polynomial text, with 1-based column.
class ParseError : public InvalidInput {
public:
    ParseError(size_t column, const std::string& what)
        : InvalidInput("column " + std::to_string(column) + ": " + what), column_(column) {}
    size_t column() const { return column_; }

private:
    size_t column_;
};

/// Polynomial in n and x: integers, rationals p/q, n, x, + - * ^ and parentheses.
BiPoly parse_bipoly(const std::string& text);

/// `(p0) * S^0 + (p1) * S^1 + ...`. Terms may repeat, may omit `* S^i` (meaning S^0),
/// and may be a bare `S` or `S^k`.
XOperator parse_x_operator(const std::string& text);
/// As parse_x_operator, rejecting any occurrence of x.
RecurrenceOperator parse_operator(const std::string& text);

/// Canonical text of the normalized operator (polynomial coefficients, expanded).
std::string operator_text(const RecurrenceOperator& op);
std::string operator_text(const XOperator& op);

} // namespace holonorm
