#pragma once

#include "holonorm/errors.hpp"
#include "holonorm/exact/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace holonorm {

/// Parse failure with 1-based line and column and the tokens that would have been accepted.
class SyntaxError : public InvalidInput {
public:
    SyntaxError(size_t line, size_t column, const std::string& message, std::vector<std::string> expected = {});
    size_t line() const { return line_; }
    size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    size_t line_;
    size_t column_;
    std::vector<std::string> expected_;
};

class UnknownIdentifier : public SyntaxError {
public:
    UnknownIdentifier(size_t line, size_t column, const std::string& name);
};

class NonIntegerArgument : public Error {
public:
    using Error::Error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Coefficient expression a(n,k).
struct Expr {
    enum class Kind { Int, N, K, Add, Sub, Mul, Div, Pow, Binomial, Factorial };

    Kind kind = Kind::Int;
    Integer value;          // Int
    unsigned long exponent = 0; // Pow
    ExprPtr lhs;            // binary operand, Pow base, Binomial top, Factorial argument
    ExprPtr rhs;            // binary operand, Binomial bottom

    static ExprPtr integer(Integer v);
    static ExprPtr var_n();
    static ExprPtr var_k();
    static ExprPtr binary(Kind op, ExprPtr a, ExprPtr b);
    static ExprPtr power(ExprPtr base, unsigned long e);
    static ExprPtr binomial(ExprPtr top, ExprPtr bottom);
    static ExprPtr factorial(ExprPtr arg);
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

/// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*; factor := base ('^' uint)?;
/// base := uint | 'n' | 'k' | 'binomial' '(' expr ',' expr ')' | 'factorial' '(' expr ')' | '(' expr ')'.
/// `first_line` offsets reported line numbers.
ExprPtr parse_def(const std::string& text, size_t first_line = 1);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string pretty_print(const Expr& e);

/// Exact value at (n, k). Out-of-range binomials are 0; binomial(a, b) with a < 0 uses the
/// generalized definition. Throws DivisionByZero or NonIntegerArgument.
Rational eval_coeff(const Expr& e, long n, long k);

} // namespace holonorm
