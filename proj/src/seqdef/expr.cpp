#include "holonorm/seqdef/expr.hpp"

#include <cctype>

namespace holonorm {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i)
            out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
    }
    return out;
}

} // namespace

SyntaxError::SyntaxError(size_t line, size_t column, const std::string& message, std::vector<std::string> expected)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
                   (expected.empty() ? "" : " (expected " + join_expected(expected) + ")")),
      line_(line), column_(column), expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(size_t line, size_t column, const std::string& name)
    : SyntaxError(line, column, "unknown identifier '" + name + "'", {"n", "k", "binomial", "factorial"}) {}

ExprPtr Expr::integer(Integer v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Int;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::var_n() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::N;
    return e;
}

ExprPtr Expr::var_k() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::K;
    return e;
}

ExprPtr Expr::binary(Kind op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned long exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->lhs = std::move(base);
    e->exponent = exp;
    return e;
}

ExprPtr Expr::binomial(ExprPtr top, ExprPtr bottom) { return binary(Kind::Binomial, std::move(top), std::move(bottom)); }

ExprPtr Expr::factorial(ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Factorial;
    e->lhs = std::move(arg);
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind)
        return false;
    auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
    switch (a.kind) {
    case Expr::Kind::Int:
        return a.value == b.value;
    case Expr::Kind::N:
    case Expr::Kind::K:
        return true;
    case Expr::Kind::Pow:
        return a.exponent == b.exponent && same(a.lhs, b.lhs);
    default:
        return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
    }
}

namespace {

class DefParser {
public:
    DefParser(const std::string& text, size_t first_line) : s_(text), line_(first_line) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ < s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'", {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
        throw SyntaxError(line_, pos_ - line_start_ + 1, msg, std::move(expected));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input",
                 {"'" + std::string(1, c) + "'"});
        ++pos_;
    }

    ExprPtr expr() {
        ExprPtr acc = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            acc = Expr::binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, acc, term());
        }
        return acc;
    }

    ExprPtr term() {
        ExprPtr acc = factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            acc = Expr::binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, acc, factor());
        }
        return acc;
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                fail("exponent must be a nonnegative integer literal", {"unsigned integer"});
            Integer v = digits();
            if (!v.fits_ulong_p() || v > 100000)
                fail("exponent too large", {});
            return Expr::power(b, v.get_ui());
        }
        return b;
    }

    Integer digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return Integer(s_.substr(start, pos_ - start));
    }

    ExprPtr base() {
        char c = peek();
        if (c == '\0')
            fail("unexpected end of input", {"integer", "n", "k", "binomial", "factorial", "'('"});
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Expr::integer(digits());
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos_, col = pos_ - line_start_ + 1;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            if (id == "n")
                return Expr::var_n();
            if (id == "k")
                return Expr::var_k();
            if (id == "binomial") {
                expect('(');
                ExprPtr top = expr();
                expect(',');
                ExprPtr bottom = expr();
                expect(')');
                return Expr::binomial(top, bottom);
            }
            if (id == "factorial") {
                expect('(');
                ExprPtr arg = expr();
                expect(')');
                return Expr::factorial(arg);
            }
            throw UnknownIdentifier(line_, col, id);
        }
        fail("unexpected '" + std::string(1, c) + "'", {"integer", "n", "k", "binomial", "factorial", "'('"});
    }

    const std::string& s_;
    size_t pos_ = 0;
    size_t line_;
    size_t line_start_ = 0;
};

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        return 2;
    case Expr::Kind::Pow:
        return 3;
    default:
        return 4;
    }
}

std::string print(const Expr& e);

std::string wrapped(const Expr& e, bool paren) { return paren ? "(" + print(e) + ")" : print(e); }

std::string print(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return e.value.get_str();
    case Expr::Kind::N:
        return "n";
    case Expr::Kind::K:
        return "k";
    case Expr::Kind::Binomial:
        return "binomial(" + print(*e.lhs) + ", " + print(*e.rhs) + ")";
    case Expr::Kind::Factorial:
        return "factorial(" + print(*e.lhs) + ")";
    case Expr::Kind::Pow:
        return wrapped(*e.lhs, precedence(e.lhs->kind) <= 3) + "^" + std::to_string(e.exponent);
    default: {
        const int p = precedence(e.kind);
        const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - "
                         : e.kind == Expr::Kind::Mul ? "*" : "/";
        // Left associative: an equal-precedence right operand needs parentheses.
        return wrapped(*e.lhs, precedence(e.lhs->kind) < p) + op + wrapped(*e.rhs, precedence(e.rhs->kind) <= p);
    }
    }
}

Integer as_integer(const Rational& q, const char* what) {
    if (!is_integer(q))
        throw NonIntegerArgument(std::string(what) + " argument " + to_string(q) + " is not an integer");
    return q.get_num();
}

} // namespace

ExprPtr parse_def(const std::string& text, size_t first_line) { return DefParser(text, first_line).parse(); }

std::string pretty_print(const Expr& e) { return print(e); }

Rational eval_coeff(const Expr& e, long n, long k) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return Rational(e.value);
    case Expr::Kind::N:
        return Rational(n);
    case Expr::Kind::K:
        return Rational(k);
    case Expr::Kind::Add:
        return eval_coeff(*e.lhs, n, k) + eval_coeff(*e.rhs, n, k);
    case Expr::Kind::Sub:
        return eval_coeff(*e.lhs, n, k) - eval_coeff(*e.rhs, n, k);
    case Expr::Kind::Mul:
        return eval_coeff(*e.lhs, n, k) * eval_coeff(*e.rhs, n, k);
    case Expr::Kind::Div: {
        Rational d = eval_coeff(*e.rhs, n, k);
        if (d == 0)
            throw DivisionByZero("division by zero at (n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")");
        return eval_coeff(*e.lhs, n, k) / d;
    }
    case Expr::Kind::Pow:
        return pow(eval_coeff(*e.lhs, n, k), e.exponent);
    case Expr::Kind::Binomial: {
        const Integer a = as_integer(eval_coeff(*e.lhs, n, k), "binomial");
        const Integer b = as_integer(eval_coeff(*e.rhs, n, k), "binomial");
        if (b < 0 || (a >= 0 && b > a))
            return 0;
        if (!b.fits_ulong_p())
            throw InvalidInput("binomial argument too large");
        Integer r;
        mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b.get_ui());
        return Rational(r);
    }
    case Expr::Kind::Factorial: {
        const Integer a = as_integer(eval_coeff(*e.lhs, n, k), "factorial");
        if (a < 0)
            throw NonIntegerArgument("factorial of negative argument " + a.get_str());
        if (a > 1000000)
            throw InvalidInput("factorial argument too large");
        Integer r;
        mpz_fac_ui(r.get_mpz_t(), a.get_ui());
        return Rational(r);
    }
    }
    return 0;
}

} // namespace holonorm
