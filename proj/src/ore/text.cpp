#include "holonorm/ore/text.hpp"

#include <cctype>
#include <map>

namespace holonorm {
namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly poly() {
        BiPoly acc;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                return acc;
            }
            BiPoly t = term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
        }
    }

    // Sum of coefficient * S^k terms, accumulated per power.
    std::map<int, BiPoly> op() {
        std::map<int, BiPoly> out;
        bool first = true;
        for (;;) {
            skip();
            if (at_end())
                break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            BiPoly coeff(1);
            int spow = 0;
            if (peek() == 'S') {
                spow = shift_power();
            } else {
                coeff = power();
                skip();
                while (peek() == '*') {
                    ++pos_;
                    skip();
                    if (peek() == 'S') {
                        spow = shift_power();
                        break;
                    }
                    coeff = coeff * power();
                    skip();
                }
            }
            out[spow] = sign > 0 ? out[spow] + coeff : out[spow] - coeff;
            first = false;
        }
        if (first)
            fail("empty operator");
        return out;
    }

    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    int shift_power() {
        ++pos_; // S
        skip();
        if (peek() != '^')
            return 1;
        ++pos_;
        skip();
        return static_cast<int>(unsigned_int());
    }

    unsigned long unsigned_int() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative integer");
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ - start > 6)
            fail("exponent too large");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    BiPoly term() {
        BiPoly acc = power();
        for (;;) {
            skip();
            if (peek() == '*') {
                // Leave `* S` to the operator level.
                size_t save = pos_;
                ++pos_;
                skip();
                if (peek() == 'S') {
                    pos_ = save;
                    return acc;
                }
                acc = acc * power();
            } else if (peek() == '/') {
                ++pos_;
                skip();
                size_t start = pos_;
                Integer d(static_cast<long>(0));
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("only division by an integer is supported");
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                d = Integer(s_.substr(start, pos_ - start));
                if (d == 0)
                    fail("division by zero");
                acc = acc * Rational(Integer(1), d);
            } else {
                return acc;
            }
        }
    }

    BiPoly power() {
        BiPoly base = factor();
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            unsigned long e = unsigned_int();
            BiPoly r(1);
            for (unsigned long i = 0; i < e; ++i)
                r = r * base;
            return r;
        }
        return base;
    }

    BiPoly factor() {
        skip();
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly p = poly();
            skip();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                unsigned long e = unsigned_int();
                BiPoly r(1);
                for (unsigned long i = 0; i < e; ++i)
                    r = r * p;
                return r;
            }
            return p;
        }
        if (c == 'n') {
            ++pos_;
            return BiPoly::n();
        }
        if (c == 'x') {
            ++pos_;
            return BiPoly::x();
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            return BiPoly(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

std::string render(const std::vector<std::string>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += " + ";
        out += "(" + coeffs[i] + ") * S^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace

BiPoly parse_bipoly(const std::string& text) {
    Parser p(text);
    BiPoly r = p.poly();
    if (!p.at_end())
        p.fail("trailing input");
    return r;
}

XOperator parse_x_operator(const std::string& text) {
    Parser p(text);
    auto terms = p.op();
    int order = terms.rbegin()->first;
    std::vector<BiFrac> v(static_cast<size_t>(order) + 1, BiFrac());
    for (auto& [k, c] : terms)
        v[static_cast<size_t>(k)] = BiFrac(std::move(c));
    XOperator op(std::move(v));
    if (op.is_zero())
        throw InvalidInput("operator is zero");
    return op;
}

RecurrenceOperator parse_operator(const std::string& text) {
    XOperator xop = parse_x_operator(text);
    std::vector<RatFunc> v;
    for (const auto& c : xop.coeffs()) {
        if (c.num().degree_x() > 0)
            throw InvalidInput("operator depends on x");
        v.emplace_back(c.num().at_x(Rational(0)));
    }
    return RecurrenceOperator(std::move(v));
}

std::string operator_text(const RecurrenceOperator& op) {
    std::vector<std::string> parts;
    const auto norm = op.normalized();
    for (const auto& c : norm.coeffs())
        parts.push_back(c.num().to_string("n"));
    return render(parts);
}

std::string operator_text(const XOperator& op) {
    std::vector<std::string> parts;
    const auto norm = op.normalized();
    for (const auto& c : norm.coeffs())
        parts.push_back(c.num().to_string());
    return render(parts);
}

} // namespace holonorm
