#include "holonorm/exact/rational.hpp"

#include "holonorm/errors.hpp"

#include <algorithm>
#include <cctype>

namespace holonorm {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!all_digits(body))
        throw InvalidInput("not an integer: '" + std::string(s) + "'");
    Integer z(std::string(body), 10);
    return s.front() == '-' ? Integer(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw InvalidInput("empty rational literal");
    std::string_view s = text.substr(first, last - first + 1);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        Integer den = parse_integer(s.substr(slash + 1));
        if (den == 0)
            throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
            whole.remove_prefix(1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw InvalidInput("not a decimal: '" + std::string(s) + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        Rational q(negative ? Integer(-digits) : digits, scale);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(num, den); // already canonical
}

Integer denominator_lcm(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer numerator_gcd(std::span<const Rational> values) {
    Integer g = 0;
    for (const auto& v : values)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    return g;
}

} // namespace holonorm
