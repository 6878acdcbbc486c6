#include "doctest.h"

#include "holonorm/seqdef/triangle.hpp"
#include "holonorm/normality/moments.hpp"
#include "test_support.hpp"

#include <random>

using namespace holonorm;
using testsupport::binom;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// Dyck paths of semilength n by height DP.
Integer catalan_by_paths(long n) {
    std::vector<Integer> h(static_cast<size_t>(2 * n + 2));
    h[0] = 1;
    for (long step = 0; step < 2 * n; ++step) {
        std::vector<Integer> next(h.size());
        for (size_t y = 0; y + 1 < h.size(); ++y) {
            if (h[y] == 0)
                continue;
            next[y + 1] += h[y];
            if (y > 0)
                next[y - 1] += h[y];
        }
        h = next;
    }
    return h[0];
}

// Delannoy number D(i,j) from the closed sum.
Integer delannoy_number(long i, long j) {
    Integer s = 0;
    for (long t = 0; t <= std::min(i, j); ++t)
        s += binom(i, t) * binom(j, t) * (Integer(1) << static_cast<unsigned>(t));
    return s;
}

// Middle coefficient of (1 + x + x^2)^n.
Integer central_trinomial(long n) {
    std::vector<Integer> c{1};
    for (long i = 0; i < n; ++i) {
        std::vector<Integer> next(c.size() + 2);
        for (size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j];
            next[j + 1] += c[j];
            next[j + 2] += c[j];
        }
        c = next;
    }
    return c[static_cast<size_t>(n)];
}

ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
    switch (pick(rng)) {
    case 0: return Expr::integer(std::uniform_int_distribution<long>(0, 20)(rng));
    case 1: return Expr::var_n();
    case 2: return Expr::var_k();
    case 3: return Expr::binary(Expr::Kind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4: return Expr::binary(Expr::Kind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return Expr::binary(Expr::Kind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return Expr::binary(Expr::Kind::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::power(random_expr(rng, depth - 1), std::uniform_int_distribution<unsigned long>(0, 4)(rng));
    default:
        return rng() % 2 ? Expr::binomial(random_expr(rng, depth - 1), random_expr(rng, depth - 1))
                         : Expr::factorial(random_expr(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("parse_def shapes") {
    auto fr = parse_def("binomial(n,k)^3");
    CHECK(*fr == *Expr::power(Expr::binomial(Expr::var_n(), Expr::var_k()), 3));

    auto ap = parse_def("binomial(n,k)^2 * binomial(n+k,k)");
    REQUIRE(ap->kind == Expr::Kind::Mul);
    CHECK(*ap->lhs == *Expr::power(Expr::binomial(Expr::var_n(), Expr::var_k()), 2));
    CHECK(ap->rhs->kind == Expr::Kind::Binomial);

    CHECK(*parse_def(" n -k- 1 ") == *parse_def("(n-k)-1"));
    CHECK(*parse_def("n*k/2") == *parse_def("(n*k)/2"));
    CHECK_FALSE(*parse_def("n-(k-1)") == *parse_def("n-k-1"));
}

TEST_CASE("parse_def errors") {
    try {
        parse_def("binomial(n,k");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 13);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_def("binomial(n,j)"), UnknownIdentifier);
    CHECK_THROWS_AS(parse_def("n^k"), SyntaxError);
    CHECK_THROWS_AS(parse_def("-n"), SyntaxError);
    CHECK_THROWS_AS(parse_def("n k"), SyntaxError);
    CHECK_THROWS_AS(parse_def(""), SyntaxError);
    try {
        parse_def("n +\n  q");
        FAIL("expected UnknownIdentifier");
    } catch (const UnknownIdentifier& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("pretty_print round trip") {
    for (const char* s : {"binomial(n,k)^3", "binomial(n,k)^2*binomial(n+k,k)", "n-(k-1)", "(n+k)^2",
                          "factorial(n)/(factorial(k)*factorial(n-k))", "2/(3/k)", "(2^3)^2"}) {
        auto e = parse_def(s);
        CHECK(*parse_def(pretty_print(*e)) == *e);
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        auto e = random_expr(rng, 4);
        const std::string text = pretty_print(*e);
        CAPTURE(text);
        CHECK(*parse_def(text) == *e);
    }
}

TEST_CASE("eval_coeff") {
    CHECK(eval_coeff(*parse_def("binomial(n,k)^2*binomial(n+k,k)"), 2, 1) == 12);
    CHECK(eval_coeff(*parse_def("binomial(n,k)^3"), 4, 2) == 216);
    CHECK(eval_coeff(*parse_def("binomial(n,k)"), 0, 0) == 1);
    CHECK(eval_coeff(*parse_def("binomial(n,k-1)"), 3, 0) == 0);
    CHECK(eval_coeff(*parse_def("binomial(k,n)"), 3, 1) == 0);
    CHECK(eval_coeff(*parse_def("n/(k+2)"), 3, 1) == make_rational(1, 1));
    CHECK(eval_coeff(*parse_def("k/2"), 3, 1) == make_rational(1, 2));
    CHECK(eval_coeff(*parse_def("factorial(n)"), 5, 0) == 120);
    CHECK_THROWS_AS(eval_coeff(*parse_def("1/(n-k)"), 2, 2), DivisionByZero);
    CHECK_THROWS_AS(eval_coeff(*parse_def("binomial(n/2,k)"), 3, 1), NonIntegerArgument);
    CHECK_THROWS_AS(eval_coeff(*parse_def("factorial(k-1)"), 3, 0), NonIntegerArgument);
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(eval_coeff(*parse_def("factorial(n)/(factorial(k)*factorial(n-k))"), n, k) == Rational(binom(n, k)));
}

TEST_CASE("eval_rows term vectors") {
    CHECK(eval_rows(catalog_get("franel"), 4).F[0] == ints({1, 2, 10, 56, 346}));
    CHECK(eval_rows(catalog_get("apery"), 4).F[0] == ints({1, 3, 19, 147, 1251}));
    auto bin = eval_rows(catalog_get("binomial"), 30);
    for (long n = 0; n <= 30; ++n) {
        CHECK(bin.F[0][static_cast<size_t>(n)] == Rational(Integer(1) << static_cast<unsigned>(n)));
        const Rational f1 = n == 0 ? Rational(0) : Rational(Integer(n) * (Integer(1) << static_cast<unsigned>(n - 1)));
        CHECK(bin.F[1][static_cast<size_t>(n)] == f1);
    }
    CHECK_FALSE(bin.first_negative_row);
    CHECK_THROWS_AS(eval_rows(catalog_get("binomial"), 3), InvalidInput);

    // F1 and F2 agree with derivatives of the row polynomial at 1.
    auto ap = eval_rows(catalog_get("apery"), 12);
    for (long n = 0; n <= 12; ++n) {
        CHECK(ap.F[1][static_cast<size_t>(n)] == testsupport::row_derivative(testsupport::apery_row(n), 1, 1));
        CHECK(ap.F[2][static_cast<size_t>(n)] == testsupport::row_derivative(testsupport::apery_row(n), 2, 1));
    }
}

TEST_CASE("negative coefficients are flagged") {
    CoeffTriangle t;
    t.name = "shifted";
    t.source = parse_def("k-1");
    auto d = eval_rows(t, 6);
    REQUIRE(d.first_negative_row);
    CHECK(*d.first_negative_row == 0);
}

TEST_CASE("catalog") {
    auto names = catalog_names();
    for (const char* n : {"apery", "franel", "narayana", "binomial", "delannoy", "central-trinomial-triangle",
                          "generalized-narayana"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(std::find(names.begin(), names.end(), "motzkin") == names.end());
    CHECK(catalog_names(true).size() > names.size());

    CHECK(*std::get<ExprPtr>(catalog_get("franel").source) == *parse_def("binomial(n,k)^3"));
    CHECK(*std::get<ExprPtr>(catalog_get("apery").source) == *parse_def("binomial(n,k)^2*binomial(n+k,k)"));

    try {
        catalog_get("fibonacci");
        FAIL("expected UnknownSequence");
    } catch (const UnknownSequence& e) {
        const std::string msg = e.what();
        CHECK(msg.find("franel") != std::string::npos);
        CHECK(msg.find("apery") != std::string::npos);
    }
    CHECK_THROWS_AS(catalog_get("motzkin"), UnknownSequence);
    CHECK(catalog_get("motzkin", true).optional_entry);
    CHECK_THROWS_AS(catalog_get("franel:2"), InvalidInput);
    CHECK_THROWS_AS(catalog_get("generalized-narayana:x"), InvalidInput);
    CHECK(catalog_get("generalized-narayana:2").name == "generalized-narayana:2");
}

TEST_CASE("narayana rows and Catalan sums") {
    auto d = eval_rows(catalog_get("narayana"), 8);
    CHECK(d.rows[0] == ints({1}));
    CHECK(d.rows[4] == ints({0, 1, 6, 6, 1}));
    CHECK(d.F[0][4] == 14);
    for (long n = 0; n <= 8; ++n)
        CHECK(d.F[0][static_cast<size_t>(n)] == Rational(catalan_by_paths(n)));
    // Exact mean (n+1)/2 on k = 0..n.
    for (long n = 1; n <= 8; ++n)
        CHECK(exact_moments(d.rows[static_cast<size_t>(n)]).mu == make_rational(n + 1, 2));
}

TEST_CASE("row-sum oracles") {
    auto del = eval_rows(catalog_get("delannoy"), 8);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(del.rows[static_cast<size_t>(n)][static_cast<size_t>(k)] == Rational(delannoy_number(n - k, k)));
    auto tri = eval_rows(catalog_get("central-trinomial-triangle"), 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(tri.F[0][static_cast<size_t>(n)] == Rational(central_trinomial(n)));
    auto gn = eval_rows(catalog_get("generalized-narayana"), 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(gn.F[0][static_cast<size_t>(n)] == Rational(binom(2 * n, n - 1)));
}

TEST_CASE("symmetric entries are symmetric") {
    for (const auto& name : catalog_names(true)) {
        auto t = catalog_get(name, true);
        if (!t.symmetric)
            continue;
        CAPTURE(name);
        auto d = eval_rows(t, 30);
        for (const auto& row : d.rows)
            for (size_t k = 0; k < row.size(); ++k)
                CHECK(row[k] == row[row.size() - 1 - k]);
    }
    CHECK(catalog_get("generalized-narayana:0").symmetric);
}

TEST_CASE("definition files") {
    auto t = parse_definition("name: cubes\na(n,k) = binomial(n,k)^3\nsymmetric: true\n");
    CHECK(t.name == "cubes");
    CHECK(t.symmetric);
    CHECK(eval_rows(t, 4).F[0] == ints({1, 2, 10, 56, 346}));

    auto plain = parse_definition("# comment\nname: sq\n\na(n,k) = binomial(n,k)^2\n");
    CHECK_FALSE(plain.symmetric);

    try {
        parse_definition("name: bad\na(n,k) = binomial(n,k\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 22);
    }
    CHECK_THROWS_AS(parse_definition("a(n,k) = n\n"), SyntaxError);
    CHECK_THROWS_AS(parse_definition("name: x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_definition("name: x\na(n,k) = n\nsymmetric: maybe\n"), SyntaxError);
    CHECK_THROWS_AS(load_definition("/nonexistent/def.txt"), InvalidInput);

    auto rec = parse_definition("name: pow2\n"
                                "F0 = (-2) * S^0 + (1) * S^1 ; 1\n"
                                "F1 = (-2*n-2) * S^0 + (n) * S^1 ; 0, 1\n"
                                "F2 = (-2*n-2) * S^0 + (n-1) * S^1 ; 0, 0, 2\n");
    CHECK_FALSE(rec.has_rows());
    auto d = eval_rows(rec, 6);
    CHECK(d.rows.empty());
    CHECK(d.F[0] == ints({1, 2, 4, 8, 16, 32, 64}));
    CHECK(d.F[1] == ints({0, 1, 4, 12, 32, 80, 192}));
    CHECK(d.F[2] == ints({0, 0, 2, 12, 48, 160, 480}));
}
