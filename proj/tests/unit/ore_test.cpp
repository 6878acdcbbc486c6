#include "doctest.h"

#include "holonorm/ore/ore_poly.hpp"
#include "holonorm/ore/recurrence.hpp"
#include "holonorm/ore/recurrence_json.hpp"
#include "holonorm/ore/text.hpp"
#include "test_support.hpp"

#include <random>

using namespace holonorm;
using testsupport::apery_row;
using testsupport::franel_row;
using testsupport::row_derivative;

namespace {

RatFunc rf(Poly p) { return RatFunc(std::move(p)); }
RatFunc rc(long c) { return RatFunc(Rational(c)); }

RecurrenceOperator op(std::initializer_list<Poly> coeffs) {
    std::vector<RatFunc> v;
    for (const auto& p : coeffs)
        v.push_back(rf(p));
    return RecurrenceOperator(std::move(v));
}

std::vector<Rational> seq(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Poly rand_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> c(-5, 5);
    std::vector<Rational> v(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : v)
        x = c(rng);
    return Poly(v);
}

RecurrenceOperator rand_op(std::mt19937& rng, int max_order, int max_degree) {
    std::uniform_int_distribution<int> ord(1, max_order);
    const int d = ord(rng);
    std::vector<RatFunc> v;
    for (int i = 0; i <= d; ++i)
        v.push_back(rf(rand_poly(rng, max_degree)));
    // Keep the top coefficient free of nonnegative integer roots.
    v.back() = rf(Poly{1, 0, 1} * Rational(1 + static_cast<long>(rng() % 3)));
    return RecurrenceOperator(std::move(v));
}

const Poly n = Poly::var();

} // namespace

TEST_CASE("ore_apply") {
    auto pow2 = seq({1, 2, 4, 8, 16, 32});
    CHECK(all_zero(ore_apply(op({Poly{-2}, Poly{1}}), pow2)));
    CHECK(all_zero(ore_apply(op({Poly{-1}, Poly{-1}, Poly{1}}), seq({1, 1, 2, 3, 5, 8}))));
    // (n+2)^2 S^2 - (11n^2+33n+25) S - (n+1)^2
    auto apery = op({Poly{-1, -2, -1}, Poly{-25, -33, -11}, Poly{4, 4, 1}});
    auto r = ore_apply(apery, seq({1, 3, 19, 147, 1251}));
    CHECK(r.size() == 3);
    CHECK(all_zero(r));
    CHECK(all_zero(ore_apply(RecurrenceOperator(), pow2)));
    CHECK(ore_apply(op({Poly{-2}, Poly{1}}), seq({1, 2, 4, 9})) == seq({0, 0, 1}));
}

TEST_CASE("ore_apply reports poles") {
    RecurrenceOperator pole({RatFunc(Poly{1}, Poly{-3, 1}), rc(1)});
    auto fn = ore_apply(pole, [](long) { return Rational(1); });
    CHECK(fn(2) == 0);
    try {
        fn(3);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.index() == 3);
    }
}

TEST_CASE("ore_mul") {
    auto s = RecurrenceOperator::shift_power(1);
    auto prod = s * RecurrenceOperator::scalar(rf(n));
    CHECK(prod.equals(op({Poly{}, Poly{1, 1}})));
    auto a = op({Poly{-2}, Poly{1}}), b = op({Poly{-3}, Poly{1}});
    CHECK((a * b).equals(op({Poly{6}, Poly{-5}, Poly{1}})));
    CHECK((b * a).equals(a * b));

    auto l1 = op({Poly{-1}, Poly{1}}), l2 = op({-n, Poly{1}});
    auto l12 = l1 * l2;
    CHECK(l12.order() == 2);
    std::mt19937 rng(1);
    std::vector<Rational> probe = seq({1, 1, 2, 6, 24});
    auto direct = ore_apply(l12, probe);
    auto inner = ore_apply(l2, probe);
    CHECK(direct == ore_apply(l1, inner));
}

TEST_CASE("composition law on random operators") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> val(-30, 30), den(1, 9);
    for (int trial = 0; trial < 12; ++trial) {
        auto l1 = rand_op(rng, 3, 2), l2 = rand_op(rng, 3, 2);
        auto prod = l1 * l2;
        CHECK(prod.order() == l1.order() + l2.order());
        for (int s = 0; s < 10; ++s) {
            std::vector<Rational> t;
            for (int i = 0; i < 12; ++i)
                t.push_back(make_rational(val(rng), den(rng)));
            CHECK(ore_apply(prod, t) == ore_apply(l1, ore_apply(l2, t)));
        }
    }
}

TEST_CASE("lclm examples") {
    auto a = op({Poly{-2}, Poly{1}}), b = op({Poly{-3}, Poly{1}});
    auto res = lclm(a, b);
    CHECK(res.lclm.equals(op({Poly{6}, Poly{-5}, Poly{1}})));
    CHECK((res.u * a).equals(res.lclm));
    CHECK((res.v * b).equals(res.lclm));

    auto same = lclm(a, a);
    CHECK(same.lclm.equals(a));
    CHECK_THROWS_AS(lclm(a, RecurrenceOperator()), InvalidInput);
}

TEST_CASE("lclm postcondition and annihilation on random pairs") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> val(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        auto l1 = rand_op(rng, 2, 2), l2 = rand_op(rng, 2, 2);
        auto res = lclm(l1, l2);
        CHECK((res.u * l1).equals(res.lclm));
        CHECK((res.v * l2).equals(res.lclm));
        CHECK(res.lclm.order() <= l1.order() + l2.order());
        CHECK(res.lclm.order() >= std::max(l1.order(), l2.order()));

        for (const auto* l : {&l1, &l2}) {
            std::vector<Rational> init;
            for (int i = 0; i < l->order(); ++i)
                init.emplace_back(val(rng));
            Recurrence rec = Recurrence::from_operator(*l, 0, init);
            auto terms = rec.generate(20);
            CHECK(all_zero(ore_apply(res.lclm, terms)));
        }
    }
}

TEST_CASE("lclm with BiFrac coefficients") {
    const BiPoly bn = BiPoly::n(), bx = BiPoly::x();
    XOperator l1({BiFrac(-(bx + BiPoly(1))), BiFrac(BiPoly(1))});
    XOperator l2({BiFrac(-(bn + bx)), BiFrac(BiPoly(1))});
    auto res = lclm(l1, l2);
    CHECK(res.lclm.order() == 2);
    CHECK((res.u * l1).equals(res.lclm));
    CHECK((res.v * l2).equals(res.lclm));
}

TEST_CASE("derivative closure") {
    const BiPoly bx = BiPoly::x();
    XOperator l1({BiFrac(-(bx + BiPoly(1))), BiFrac(BiPoly(1))});
    auto d = derivative_closure(l1);
    auto at1 = at_x(d, Rational(1));
    std::vector<Rational> t;
    for (long k = 0; k <= 30; ++k)
        t.push_back(Rational(Integer(k) * (k == 0 ? Integer(0) : Integer(1) << (k - 1))));
    CHECK(all_zero(ore_apply(at1, t)));

    XOperator s2({BiFrac(BiPoly(-2)), BiFrac(BiPoly(1))});
    CHECK(derivative_closure(s2).equals(s2));
}

TEST_CASE("x-recurrence fixtures and their derivative closures") {
    struct Case {
        const char* file;
        std::vector<Integer> (*row)(long);
    };
    for (const Case& c : {Case{"apery_x.txt", apery_row}, Case{"franel_x.txt", franel_row}}) {
        CAPTURE(c.file);
        XOperator l1 = parse_x_operator(testsupport::read_fixture(c.file));
        REQUIRE(l1.order() == 3);
        std::vector<std::vector<Integer>> rows;
        for (long m = 0; m <= 34; ++m)
            rows.push_back(c.row(m));
        for (const Rational& x : {Rational(1), Rational(2), Rational(-1, 3)}) {
            std::vector<Rational> f;
            for (const auto& row : rows)
                f.push_back(row_derivative(row, 0, x));
            CHECK(all_zero(ore_apply(at_x(l1, x), f)));
        }
        auto d1 = derivative_closure(l1);
        std::vector<Rational> f1;
        for (size_t m = 0; m <= 30; ++m)
            f1.push_back(row_derivative(rows[m], 1, Rational(1)));
        CHECK(all_zero(ore_apply(at_x(d1, Rational(1)), f1)));
    }
}

TEST_CASE("lclm of f(1) and f'(1) operators annihilates their sum") {
    XOperator l1 = parse_x_operator(testsupport::read_fixture("apery_x.txt"));
    auto f_op = at_x(l1, Rational(1));
    auto fp_op = at_x(derivative_closure(l1), Rational(1));
    auto res = lclm(f_op, fp_op);
    std::vector<Rational> sum;
    for (long m = 0; m < 40 + res.lclm.order(); ++m) {
        auto row = apery_row(m);
        sum.push_back(row_derivative(row, 0, Rational(1)) + row_derivative(row, 1, Rational(1)));
    }
    CHECK(all_zero(ore_apply(res.lclm, sum)));
}

TEST_CASE("operator text round trip") {
    auto apery = op({Poly{-1, -2, -1}, Poly{-25, -33, -11}, Poly{4, 4, 1}});
    std::string text = operator_text(apery);
    CHECK(text == "(-n^2-2*n-1) * S^0 + (-11*n^2-33*n-25) * S^1 + (n^2+4*n+4) * S^2");
    CHECK(parse_operator(text).equals(apery));
    CHECK(parse_operator("S^2 - S - 1").equals(op({Poly{-1}, Poly{-1}, Poly{1}})));
    CHECK(parse_operator("(n+1)*S - 2*n").equals(op({Poly{0, -2}, Poly{1, 1}})));
    CHECK(parse_bipoly("(n+x)^2 - n^2 - 2*n*x") == BiPoly::x() * BiPoly::x());
    CHECK(parse_bipoly("n/2 + 1/3") == BiPoly::n() * Rational(1, 2) + BiPoly(Rational(1, 3)));
    CHECK_THROWS_AS(parse_operator("x*S - 1"), InvalidInput);
    CHECK_THROWS_AS(parse_operator("(n+1 * S"), ParseError);
    CHECK_THROWS_AS(parse_operator("n ? S"), ParseError);

    XOperator x1 = parse_x_operator(testsupport::read_fixture("franel_x.txt"));
    CHECK(parse_x_operator(operator_text(x1)).equals(x1.normalized()));
}

TEST_CASE("recurrence generation and initial values") {
    // n t(n+1) - (n+1)^2... keep simple: (n-2) t(n+1) = (n-2) 2 t(n), leading root at n = 2.
    Recurrence rec = Recurrence::from_operator(op({Poly{4, -2}, Poly{-2, 1}}), 0, seq({1, 2, 4, 8, 16}));
    CHECK(rec.initial_count() == 4);
    CHECK(rec.initial.size() == 4);
    auto t = rec.generate(10);
    CHECK(t[9] == 512);
    CHECK(nonnegative_integer_roots(Poly{0, -6, 1}) == std::vector<long>{0, 6});
    CHECK(nonnegative_integer_roots(Poly{1, 0, 1}).empty());

    nlohmann::json j = rec;
    Recurrence back = j.get<Recurrence>();
    CHECK(back.coeffs == rec.coeffs);
    CHECK(back.initial == rec.initial);
    CHECK(back.generate(12) == rec.generate(12));
}
