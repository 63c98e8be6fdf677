#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "cocyclelab/linsolve.hpp"

using namespace cocyclelab;
namespace ts = cocyclelab::testsupport;

TEST_CASE("rational canonical form") {
    CHECK(make_rational(2, 6) == make_rational(1, 3));
    CHECK(make_rational(-2, -6) == make_rational(1, 3));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(to_string(make_rational(-4, 6)) == "-2/3");
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
    CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
}

TEST_CASE("poly arithmetic ring identities") {
    Chart c = Chart::base({"q1", "q2"});
    Poly q1 = Poly::variable(c, 0);
    Poly one = Poly::constant(c, Rational(1));

    // (q1 + 1)(q1 - 1) = q1^2 - 1
    Poly prod = (q1 + one) * (q1 - one);
    Poly expected = q1 * q1 - one;
    CHECK(prod == expected);
    CHECK(prod.str() == "q1^2 - 1");

    // p + 0 = p
    Poly p = q1 * q1 + Rational(3) * q1;
    CHECK(p + Poly(c) == p);
}

TEST_CASE("poly multiplication builds the worked-example perturbation") {
    Chart q = Chart::base({"q1", "q2"});
    Chart tq = tangent_chart(q);
    Poly q1 = Poly::variable(tq, "q1");
    Poly v2 = Poly::variable(tq, "v2");
    Poly delta = (q1 * q1) * v2;
    CHECK(delta.str() == "q1^2*v2");
    CHECK(delta.total_degree() == 3);
}

TEST_CASE("chart mismatch raises") {
    Chart a = Chart::base({"x"});
    Chart b = Chart::base({"y"});
    CHECK_THROWS_AS(Poly::variable(a, 0) + Poly::variable(b, 0), ChartMismatch);
}

TEST_CASE("differentiate: power rule, constants, legendre data") {
    Chart q = Chart::base({"q1", "q2"});
    Chart tq = tangent_chart(q);
    Poly q1 = Poly::variable(tq, "q1");
    Poly v1 = Poly::variable(tq, "v1");
    Poly v2 = Poly::variable(tq, "v2");

    Poly delta = q1 * q1 * v2;
    CHECK(delta.differentiate("q1") == Rational(2) * q1 * v2);
    CHECK(Poly::constant(tq, make_rational(5, 3)).differentiate("q1").is_zero());

    Poly l_inv = make_rational(1, 2) * (v1 * v1 + v2 * v2);
    CHECK(l_inv.differentiate("v1") == v1);
    CHECK_THROWS_AS(l_inv.differentiate("q3"), UnknownVariable);
}

TEST_CASE("evaluate: exact substitution") {
    Chart c = Chart::base({"q1"});
    Poly q1 = Poly::variable(c, 0);
    Poly p = q1 * q1 - Poly::constant(c, Rational(1));
    CHECK(p.evaluate(std::vector<Rational>{Rational(3)}) == Rational(8));

    // The canonical cocycle value -2*q1 at q1 = 5.
    Poly cocycle_value = Rational(-2) * q1;
    CHECK(cocycle_value.evaluate(std::vector<Rational>{Rational(5)}) == Rational(-10));

    CHECK(Poly(c).evaluate(std::vector<Rational>{make_rational(7, 2)}) == Rational(0));
    CHECK_THROWS_AS(p.evaluate(std::vector<Rational>{}), DimensionMismatch);
}

TEST_CASE("canonical form under random arithmetic") {
    std::mt19937_64 rng(11);
    Chart c = Chart::base({"x", "y", "z"});
    for (int t = 0; t < 200; ++t) {
        Poly p = ts::rand_poly(rng, c, 3);
        Poly q = ts::rand_poly(rng, c, 3);
        Poly r = ts::rand_poly(rng, c, 2);
        CHECK(p + q - q == p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("differentiate commutes on random polynomials") {
    std::mt19937_64 rng(12);
    Chart c = Chart::base({"x", "y", "z"});
    for (int t = 0; t < 220; ++t) {
        Poly p = ts::rand_poly(rng, c, 4);
        CHECK(p.differentiate(0).differentiate(1) == p.differentiate(1).differentiate(0));
        CHECK(p.differentiate(1).differentiate(2) == p.differentiate(2).differentiate(1));
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(13);
    Chart c = Chart::base({"x", "y"});
    for (int t = 0; t < 100; ++t) {
        Poly p = ts::rand_poly(rng, c, 3);
        Poly q = ts::rand_poly(rng, c, 3);
        std::vector<Rational> pt{ts::rand_rational(rng), ts::rand_rational(rng)};
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    }
}

TEST_CASE("leibniz rule for differentiate") {
    std::mt19937_64 rng(14);
    Chart c = Chart::base({"x", "y"});
    for (int t = 0; t < 100; ++t) {
        Poly p = ts::rand_poly(rng, c, 3);
        Poly q = ts::rand_poly(rng, c, 3);
        CHECK((p * q).differentiate(0) == p.differentiate(0) * q + p * q.differentiate(0));
    }
}

TEST_CASE("poly gcd and exact division") {
    Chart c = Chart::base({"x", "y"});
    Poly x = Poly::variable(c, 0), y = Poly::variable(c, 1);
    Poly one = Poly::constant(c, Rational(1));

    Poly a = (x + y) * (x - y);
    Poly b = (x + y) * (x + one);
    Poly g = poly_gcd(a, b);
    CHECK(g == x + y);
    CHECK(divide_exact(a, g) == x - y);
    CHECK(!try_divide(a, x + one).has_value());

    CHECK(poly_gcd(Poly(c), a) == Rational(1) / a.leading_coefficient() * a);
    CHECK(poly_gcd(one + one, a) == one);
}

TEST_CASE("gcd of random products recovers the common factor") {
    std::mt19937_64 rng(15);
    Chart c = Chart::base({"x", "y"});
    for (int t = 0; t < 40; ++t) {
        Poly g = ts::rand_poly(rng, c, 2);
        if (g.is_zero() || g.is_constant()) continue;
        Poly a = g * ts::rand_poly(rng, c, 2);
        Poly b = g * ts::rand_poly(rng, c, 2);
        Poly computed = poly_gcd(a, b);
        if (a.is_zero() || b.is_zero()) continue;
        // g divides the computed gcd (the cofactors may share more).
        CHECK(try_divide(computed, poly_gcd(g, computed)).has_value());
        CHECK(try_divide(a, computed).has_value());
        CHECK(try_divide(b, computed).has_value());
    }
}

TEST_CASE("ratfunc reduction and canonical denominator") {
    Chart c = Chart::base({"q1"});
    Poly q1 = Poly::variable(c, 0);
    Poly one = Poly::constant(c, Rational(1));

    RatFunc r(q1 * q1 - one, q1 + one);
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == q1 - one);

    RatFunc half_over_q1(one, Rational(2) * q1);
    CHECK(half_over_q1.den() == q1);
    CHECK(half_over_q1.num() == Poly::constant(c, make_rational(1, 2)));
    CHECK(half_over_q1.str() == "(1/2)/(q1)");

    CHECK_THROWS_AS(RatFunc(one, Poly(c)), DivisionByZero);
    CHECK((half_over_q1 - half_over_q1).is_zero());
    CHECK(half_over_q1 * RatFunc(Rational(2) * q1) == RatFunc(one));
}

TEST_CASE("ratfunc field axioms on random values") {
    std::mt19937_64 rng(16);
    Chart c = Chart::base({"x", "y"});
    for (int t = 0; t < 25; ++t) {
        Poly pn = ts::rand_poly(rng, c, 2), pd = ts::rand_poly(rng, c, 1);
        Poly qn = ts::rand_poly(rng, c, 2), qd = ts::rand_poly(rng, c, 1);
        if (pd.is_zero() || qd.is_zero()) continue;
        RatFunc p(pn, pd), q(qn, qd);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p - p == RatFunc(Poly(c)));
        if (!q.is_zero()) CHECK((p / q) * q == p);
    }
}

TEST_CASE("bareiss solve: identity and adjugate example") {
    Chart c = Chart::base({"q1"});
    Poly q1 = Poly::variable(c, 0);
    Poly zero(c), one = Poly::constant(c, Rational(1));

    PolyMatrix identity{{one, zero}, {zero, one}};
    std::vector<Poly> b{q1, q1 * q1};
    auto x = bareiss_solve(identity, b);
    CHECK(x[0] == RatFunc(q1));
    CHECK(x[1] == RatFunc(q1 * q1));

    // [[0, -2 q1], [2 q1, 0]] x = (1, 0). Adjugate: x = (0, -2*q1) / (4*q1^2),
    // i.e. (0, -1/(2 q1)); verified below by back-multiplication.
    PolyMatrix a{{zero, Rational(-2) * q1}, {Rational(2) * q1, zero}};
    auto y = bareiss_solve(a, {one, zero});
    CHECK(y[0].is_zero());
    CHECK(y[1] == RatFunc(-one, Rational(2) * q1));
    CHECK(RatFunc(a[0][0]) * y[0] + RatFunc(a[0][1]) * y[1] == RatFunc(one));
    CHECK(RatFunc(a[1][0]) * y[0] + RatFunc(a[1][1]) * y[1] == RatFunc(zero));

    PolyMatrix singular{{q1, q1}, {q1, q1}};
    CHECK_THROWS_AS(bareiss_solve(singular, b), SingularMatrix);
    CHECK(poly_determinant(singular).is_zero());
    CHECK(poly_determinant(a) == Rational(4) * q1 * q1);
}

TEST_CASE("bareiss solve: random nonsingular systems up to 6x6") {
    std::mt19937_64 rng(17);
    Chart c = Chart::base({"x", "y"});
    for (int t = 0; t < 30; ++t) {
        size_t n = 2 + rng() % 5;
        PolyMatrix a(n, std::vector<Poly>(n, Poly(c)));
        std::vector<Poly> b(n, Poly(c));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) a[i][j] = ts::rand_poly(rng, c, 2, 3);
            b[i] = ts::rand_poly(rng, c, 2, 3);
        }
        if (poly_determinant(a).is_zero()) continue;
        auto x = bareiss_solve(a, b);
        for (size_t i = 0; i < n; ++i) {
            RatFunc acc = -RatFunc(b[i]);
            for (size_t j = 0; j < n; ++j) acc += RatFunc(a[i][j]) * x[j];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("rational linear systems report certificates") {
    auto r = [](long n, long d = 1) { return make_rational(n, d); };
    // x + y = 2, x - y = 0 -> x = y = 1.
    auto res = solve_rational_system({{r(1), r(1)}, {r(1), r(-1)}}, {r(2), r(0)});
    REQUIRE(res.solution.has_value());
    CHECK((*res.solution)[0] == r(1));
    CHECK((*res.solution)[1] == r(1));

    // Inconsistent: x + y = 1, x + y = 2.
    auto bad = solve_rational_system({{r(1), r(1)}, {r(1), r(1)}}, {r(1), r(2)});
    CHECK(!bad.solution.has_value());
    CHECK(bad.aug_rank == bad.rank + 1);
}
