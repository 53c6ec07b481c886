#include <doctest.h>

#include "weylmod/polyseries.hpp"

using namespace weylmod;

TEST_CASE("polynomial from roots")
{
    CHECK(poly_from_roots(RootMultiset({{1, 2}})) == Polynomial{1, -2, 1});
    CHECK(poly_from_roots(RootMultiset({{1, 1}, {2, 1}})) == Polynomial{1, -3, 2});
    CHECK(poly_from_roots(RootMultiset{}) == Polynomial{1});
    CHECK_THROWS(RootMultiset({{0, 1}}));
    CHECK_THROWS(RootMultiset({{1, 1}, {1, 2}}));
}

TEST_CASE("polynomial text round trip")
{
    auto p = parse_polynomial("1 - 3u + 2u^2");
    CHECK(p == Polynomial{1, -3, 2});
    CHECK(p.to_string() == "1 - 3u + 2u^2");
    CHECK(parse_polynomial("1 - 1/2u") == Polynomial(Vector{Rational(1), make_rational(-1, 2)}));
    CHECK(parse_polynomial("1 - 1/2*u").is_unital());
    try {
        parse_polynomial("1 - 3v");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("root multiset json")
{
    auto r = parse_root_multiset(R"([["1",2],["1/2",1]])");
    REQUIRE(r.pairs().size() == 2);
    CHECK(r.degree() == 3);
    CHECK(r.pairs()[0].root == make_rational(1, 2));
    CHECK(r.to_json() == R"([["1/2",1],["1",2]])");
    CHECK(parse_root_multiset("[[3,1]]").pairs()[0].root == 3);
    CHECK_THROWS_AS(parse_root_multiset("[[\"a\",1]]"), std::invalid_argument);
}

TEST_CASE("pi minus")
{
    CHECK(pi_minus(Polynomial{1, -2}) == Polynomial(Vector{Rational(1), make_rational(-1, 2)}));
    CHECK(pi_minus(Polynomial{1, -3, 2}) == Polynomial(Vector{Rational(1), make_rational(-3, 2), make_rational(1, 2)}));
    CHECK_THROWS(pi_minus(Polynomial{2, 1}));
}

TEST_CASE("squarefree and gcd")
{
    CHECK(is_squarefree(Polynomial{1, -3, 2}));
    CHECK_FALSE(is_squarefree(Polynomial{1, -2, 1}));
    CHECK(gcd(Polynomial{1, -2, 1}, Polynomial{1, -1}).degree() == 1);
    CHECK(divides(Polynomial{1, -1}, Polynomial{1, -3, 2}));
    CHECK_FALSE(divides(Polynomial{1, -4}, Polynomial{1, -3, 2}));
}

TEST_CASE("factor unital")
{
    auto r = factor_unital(Polynomial{1, -3, 2});
    CHECK(r == RootMultiset({{1, 1}, {2, 1}}));
    auto s = factor_unital(poly_from_roots(RootMultiset({{make_rational(1, 2), 2}, {-3, 1}})));
    CHECK(s == RootMultiset({{-3, 1}, {make_rational(1, 2), 2}}));
    CHECK_THROWS_AS(factor_unital(Polynomial{1, 0, 1}), std::domain_error);
}

TEST_CASE("power sums")
{
    RootMultiset r({{1, 1}, {2, 1}});
    CHECK(power_sum(r, 2) == 5);
    CHECK(power_sum(r, -1) == make_rational(3, 2));
    CHECK(power_sum(r, 0) == 2);
}

TEST_CASE("lambda coefficients match the polynomial")
{
    for (auto roots : {RootMultiset({{1, 2}, {-2, 1}}), RootMultiset({{make_rational(1, 2), 1}, {3, 2}})}) {
        auto p = poly_from_roots(roots);
        auto plus = lambda_coeffs_from_roots(roots, Sign::Plus, 8);
        CHECK(plus.to_polynomial() == p);
        auto minus = lambda_coeffs_from_roots(roots, Sign::Minus, 8);
        CHECK(minus.to_polynomial() == pi_minus(p));
    }
}

TEST_CASE("series exp and log are inverse")
{
    TruncatedSeries f(6, {0, 1, -2, make_rational(1, 3)});
    CHECK(f.exp().log() == f);
    auto g = TruncatedSeries::from_polynomial(Polynomial{1, -3, 2}, 6);
    CHECK(g.log().exp() == g);
}
