#include <doctest.h>

#include "weylmod/rootdata.hpp"

#include <random>

using namespace weylmod;

TEST_CASE("positive root counts")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(positive_roots(cartan_type("A" + std::to_string(n))).size() == std::size_t(n * (n + 1) / 2));
    for (int n = 4; n <= 8; ++n)
        CHECK(positive_roots(cartan_type("D" + std::to_string(n))).size() == std::size_t(n * (n - 1)));
    CHECK(positive_roots(cartan_type("E6")).size() == 36);
    CHECK(positive_roots(cartan_type("E7")).size() == 63);
    CHECK(positive_roots(cartan_type("E8")).size() == 120);
    CHECK(positive_roots(cartan_type("B2")).size() == 4);
    CHECK(positive_roots(cartan_type("C3")).size() == 9);
    CHECK(positive_roots(cartan_type("G2")).size() == 6);
    CHECK(positive_roots(cartan_type("F4")).size() == 24);
}

TEST_CASE("highest roots")
{
    CHECK(highest_root(cartan_type("A1")).coords == std::vector<int>{1});
    CHECK(highest_root(cartan_type("A3")).coords == std::vector<int>{1, 1, 1});
    CHECK(highest_root(cartan_type("D4")).coords == std::vector<int>{1, 2, 1, 1});
    CHECK(highest_root(cartan_type("E8")).coords == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(highest_root(cartan_type("G2")).coords == std::vector<int>{3, 2});
    CHECK(highest_short_root(cartan_type("G2")).coords == std::vector<int>{2, 1});
    CHECK(highest_short_root(cartan_type("B2")).coords == std::vector<int>{1, 1});
    CHECK(highest_root(cartan_type("B2")).coords == std::vector<int>{1, 2});
    CHECK(highest_short_root(cartan_type("A2")) == highest_root(cartan_type("A2")));
}

TEST_CASE("invalid cartan data")
{
    CHECK_THROWS(cartan_type("Z3"));
    CHECK_THROWS(cartan_type("A9"));
    CartanData affine{"A1~", {{2, -2}, {-2, 2}}, {1, 1}};
    CHECK_THROWS_AS(positive_roots(affine), std::domain_error);
    CartanData bad{"bad", {{2, -1}, {-2, 2}}, {1, 1}};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("pi_beta")
{
    auto a2 = cartan_type("A2");
    Polynomial p1{1, -1}, p2{1, -2};
    CHECK(pi_beta({p1, p2}, highest_root(a2), a2) == p1 * p2);
    CHECK(pi_beta({p1, p2}, PositiveRoot{{1, 0}, 1}, a2) == p1);

    auto d4 = cartan_type("D4");
    CHECK(pi_beta({Polynomial{1}, Polynomial{1, -1}, Polynomial{1}, Polynomial{1}}, highest_root(d4), d4) ==
          Polynomial{1, -2, 1});

    auto b2 = cartan_type("B2");
    PositiveRoot fake{{1, 0}, 2};
    fake.d = 3;
    CHECK_THROWS_AS(pi_beta({p1, p2}, fake, b2), std::invalid_argument);
}

TEST_CASE("exponent integrality holds on every shipped type")
{
    for (const auto& tag : shipped_cartan_types()) {
        auto c = cartan_type(tag);
        std::vector<Polynomial> pis(c.rank(), Polynomial{1, -1});
        for (const auto& beta : positive_roots(c))
            CHECK_NOTHROW(pi_beta(pis, beta, c));
    }
}

TEST_CASE("divisibility by pi_theta_s")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 2);
    for (const char* tag : {"A1", "A2", "A3", "A4", "D4", "B2", "G2", "C3"}) {
        auto c = cartan_type(tag);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Polynomial> pis;
            for (std::size_t i = 0; i < c.rank(); ++i) {
                Vector v{Rational(1)};
                for (int k = deg(rng); k > 0; --k)
                    v.push_back(coeff(rng));
                pis.emplace_back(v);
            }
            CHECK(pi_theta_divisibility_check(pis, c));
        }
    }
}

TEST_CASE("irreducibility predicate")
{
    auto a1 = cartan_type("A1");
    CHECK(weyl_irreducibility_predicate({Polynomial{1, -3, 2}}, a1));
    CHECK_FALSE(weyl_irreducibility_predicate({Polynomial{1, -2, 1}}, a1));
    auto a2 = cartan_type("A2");
    CHECK_FALSE(weyl_irreducibility_predicate({Polynomial{1, -1}, Polynomial{1, -1}}, a2));
    CHECK(weyl_irreducibility_predicate({Polynomial{1, -1}, Polynomial{1, -2}}, a2));
    CHECK_THROWS(weyl_irreducibility_predicate({Polynomial{1}, Polynomial{1}}, cartan_type("B2")));
}

TEST_CASE("fundamental modules")
{
    auto d4 = cartan_type("D4");
    CHECK(fundamental_module_irreducible(d4, 0));
    CHECK_FALSE(fundamental_module_irreducible(d4, 1));
    auto a3 = cartan_type("A3");
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(fundamental_module_irreducible(a3, i));
}
