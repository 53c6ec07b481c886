#include <doctest.h>

#include "weylmod/uea_sl2.hpp"

#include <random>

using namespace weylmod;

namespace {

const ModeWindow W{-6, 12};

UEAElement gen(Kind k, long m) { return UEAElement::generator(k, m, W); }
UEAElement xp(long m) { return gen(Kind::Raise, m); }
UEAElement xm(long m) { return gen(Kind::Lower, m); }
UEAElement h(long m) { return gen(Kind::Cartan, m); }

}  // namespace

TEST_CASE("straightening single commutators")
{
    CHECK(multiply(xp(0), xm(1)) == xm(1).concat(xp(0)) + h(1));
    CHECK(multiply(h(1), xm(1)) == xm(1).concat(h(1)) - xm(2).scaled(2));
    CHECK(straighten(xm(1).concat(xm(2))) == xm(1).concat(xm(2)));
    CHECK(multiply(xp(1), h(0)) == h(0).concat(xp(1)) - xp(1).scaled(2));
    CHECK(multiply(h(2), h(-1)) == h(-1).concat(h(2)));
}

TEST_CASE("normal form printing")
{
    auto e = mod_positive(multiply(multiply(xp(0), xm(1)), xm(1))).scaled(make_rational(1, 2));
    CHECK(e.to_string() == "x-_1*h_1 - x-_2");
}

TEST_CASE("mod_positive")
{
    CHECK(mod_positive(xm(1).concat(xp(0)) + h(1)) == h(1));
    CHECK(mod_positive(h(2)) == h(2));
}

TEST_CASE("lambda modes")
{
    CHECK(lambda_mode(0, W) == UEAElement::scalar(1, W));
    CHECK(lambda_mode(1, W) == h(1).scaled(-1));
    CHECK(lambda_mode(2, W) == (h(1).concat(h(1)) - h(2)).scaled(make_rational(1, 2)));
    CHECK(lambda_mode(-1, W) == h(-1).scaled(-1));
}

TEST_CASE("lambda modes evaluated at power sums give the polynomial")
{
    RootMultiset roots({{1, 2}, {make_rational(-1, 2), 1}, {3, 1}});
    auto plus = lambda_coeffs_from_roots(roots, Sign::Plus, 6);
    auto minus = lambda_coeffs_from_roots(roots, Sign::Minus, 6);
    for (long k = -6; k <= 6; ++k) {
        Rational value = 0;
        const auto lambda = lambda_mode(k, W);
        for (const auto& [mono, c] : lambda.terms()) {
            Rational t = c;
            for (const auto& g : mono)
                t *= power_sum(roots, g.mode);
            value += t;
        }
        CHECK(value == (k >= 0 ? plus[k] : minus[-k]));
    }
}

TEST_CASE("divided power series coefficients")
{
    CHECK(series_divided_power_coeff(Series::XMinus, 1, 2, W) == xm(2));
    CHECK(series_divided_power_coeff(Series::XMinus, 2, 3, W) == xm(1).concat(xm(2)));
    CHECK(series_divided_power_coeff(Series::XMinus, 2, 2, W) == xm(1).concat(xm(1)).scaled(make_rational(1, 2)));
    CHECK(series_divided_power_coeff(Series::XMinusZero, 1, 1, W) == xm(0));
    CHECK(series_divided_power_coeff(Series::XMinus, 0, 0, W) == UEAElement::scalar(1, W));
    CHECK(series_divided_power_coeff(Series::XMinus, 3, 2, W).is_zero());
    ModeWindow small{-1, 1};
    auto t = series_divided_power_coeff(Series::HTilde, 1, 0, small);
    CHECK(t == UEAElement::generator(Kind::Cartan, -1, small));
}

TEST_CASE("garland identities, small cases")
{
    auto g11 = garland_check(1, 1, GarlandVariant::I);
    CHECK(g11.equal);
    CHECK(g11.lhs == h(1));
    auto g12 = garland_check(1, 2, GarlandVariant::I);
    CHECK(g12.equal);
    CHECK(g12.lhs.to_string() == "x-_1*h_1 - x-_2");
    CHECK(garland_check(2, 2, GarlandVariant::II).equal);
    CHECK_THROWS(garland_check(2, 1, GarlandVariant::I));
}

TEST_CASE("garland identities fail under corrupted structure constants")
{
    StructureConstants bad;
    bad.cartan_lower = -3;
    CHECK_FALSE(garland_check(1, 2, GarlandVariant::I, bad).equal);
}

TEST_CASE("bracket antisymmetry on generators")
{
    ModeWindow w{-6, 6};
    for (Kind a : {Kind::Lower, Kind::Cartan, Kind::Raise})
        for (Kind b : {Kind::Lower, Kind::Cartan, Kind::Raise})
            for (long r = -3; r <= 3; ++r)
                for (long s = -3; s <= 3; ++s) {
                    auto x = UEAElement::generator(a, r, w), y = UEAElement::generator(b, s, w);
                    auto lhs = multiply(x, y) - multiply(y, x);
                    CHECK(lhs == generator_bracket({a, r}, {b, s}, w));
                }
}

TEST_CASE("straightening is associative on random products")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> kind(0, 2), mode(-2, 2), len(1, 3);
    auto random_word = [&] {
        UEAElement e = UEAElement::scalar(1, W);
        for (int i = len(rng); i > 0; --i)
            e = e.concat(gen(static_cast<Kind>(kind(rng)), mode(rng)));
        return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_word(), b = random_word();
        CHECK(straighten(a.concat(b)) == multiply(straighten(a), straighten(b)));
    }
}

TEST_CASE("shift automorphism")
{
    CHECK(shift_automorphism(xm(3), 1) == xm(2));
    CHECK(shift_automorphism(xp(3), 1) == xp(4));
    CHECK(shift_automorphism(h(2), 1) == h(2));
    CHECK(shift_automorphism(xp(0).concat(xm(1)), 1) == multiply(xp(1), xm(0)));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> kind(0, 2), mode(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        UEAElement e = UEAElement::scalar(1, W);
        for (int i = 0; i < 3; ++i)
            e = e.concat(gen(static_cast<Kind>(kind(rng)), mode(rng)));
        auto shifted = shift_automorphism(e, 1);
        CHECK(shifted == shift_automorphism(straighten(e), 1));
        CHECK(shift_automorphism(shifted, -1) == straighten(e));
    }
}

TEST_CASE("mode window overflow")
{
    ModeWindow tiny{0, 1};
    auto a = UEAElement::generator(Kind::Raise, 1, tiny), b = UEAElement::generator(Kind::Lower, 1, tiny);
    CHECK_THROWS_AS(multiply(a, b), ModeWindowOverflow);
}
