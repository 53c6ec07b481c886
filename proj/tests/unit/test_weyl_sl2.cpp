#include <doctest.h>

#include "weylmod/weyl_sl2.hpp"

using namespace weylmod;

namespace {

RootMultiset roots(std::initializer_list<RootPair> p) { return RootMultiset(std::vector<RootPair>(p)); }

std::map<int, long> binomial_character(int m)
{
    std::map<int, long> out;
    for (int r = 0; r <= m; ++r)
        out[m - 2 * r] = binomial(m, r).get_num().get_si();
    return out;
}

Vector act(const SparseMatrix& a, const Vector& v) { return a.apply(v); }

}  // namespace

TEST_CASE("mode images")
{
    CHECK((mode_image(1, 2, 2).coeffs == Vector{Rational(1), Rational(2)}));
    CHECK((mode_image(1, 2, 0).coeffs == Vector{Rational(1), Rational(0)}));
    CHECK((mode_image(1, 2, -1).coeffs == Vector{Rational(1), Rational(-1)}));
    CHECK((mode_image(2, 3, -1).coeffs == Vector{make_rational(1, 2), make_rational(-1, 4), make_rational(1, 8)}));
    CHECK_THROWS(mode_image(0, 2, 1));
}

TEST_CASE("evaluation module")
{
    auto w = single_root_module(1, 1);
    CHECK(w.dim() == 2);
    CHECK(character(w) == std::map<int, long>{{1, 1}, {-1, 1}});
    Vector hw = w.operators().hw_vector();
    for (long k = -3; k <= 3; ++k)
        CHECK((act(w.mode(Kind::Lower, k), hw) == Vector{Rational(0), Rational(1)}));
    CHECK(is_irreducible(w));
    CHECK_THROWS(single_root_module(0, 1));
}

TEST_CASE("W((1-u)^2)")
{
    auto w = single_root_module(1, 2);
    CHECK(w.dim() == 4);
    CHECK(w.weights() == std::vector<int>{2, 0, 0, -2});
    Vector hw = w.operators().hw_vector();
    CHECK((act(w.mode(Kind::Cartan, 2), hw) == Vector{Rational(2), Rational(0), Rational(0), Rational(0)}));
    CHECK(singular_vectors(w).size() == 2);
    CHECK_FALSE(is_irreducible(w));
    auto q = irreducible_quotient(w);
    CHECK(q.dim == 3);
    CHECK(character(q) == std::map<int, long>{{2, 1}, {0, 1}, {-2, 1}});
    CHECK(is_irreducible(q));
    // x-_2 = 2 x-_1 - x-_0
    auto lhs = w.mode(Kind::Lower, 2);
    auto rhs = w.mode(Kind::Lower, 1).scaled(2) - w.mode(Kind::Lower, 0);
    CHECK(lhs == rhs);
}

TEST_CASE("characters are binomial")
{
    for (int m = 1; m <= 4; ++m)
        CHECK(character(single_root_module(make_rational(1, 2), m)) == binomial_character(m));
    CHECK(character(weyl_module(roots({{1, 1}, {-2, 2}}))) == binomial_character(3));
}

TEST_CASE("tensor products")
{
    auto w = tensor(single_root_module(1, 1), single_root_module(2, 1));
    CHECK(w.dim() == 4);
    CHECK(is_cyclic(w, w.operators().hw_vector()).cyclic);
    CHECK(w.roots() == roots({{1, 1}, {2, 1}}));

    // Λ_1 acts on w ⊗ w by the u-coefficient of (1-u)(1-2u)
    Vector hw = w.operators().hw_vector();
    Vector lam1 = act(w.mode(Kind::Cartan, 1), hw);
    for (auto& x : lam1)
        x = -x;
    CHECK(lam1[0] == -3);

    CHECK_THROWS_AS(tensor(single_root_module(1, 1), single_root_module(1, 1)), std::invalid_argument);
    auto bad = tensor(single_root_module(1, 1), single_root_module(1, 1), true);
    CHECK(bad.dim() == 4);
    auto r = is_cyclic(bad, bad.operators().hw_vector());
    CHECK_FALSE(r.cyclic);
    CHECK(r.closure_dim == 3);
    CHECK_FALSE(is_cyclic(w, Vector(4)).cyclic);
}

TEST_CASE("weyl_module dimensions and irreducibility")
{
    CHECK(weyl_module(roots({{1, 1}})).dim() == 2);
    CHECK(weyl_module(roots({{1, 2}})).dim() == 4);
    auto three = weyl_module(roots({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(three.dim() == 8);
    CHECK(is_irreducible(three));
    CHECK(irreducible_quotient(three).dim == 8);
    CHECK(singular_vectors(weyl_module(roots({{1, 1}, {2, 1}}))).size() == 1);
    CHECK(weyl_module(RootMultiset{}).dim() == 1);

    auto cube = single_root_module(1, 3);
    auto q = irreducible_quotient(cube);
    CHECK(q.dim == 4);
    CHECK(character(q) == std::map<int, long>{{3, 1}, {1, 1}, {-1, 1}, {-3, 1}});
}

TEST_CASE("defining relations hold")
{
    for (auto r : {roots({{1, 2}}), roots({{1, 1}, {2, 1}}), roots({{make_rational(1, 2), 2}, {-1, 1}})}) {
        auto w = weyl_module(r);
        auto rep = verify_defining_relations(w);
        for (const auto& e : rep.entries)
            CHECK_MESSAGE(e.pass, e.id << ": " << e.detail);
        CHECK(bracket_fidelity(w).all_pass());
    }
}

TEST_CASE("relation spot checks on W((1-u)^2)")
{
    auto w = single_root_module(1, 2);
    Vector hw = w.operators().hw_vector();
    // Λ_3 w = 0 with Λ_3 = -(h_1^3 - 3 h_1 h_2 + 2 h_3)/6
    auto h1 = w.mode(Kind::Cartan, 1), h2 = w.mode(Kind::Cartan, 2), h3 = w.mode(Kind::Cartan, 3);
    SparseMatrix lam3 = (h1 * h1 * h1 - (h1 * h2).scaled(3) + h3.scaled(2)).scaled(make_rational(-1, 6));
    CHECK(is_zero(lam3.apply(hw)));

    auto pi_x = [&](long s) {
        auto two = weyl_module(roots({{1, 1}, {2, 1}}));
        // π = 1 - 3u + 2u^2
        return two.mode(Kind::Lower, s - 1) - two.mode(Kind::Lower, s - 2).scaled(3) + two.mode(Kind::Lower, s - 3).scaled(2);
    };
    for (long s = -2; s <= 6; ++s)
        CHECK(pi_x(s).is_zero());
}

TEST_CASE("corrupted structure constants are caught")
{
    StructureConstants bad;
    bad.raise_lower = 2;
    CHECK_FALSE(bracket_fidelity(single_root_module(1, 2), bad).all_pass());
}
