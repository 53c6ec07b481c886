#include <doctest.h>

#include "weylmod/ideal_engine.hpp"

using namespace weylmod;

namespace {

ZMonomial z(int m, std::vector<int> idx) { return ZMonomial::from_indices(m, idx); }

std::vector<std::string> names(const std::vector<ZMonomial>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(x.to_string());
    return out;
}

}  // namespace

TEST_CASE("z series")
{
    auto s = z_series(2, 0);
    REQUIRE(s.size() == 3);
    CHECK(s[0].empty());
    CHECK(to_string(s[1]) == "z0");
    CHECK(to_string(s[2]) == "z1");
    auto t = z_series(2, 1);
    REQUIRE(t.size() == 2);
    CHECK(to_string(t[1]) == "z1");
    CHECK_THROWS(z_series(2, 2));
}

TEST_CASE("J_m generators")
{
    CHECK(jm_generators(2, 1).empty());
    auto g = jm_generators(2, 2);
    REQUIRE(g.size() == 2);
    CHECK(g[0].s == 3);
    CHECK(to_string(g[0].p) == "2*z0*z1");
    CHECK(g[1].s == 4);
    CHECK(to_string(g[1].p) == "z1^2");
    auto h = jm_generators(2, 3);
    REQUIRE(h.size() == 4);
    CHECK(to_string(h[0].p) == "z0^3");
    CHECK(to_string(h[1].p) == "3*z0^2*z1");
    CHECK(to_string(h[3].p) == "z1^3");
    for (int m = 1; m <= 4; ++m)
        for (int r = 1; r <= 4; ++r)
            for (const auto& gen : jm_generators(m, r))
                for (const auto& [mono, c] : gen.p) {
                    CHECK(mono.degree() == r);
                    CHECK(mono.weight() == gen.s - r);
                }
}

TEST_CASE("B_m monomials")
{
    CHECK(names(bm_monomials(1)) == std::vector<std::string>{"1", "z0"});
    CHECK(names(bm_monomials(2)) == std::vector<std::string>{"1", "z0", "z1", "z0^2"});
    CHECK(names(bm_monomials(3)) ==
          std::vector<std::string>{"1", "z0", "z1", "z2", "z0^2", "z0*z1", "z1^2", "z0^3"});
    for (int m = 1; m <= 8; ++m)
        CHECK(bm_monomials(m).size() == (std::size_t(1) << m));
}

TEST_CASE("graded quotient small cases")
{
    auto q1 = graded_quotient(1);
    CHECK(q1.ok());
    CHECK(q1.hilbert_by_degree == std::vector<long>{1, 1});
    auto q2 = graded_quotient(2);
    CHECK(q2.ok());
    CHECK(q2.total == 4);
    auto q3 = graded_quotient(3);
    CHECK(q3.ok());
    CHECK(q3.hilbert_by_degree == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("graded quotient dimensions are binomial")
{
    for (int m = 1; m <= 6; ++m) {
        const auto& q = graded_quotient_cached(m);
        CHECK_MESSAGE(q.ok(), "m=" << m);
        CHECK(q.total == (1L << m));
        for (int r = 0; r <= m; ++r)
            CHECK(q.hilbert_by_degree[r] == binomial(m, r));
        for (const auto& piece : q.pieces)
            CHECK(piece.bm_is_basis);
    }
}

TEST_CASE("normal forms")
{
    const auto& q = graded_quotient_cached(2);
    auto nf = [&](ZPolynomial p) { return normal_form(q, p); };
    CHECK(is_zero(nf({{z(2, {0, 1}), 1}})));
    Vector sq = nf({{z(2, {0, 0}), 1}});
    CHECK(sq[q.basis_index(z(2, {0, 0}))] == 1);
    CHECK(is_zero(nf({{z(2, {0, 0, 0}), 1}})));

    for (int m = 1; m <= 5; ++m) {
        const auto& qm = graded_quotient_cached(m);
        for (int r = 1; r <= m + 1; ++r)
            for (const auto& g : jm_generators(m, r))
                CHECK(is_zero(normal_form(qm, g.p)));
        // projection property
        for (const auto& piece : qm.pieces)
            for (const auto& mono : piece.monomials) {
                Vector v = normal_form(qm, {{mono, Rational(1)}});
                ZPolynomial back;
                for (std::size_t i = 0; i < v.size(); ++i)
                    add_term(back, qm.basis[i], v[i]);
                CHECK(normal_form(qm, back) == v);
            }
    }
}

TEST_CASE("J_{m,j} chain")
{
    CHECK(jmj_chain_check(1).pass());
    CHECK(jmj_chain_check(1).checked == 0);
    for (int m = 2; m <= 4; ++m) {
        auto rep = jmj_chain_check(m);
        CHECK_MESSAGE(rep.pass(), "m=" << m);
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("binomial determinant")
{
    CHECK(binomial_matrix_det(0, 0) == 1);
    CHECK(binomial_matrix_det(2, 1) == 3);
    CHECK(binomial_matrix_det(3, 1) == 4);
    for (int r = 0; r <= 6; ++r)
        for (int k = 0; k <= r; ++k)
            CHECK(binomial_matrix_det(r, k) == binomial(r + 1, k));
}
