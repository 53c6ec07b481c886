#include <doctest.h>

#include "weylmod/exactnum.hpp"

using namespace weylmod;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(to_string(make_rational(-2, 4)) == "-1/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("binomial and power")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);
    CHECK(power(make_rational(1, 2), -3) == 8);
    CHECK(power(Rational(3), 0) == 1);
}

TEST_CASE("rref and rank")
{
    ExactMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto r = rref(a);
    CHECK(r.rank() == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced(0, 2) == 1);
    CHECK(r.reduced(1, 2) == 1);
    CHECK(rank(ExactMatrix::identity(4)) == 4);
}

TEST_CASE("nullspace vectors are killed")
{
    ExactMatrix a{{1, 2, 3}, {2, 4, 6}};
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(is_zero(a.apply(v)));
}

TEST_CASE("determinant and solve")
{
    CHECK(determinant(ExactMatrix{{2, 1}, {3, 3}}) == 3);
    CHECK(determinant(ExactMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
    Vector b{Rational(5), Rational(10)};
    auto x = solve(ExactMatrix{{1, 2}, {3, 4}}, b);
    REQUIRE(x);
    CHECK((*x)[0] == 0);
    CHECK((*x)[1] == make_rational(5, 2));
    Vector bad{Rational(1), Rational(3)};
    CHECK_FALSE(solve(ExactMatrix{{1, 2}, {2, 4}}, bad));
}

TEST_CASE("preferred pivots")
{
    ExactMatrix a{{1, 1, 0}, {0, 1, 1}};
    std::vector<std::size_t> order{2, 1, 0};
    auto r = rref_with_preferred_pivots(a, order);
    CHECK(r.pivots == std::vector<std::size_t>{2, 1});
}

TEST_CASE("row space membership")
{
    RowSpace rs(3);
    CHECK(rs.insert({1, 1, 0}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 2, 1}));
    CHECK(rs.contains({2, 0, -2}));
    CHECK_FALSE(rs.contains({0, 0, 1}));
    CHECK(rs.rank() == 2);
}

TEST_CASE("sparse matrices agree with dense")
{
    ExactMatrix a{{0, 1}, {0, 0}}, b{{0, 0}, {1, 0}};
    auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK(sa.commutator(sb).to_dense() == ExactMatrix{{1, 0}, {0, -1}});
    CHECK(sa.commutator(sb).is_diagonal());
    CHECK(SparseMatrix::identity(3).is_diagonal());

    auto left = sa.tensor_identity(2);
    auto right = sb.identity_tensor(2);
    CHECK(left.rows() == 4);
    CHECK(left.at(0, 2) == 1);
    CHECK(left.at(1, 3) == 1);
    CHECK(right.at(1, 0) == 1);
    CHECK(right.at(3, 2) == 1);
    CHECK(left.commutator(right).is_zero());
}
