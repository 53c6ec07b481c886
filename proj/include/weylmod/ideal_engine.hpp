#pragma once

// The commutative model of the single-root Weyl module: R_m = Q[z_0..z_{m-1}]
// modulo the ideal J_m generated by the coefficients (Z_0(u)^r)_s, s >= m+1.
// z_i has z-degree 1 and weight i; J_m is homogeneous for both gradings, so
// all linear algebra runs one bigraded piece (r, d) at a time.

#include "weylmod/exactnum.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace weylmod {

struct ZMonomial {
    std::vector<int> exponents;  // e_0..e_{m-1}

    static ZMonomial one(int m) { return {std::vector<int>(m, 0)}; }
    static ZMonomial from_indices(int m, const std::vector<int>& indices);

    int degree() const;
    int weight() const;
    /// Variable indices with repetition, ascending: z_0^2 z_2 -> {0, 0, 2}.
    std::vector<int> indices() const;
    ZMonomial operator*(const ZMonomial& other) const;
    auto operator<=>(const ZMonomial&) const = default;
    std::string to_string() const;  // "1", "z0^2*z1"
};

using ZPolynomial = std::map<ZMonomial, Rational>;

void add_term(ZPolynomial& p, const ZMonomial& mono, const Rational& c);
ZPolynomial multiply(const ZPolynomial& a, const ZPolynomial& b);
std::string to_string(const ZPolynomial& p);

/// Coefficients of Z_j(u) = Σ_{i=j}^{m-1} z_i u^{i-j+1}, indexed by the power of u.
std::vector<ZPolynomial> z_series(int m, int j);

struct Generator {
    int s;          // coefficient index
    ZPolynomial p;
};

/// Nonzero coefficients (Z_0(u)^r)_s for m+1 <= s <= r·m.
std::vector<Generator> jm_generators(int m, int r);

/// B_m ordered by z-degree, then lexicographically by index tuple.
std::vector<ZMonomial> bm_monomials(int m);

/// Monomials of z-degree r and weight d in m variables, index tuples ascending.
std::vector<ZMonomial> piece_monomials(int m, int r, int d);

struct QuotientPiece {
    int r = 0;
    int d = 0;
    std::vector<ZMonomial> monomials;  // non-B_m first, then B_m
    std::size_t bm_count = 0;
    std::size_t ideal_rank = 0;
    std::size_t quotient_dim = 0;
    bool bm_is_basis = false;
    /// Each monomial of the piece -> coordinates on the piece's B_m monomials.
    std::map<ZMonomial, Vector> normal_forms;
};

struct GradedQuotient {
    int m = 0;
    std::vector<QuotientPiece> pieces;
    std::vector<long> hilbert_by_degree;  // r = 0..m
    long total = 0;
    std::vector<ZMonomial> basis;         // bm_monomials(m)
    std::vector<std::string> failures;    // empty when every check held

    bool ok() const { return failures.empty(); }
    long basis_index(const ZMonomial& mono) const;
    const QuotientPiece* piece(int r, int d) const;

private:
    friend GradedQuotient graded_quotient(int m);
    std::map<ZMonomial, long> index_;
    std::map<std::pair<int, int>, std::size_t> piece_index_;
};

/// Processes every piece with r <= m+1 (and r = m+2 as a second check for
/// m <= 3).  Inconsistencies are listed in `failures`, never thrown.
GradedQuotient graded_quotient(int m);

/// Cached per m; the returned reference stays valid for the process lifetime.
const GradedQuotient& graded_quotient_cached(int m);

/// Coordinates on q.basis.  Throws std::logic_error if a needed piece has no
/// B_m basis (see GradedQuotient::failures).
Vector normal_form(const GradedQuotient& q, const ZPolynomial& p);

struct ChainReport {
    int m = 0;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // "(j, generator)" descriptions
    bool pass() const { return failures.empty(); }
};

/// For 1 <= j < m, every generator of J_{m-j} shifted by z_i -> z_{i+1} lies in
///   J_{m,j-1} = J_m + Σ_{s >= m-j+1} Σ_{1 <= r <= m-s} R_m (Z_1(u)^r)_s.
/// Generators of z-degree > m are skipped: that layer of R_m already lies in J_m.
ChainReport jmj_chain_check(int m);

/// det [C(k+i, j)]_{i,j=1..r-k+1}; equals C(r+1, k).
Rational binomial_matrix_det(int r, int k);

}  // namespace weylmod
