#pragma once

// Univariate polynomials in u, degree-capped power series, and factored
// (root multiset) descriptions of unital polynomials.

#include "weylmod/exactnum.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylmod {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Vector coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Constant term equal to 1.
    bool is_unital() const { return !coeffs_.empty() && coeffs_[0] == 1; }

    const Vector& coeffs() const { return coeffs_; }
    /// Coefficient of u^k; zero outside the stored range.
    Rational coeff(long k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& factor) const;
    bool operator==(const Polynomial& other) const = default;

    Rational evaluate(const Rational& u) const;
    Polynomial derivative() const;
    Polynomial pow(unsigned exponent) const;

    /// "1 - 3u + 2u^2"
    std::string to_string() const;

private:
    void trim();
    Vector coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& divisor, const Polynomial& p);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// u^deg p · p(1/u), normalized to constant term 1.
Polynomial pi_minus(const Polynomial& p);

/// gcd(p, p') is constant.
bool is_squarefree(const Polynomial& p);

/// Degree-capped power series in u: coefficients 0..cap are kept, everything
/// beyond is dropped.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t cap);
    TruncatedSeries(std::size_t cap, const Vector& coeffs);
    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t cap);

    std::size_t cap() const { return coeffs_.size() - 1; }
    const Vector& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    Rational& operator[](std::size_t k) { return coeffs_[k]; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    bool operator==(const TruncatedSeries& other) const = default;

    /// Requires constant term 0.
    TruncatedSeries exp() const;
    /// Requires constant term 1.
    TruncatedSeries log() const;

    Polynomial to_polynomial() const;

private:
    Vector coeffs_;
};

struct RootPair {
    Rational root;       // a, with factor (1 - a u)
    long multiplicity;   // m > 0
    bool operator==(const RootPair&) const = default;
};

/// Factored form of a unital polynomial: prod (1 - a_i u)^{m_i}, roots distinct
/// and nonzero.  Pairs are kept sorted by root.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<RootPair> pairs);

    const std::vector<RootPair>& pairs() const { return pairs_; }
    long degree() const;
    bool empty() const { return pairs_.empty(); }
    bool operator==(const RootMultiset&) const = default;

    /// Union with multiplicities added (used for tensor products).
    RootMultiset merged(const RootMultiset& other) const;
    bool shares_root_with(const RootMultiset& other) const;

    /// [["1",2],["1/2",1]]
    std::string to_json() const;

private:
    std::vector<RootPair> pairs_;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Reads "1 - 3u + 2u^2" (integer or p/q coefficients, optional '*').
Polynomial parse_polynomial(std::string_view text);
/// Reads [["1",2],["1/2",1]]; roots may also be bare integers.
RootMultiset parse_root_multiset(std::string_view json_text);

/// prod (1 - a u)^m.  Rejects zero roots.
Polynomial poly_from_roots(const RootMultiset& roots);

/// Rational-root factorization of a unital polynomial.  Throws
/// std::domain_error when an irreducible factor of degree > 1 remains.
RootMultiset factor_unital(const Polynomial& p);

/// p_k = sum m_i a_i^k (negative k uses reciprocal roots).
Rational power_sum(const RootMultiset& roots, long k);

enum class Sign { Plus, Minus };

/// exp(-sum_{k>=1} p_{±k} u^k / k) truncated at `cap`.  For Sign::Plus this is
/// the polynomial itself; for Sign::Minus its reversed companion.  Computed
/// from power sums, not by multiplying linear factors.
TruncatedSeries lambda_coeffs_from_roots(const RootMultiset& roots, Sign sign, std::size_t cap);

}  // namespace weylmod
