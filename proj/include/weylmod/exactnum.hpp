#pragma once

// Exact rational scalars and dense linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylmod {

/// Arbitrary-precision rational, always kept canonical (lowest terms, positive
/// denominator).  GMP canonicalizes after every arithmetic operation; the
/// helpers below take care of construction from a numerator/denominator pair.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on bad input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

Rational binomial(long n, long k);           // generalized for n < 0
Rational power(const Rational& base, long exponent);

bool is_zero(std::span<const Rational> v);

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    Vector apply(std::span<const Rational> v) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form.  Pivot = first column with a nonzero entry.
RrefResult rref(ExactMatrix a);

/// Echelon form where pivot columns are searched in `preferred` order instead
/// of left to right.  Columns of the result keep their original positions;
/// each pivot row has a 1 in its pivot column and zeros in every other pivot
/// column.  `preferred` must be a permutation of 0..cols-1.
RrefResult rref_with_preferred_pivots(ExactMatrix a, std::span<const std::size_t> preferred);

std::size_t rank(const ExactMatrix& a);
std::vector<Vector> nullspace(const ExactMatrix& a);
Rational determinant(ExactMatrix a);
std::optional<Vector> solve(const ExactMatrix& a, std::span<const Rational> b);

/// Incrementally maintained row space, kept in reduced echelon form under a
/// fixed column priority order.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim);
    RowSpace(std::size_t dim, std::vector<std::size_t> column_order);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the stored rows (in place); returns true if v became zero.
    bool reduce(Vector& v) const;
    bool contains(Vector v) const { return reduce(v); }
    /// Adds v if independent; returns true when the rank grew.
    bool insert(Vector v);

    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

private:
    std::size_t dim_;
    std::vector<std::size_t> order_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

/// Sparse square-or-rectangular matrix used for module operators.  Rows are
/// kept sorted by column with no explicit zeros.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const ExactMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }
    Rational at(std::size_t r, std::size_t c) const;
    void add_to(std::size_t r, std::size_t c, const Rational& value);

    Vector apply(std::span<const Rational> v) const;
    SparseMatrix operator*(const SparseMatrix& other) const;
    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix operator-(const SparseMatrix& other) const;
    SparseMatrix scaled(const Rational& factor) const;
    void add_scaled(const SparseMatrix& other, const Rational& factor);

    SparseMatrix commutator(const SparseMatrix& other) const;
    ExactMatrix to_dense() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool operator==(const SparseMatrix& other) const;

    SparseMatrix tensor_identity(std::size_t n) const;   // this ⊗ I_n
    SparseMatrix identity_tensor(std::size_t n) const;   // I_n ⊗ this

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

}  // namespace weylmod
