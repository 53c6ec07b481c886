#include "weylmod/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace weylmod {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return std::string(s);
    };

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    mpz_class n(strip_plus(num)), d(std::string{den});
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational binomial(long n, long k)
{
    if (k < 0)
        return 0;
    Rational result = 1;
    for (long i = 0; i < k; ++i) {
        result *= Rational(n - i);
        result /= Rational(i + 1);
    }
    return result;
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("negative power of zero");
        return power(Rational(1) / base, -exponent);
    }
    Rational result = 1, b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/*{{{ ExactMatrix */
ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix p(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (sgn(other(k, c)) != 0)
                    p(r, c) += a * other(k, c);
        }
    return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] += other.data_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] -= other.data_[i];
    return s;
}

Vector ExactMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

bool ExactMatrix::is_zero() const
{
    return weylmod::is_zero(data_);
}
/*}}}*/

/*{{{ echelon forms */
namespace {

// Gauss-Jordan with the column scan order given by `order`.
RrefResult echelon(ExactMatrix a, std::span<const std::size_t> order)
{
    RrefResult out;
    std::size_t next_row = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t col : order) {
        if (next_row == rows)
            break;
        std::size_t pivot_row = next_row;
        while (pivot_row < rows && sgn(a(pivot_row, col)) == 0)
            ++pivot_row;
        if (pivot_row == rows)
            continue;
        if (pivot_row != next_row)
            for (std::size_t c = 0; c < cols; ++c)
                swap(a(pivot_row, c), a(next_row, c));

        Rational inv = 1 / a(next_row, col);
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(a(next_row, c)) != 0)
                a(next_row, c) *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || sgn(a(r, col)) == 0)
                continue;
            Rational factor = a(r, col);
            for (std::size_t c = 0; c < cols; ++c)
                if (sgn(a(next_row, c)) != 0)
                    a(r, c) -= factor * a(next_row, c);
        }
        out.pivots.push_back(col);
        ++next_row;
    }
    out.reduced = std::move(a);
    return out;
}

}  // namespace

RrefResult rref(ExactMatrix a)
{
    std::vector<std::size_t> order(a.cols());
    std::iota(order.begin(), order.end(), 0);
    return echelon(std::move(a), order);
}

RrefResult rref_with_preferred_pivots(ExactMatrix a, std::span<const std::size_t> preferred)
{
    std::vector<bool> seen(a.cols(), false);
    if (preferred.size() != a.cols())
        throw std::invalid_argument("preferred order is not a permutation of the columns");
    for (std::size_t c : preferred) {
        if (c >= a.cols() || seen[c])
            throw std::invalid_argument("preferred order is not a permutation of the columns");
        seen[c] = true;
    }
    return echelon(std::move(a), preferred);
}

std::size_t rank(const ExactMatrix& a)
{
    return rref(a).rank();
}

std::vector<Vector> nullspace(const ExactMatrix& a)
{
    auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(ExactMatrix a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(a(p, col)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c)
                swap(a(p, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(a(r, col)) == 0)
                continue;
            Rational factor = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

std::optional<Vector> solve(const ExactMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto [red, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = red(i, a.cols());
    return x;
}
/*}}}*/

/*{{{ RowSpace */
RowSpace::RowSpace(std::size_t dim) : dim_(dim), order_(dim), pivot_row_(dim, -1)
{
    std::iota(order_.begin(), order_.end(), 0);
}

RowSpace::RowSpace(std::size_t dim, std::vector<std::size_t> column_order)
    : dim_(dim), order_(std::move(column_order)), pivot_row_(dim, -1)
{
    if (order_.size() != dim_)
        throw std::invalid_argument("column order length mismatch");
}

bool RowSpace::reduce(Vector& v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("vector length mismatch");
    bool zero = true;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& coef = v[pivots_[i]];
        if (sgn(coef) == 0)
            continue;
        Rational factor = coef;
        const Vector& row = rows_[i];
        for (std::size_t c = 0; c < dim_; ++c)
            if (sgn(row[c]) != 0)
                v[c] -= factor * row[c];
    }
    for (const auto& x : v)
        if (sgn(x) != 0) {
            zero = false;
            break;
        }
    return zero;
}

bool RowSpace::insert(Vector v)
{
    if (reduce(v))
        return false;
    std::size_t pivot = dim_;
    for (std::size_t c : order_)
        if (sgn(v[c]) != 0) {
            pivot = c;
            break;
        }
    Rational inv = 1 / v[pivot];
    for (auto& x : v)
        if (sgn(x) != 0)
            x *= inv;
    // keep the stored rows fully reduced against the new pivot
    for (auto& row : rows_) {
        if (sgn(row[pivot]) == 0)
            continue;
        Rational factor = row[pivot];
        for (std::size_t c = 0; c < dim_; ++c)
            if (sgn(v[c]) != 0)
                row[c] -= factor * v[c];
    }
    pivot_row_[pivot] = static_cast<long>(rows_.size());
    pivots_.push_back(pivot);
    rows_.push_back(std::move(v));
    return true;
}
/*}}}*/

/*{{{ SparseMatrix */
SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows)
{
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i].emplace_back(i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const ExactMatrix& d)
{
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (sgn(d(r, c)) != 0)
                m.data_[r].emplace_back(c, d(r, c));
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (auto& r : data_)
        n += r.size();
    return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return 0;
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("sparse matrix index");
    if (sgn(value) == 0)
        return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (sgn(it->second) == 0)
            row.erase(it);
    } else {
        row.insert(it, Entry{c, value});
    }
}

Vector SparseMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("sparse matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r])
            if (sgn(v[c]) != 0)
                out[r] += x * v[c];
    return out;
}

namespace {

// Merges an accumulator indexed by column into a sorted sparse row.
void flush_row(std::vector<Rational>& acc, std::vector<std::size_t>& touched, std::vector<SparseMatrix::Entry>& out)
{
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
        if (sgn(acc[c]) != 0)
            out.emplace_back(c, acc[c]);
        acc[c] = 0;
    }
    touched.clear();
}

}  // namespace

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("sparse product shape mismatch");
    SparseMatrix p(rows_, other.cols_);
    std::vector<Rational> acc(other.cols_);
    std::vector<char> mark(other.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : other.data_[k]) {
                if (!mark[c]) {
                    mark[c] = 1;
                    touched.push_back(c);
                }
                acc[c] += a * b;
            }
        for (std::size_t c : touched)
            mark[c] = 0;
        flush_row(acc, touched, p.data_[r]);
    }
    return p;
}

void SparseMatrix::add_scaled(const SparseMatrix& other, const Rational& factor)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("sparse sum shape mismatch");
    if (sgn(factor) == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& b = other.data_[r];
        if (b.empty())
            continue;
        const auto& a = data_[r];
        std::vector<Entry> merged;
        merged.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                merged.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                merged.emplace_back(b[j].first, factor * b[j].second);
                ++j;
            } else {
                Rational s = a[i].second + factor * b[j].second;
                if (sgn(s) != 0)
                    merged.emplace_back(a[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        data_[r] = std::move(merged);
    }
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const
{
    SparseMatrix s = *this;
    s.add_scaled(other, 1);
    return s;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const
{
    SparseMatrix s = *this;
    s.add_scaled(other, -1);
    return s;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const
{
    if (sgn(factor) == 0)
        return SparseMatrix(rows_, cols_);
    SparseMatrix s = *this;
    for (auto& row : s.data_)
        for (auto& e : row)
            e.second *= factor;
    return s;
}

SparseMatrix SparseMatrix::commutator(const SparseMatrix& other) const
{
    return (*this) * other - other * (*this);
}

ExactMatrix SparseMatrix::to_dense() const
{
    ExactMatrix d(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r])
            d(r, c) = x;
    return d;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

bool SparseMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            if (e.first != r)
                return false;
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

SparseMatrix SparseMatrix::tensor_identity(std::size_t n) const
{
    SparseMatrix m(rows_ * n, cols_ * n);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            auto& row = m.data_[r * n + i];
            row.reserve(data_[r].size());
            for (const auto& [c, x] : data_[r])
                row.emplace_back(c * n + i, x);
        }
    return m;
}

SparseMatrix SparseMatrix::identity_tensor(std::size_t n) const
{
    SparseMatrix m(rows_ * n, cols_ * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < rows_; ++r) {
            auto& row = m.data_[i * rows_ + r];
            row.reserve(data_[r].size());
            for (const auto& [c, x] : data_[r])
                row.emplace_back(i * cols_ + c, x);
        }
    return m;
}
/*}}}*/

}  // namespace weylmod
