#include "weylmod/ideal_engine.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weylmod {

/*{{{ monomials and polynomials */
ZMonomial ZMonomial::from_indices(int m, const std::vector<int>& indices)
{
    ZMonomial z = one(m);
    for (int i : indices) {
        if (i < 0 || i >= m)
            throw std::out_of_range("variable z" + std::to_string(i) + " not in R_" + std::to_string(m));
        ++z.exponents[i];
    }
    return z;
}

int ZMonomial::degree() const
{
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

int ZMonomial::weight() const
{
    int w = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        w += static_cast<int>(i) * exponents[i];
    return w;
}

std::vector<int> ZMonomial::indices() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        out.insert(out.end(), exponents[i], static_cast<int>(i));
    return out;
}

ZMonomial ZMonomial::operator*(const ZMonomial& other) const
{
    ZMonomial z = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        z.exponents[i] += other.exponents[i];
    return z;
}

std::string ZMonomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "z" + std::to_string(i);
        if (exponents[i] > 1)
            out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

void add_term(ZPolynomial& p, const ZMonomial& mono, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = p.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            p.erase(it);
    }
}

ZPolynomial multiply(const ZPolynomial& a, const ZPolynomial& b)
{
    ZPolynomial out;
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : b)
            add_term(out, x * y, c * e);
    return out;
}

std::string to_string(const ZPolynomial& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (const auto& [mono, c] : p) {
        Rational mag = abs(c);
        out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        bool unit = mono.degree() == 0;
        if (unit || mag != 1)
            out += weylmod::to_string(mag) + (unit ? "" : "*");
        if (!unit)
            out += mono.to_string();
    }
    return out;
}
/*}}}*/

/*{{{ series and generators */
namespace {

using ZSeries = std::vector<ZPolynomial>;  // index = power of u

ZSeries series_multiply(const ZSeries& a, const ZSeries& b)
{
    if (a.empty() || b.empty())
        return {};
    ZSeries out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].empty())
                for (const auto& [mono, c] : multiply(a[i], b[j]))
                    add_term(out[i + j], mono, c);
    }
    return out;
}

ZSeries series_power(const ZSeries& a, int r, int m)
{
    ZSeries out{ZPolynomial{{ZMonomial::one(m), Rational(1)}}};
    for (int i = 0; i < r; ++i)
        out = series_multiply(out, a);
    return out;
}

// Z_1(u) = Σ_{i>=1} z_i u^i
ZSeries z1_series(int m)
{
    ZSeries out(m);
    for (int i = 1; i < m; ++i)
        out[i][ZMonomial::from_indices(m, {i})] = 1;
    return out;
}

// Σ_{i=1}^{n} z_i u^i inside R_m: the image of Z_0 of R_n under z_i -> z_{i+1}
ZSeries shifted_z0_series(int m, int n)
{
    ZSeries out(n + 1);
    for (int i = 1; i <= n; ++i)
        out[i][ZMonomial::from_indices(m, {i})] = 1;
    return out;
}

}  // namespace

std::vector<ZPolynomial> z_series(int m, int j)
{
    if (!(0 <= j && j < m))
        throw std::invalid_argument("z_series requires 0 <= j < m");
    ZSeries out(m - j + 1);
    for (int i = j; i < m; ++i)
        out[i - j + 1][ZMonomial::from_indices(m, {i})] = 1;
    return out;
}

std::vector<Generator> jm_generators(int m, int r)
{
    if (r < 1 || m < 1)
        throw std::invalid_argument("jm_generators requires m >= 1 and r >= 1");
    ZSeries pw = series_power(z_series(m, 0), r, m);
    std::vector<Generator> out;
    for (int s = m + 1; s <= r * m && s < static_cast<int>(pw.size()); ++s)
        if (!pw[s].empty())
            out.push_back({s, pw[s]});
    return out;
}
/*}}}*/

/*{{{ bigraded pieces */
std::vector<ZMonomial> piece_monomials(int m, int r, int d)
{
    std::vector<ZMonomial> out;
    std::vector<int> idx;
    std::function<void(int, int, int)> rec = [&](int left, int weight_left, int lo) {
        if (left == 0) {
            if (weight_left == 0)
                out.push_back(ZMonomial::from_indices(m, idx));
            return;
        }
        for (int i = lo; i < m && i * left <= weight_left; ++i) {
            if (weight_left - i > (m - 1) * (left - 1))
                continue;
            idx.push_back(i);
            rec(left - 1, weight_left - i, i);
            idx.pop_back();
        }
    };
    if (r >= 0 && d >= 0)
        rec(r, d, 0);
    return out;
}

std::vector<ZMonomial> bm_monomials(int m)
{
    std::vector<ZMonomial> out;
    for (int r = 0; r <= m; ++r) {
        std::vector<int> idx;
        std::function<void(int, int)> rec = [&](int left, int lo) {
            if (left == 0) {
                out.push_back(ZMonomial::from_indices(m, idx));
                return;
            }
            for (int i = lo; i <= m - r; ++i) {
                idx.push_back(i);
                rec(left - 1, i);
                idx.pop_back();
            }
        };
        rec(r, 0);
    }
    return out;
}

namespace {

bool in_bm(const ZMonomial& z, int m)
{
    int r = z.degree();
    if (r > m)
        return false;
    for (std::size_t i = 0; i < z.exponents.size(); ++i)
        if (z.exponents[i] > 0 && static_cast<int>(i) > m - r)
            return false;
    return true;
}

struct HomogeneousGenerator {
    int degree;
    int weight;
    ZPolynomial p;
    std::string label;
};

// Span of g·μ over generators g and monomials μ, restricted to piece (r, d)
// with the given column layout.
RowSpace ideal_span(int m, const std::vector<HomogeneousGenerator>& gens, int r, int d,
                    const std::map<ZMonomial, std::size_t>& column)
{
    RowSpace space(column.size());
    for (const auto& g : gens) {
        if (g.degree > r || g.weight > d)
            continue;
        for (const auto& mu : piece_monomials(m, r - g.degree, d - g.weight)) {
            Vector row(column.size());
            for (const auto& [mono, c] : g.p)
                row[column.at(mono * mu)] += c;
            space.insert(std::move(row));
            if (space.rank() == column.size())
                return space;
        }
    }
    return space;
}

std::vector<HomogeneousGenerator> homogeneous(const std::vector<Generator>& gens, int r, const std::string& tag)
{
    std::vector<HomogeneousGenerator> out;
    for (const auto& g : gens)
        out.push_back({r, g.s - r, g.p, tag + "(r=" + std::to_string(r) + ", s=" + std::to_string(g.s) + ")"});
    return out;
}

}  // namespace

long GradedQuotient::basis_index(const ZMonomial& mono) const
{
    auto it = index_.find(mono);
    return it == index_.end() ? -1 : it->second;
}

const QuotientPiece* GradedQuotient::piece(int r, int d) const
{
    auto it = piece_index_.find({r, d});
    return it == piece_index_.end() ? nullptr : &pieces[it->second];
}

GradedQuotient graded_quotient(int m)
{
    if (m < 1)
        throw std::invalid_argument("graded_quotient requires m >= 1");
    GradedQuotient q;
    q.m = m;
    q.basis = bm_monomials(m);
    for (std::size_t i = 0; i < q.basis.size(); ++i)
        q.index_[q.basis[i]] = static_cast<long>(i);
    q.hilbert_by_degree.assign(m + 1, 0);

    const int top = m <= 3 ? m + 2 : m + 1;
    std::vector<HomogeneousGenerator> gens;
    for (int r = 0; r <= top; ++r) {
        if (r >= 1) {
            auto more = homogeneous(jm_generators(m, r), r, "J");
            gens.insert(gens.end(), more.begin(), more.end());
        }
        for (int d = 0; d <= r * (m - 1); ++d) {
            QuotientPiece piece;
            piece.r = r;
            piece.d = d;
            std::vector<ZMonomial> basis_part;
            for (auto& z : piece_monomials(m, r, d))
                (in_bm(z, m) ? basis_part : piece.monomials).push_back(std::move(z));
            const std::size_t non_b = piece.monomials.size();
            piece.bm_count = basis_part.size();
            piece.monomials.insert(piece.monomials.end(), basis_part.begin(), basis_part.end());

            std::map<ZMonomial, std::size_t> column;
            for (std::size_t c = 0; c < piece.monomials.size(); ++c)
                column[piece.monomials[c]] = c;
            RowSpace span = ideal_span(m, gens, r, d, column);

            piece.ideal_rank = span.rank();
            piece.quotient_dim = piece.monomials.size() - span.rank();
            bool all_pivots = true;
            for (std::size_t c = 0; c < non_b; ++c)
                all_pivots = all_pivots && span.is_pivot(c);
            piece.bm_is_basis = all_pivots && span.rank() == non_b;

            std::string where = "piece (r=" + std::to_string(r) + ", d=" + std::to_string(d) + ")";
            if (piece.quotient_dim > piece.bm_count)
                q.failures.push_back(where + ": quotient dimension " + std::to_string(piece.quotient_dim) +
                                     " exceeds the B_m count " + std::to_string(piece.bm_count));
            else if (!piece.bm_is_basis)
                q.failures.push_back(where + ": B_m monomials are not a basis (quotient dimension " +
                                     std::to_string(piece.quotient_dim) + ", B_m count " +
                                     std::to_string(piece.bm_count) + ")");

            if (piece.bm_is_basis) {
                std::map<std::size_t, std::size_t> row_of;
                for (std::size_t i = 0; i < span.pivots().size(); ++i)
                    row_of[span.pivots()[i]] = i;
                for (std::size_t c = 0; c < piece.monomials.size(); ++c) {
                    Vector coords(piece.bm_count);
                    if (c >= non_b) {
                        coords[c - non_b] = 1;
                    } else {
                        const Vector& row = span.rows()[row_of.at(c)];
                        for (std::size_t b = 0; b < piece.bm_count; ++b)
                            coords[b] = -row[non_b + b];
                    }
                    piece.normal_forms.emplace(piece.monomials[c], std::move(coords));
                }
            }

            if (r <= m)
                q.hilbert_by_degree[r] += static_cast<long>(piece.quotient_dim);
            else if (piece.quotient_dim != 0)
                q.failures.push_back(where + ": degree " + std::to_string(r) + " layer does not vanish");
            q.piece_index_[{r, d}] = q.pieces.size();
            q.pieces.push_back(std::move(piece));
        }
    }
    q.total = std::accumulate(q.hilbert_by_degree.begin(), q.hilbert_by_degree.end(), 0L);
    if (q.total != (1L << m))
        q.failures.push_back("total quotient dimension " + std::to_string(q.total) + " != 2^" + std::to_string(m));
    return q;
}

const GradedQuotient& graded_quotient_cached(int m)
{
    static std::mutex lock;
    static std::map<int, std::unique_ptr<GradedQuotient>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[m];
    if (!slot)
        slot = std::make_unique<GradedQuotient>(graded_quotient(m));
    return *slot;
}

Vector normal_form(const GradedQuotient& q, const ZPolynomial& p)
{
    Vector out(q.basis.size());
    for (const auto& [mono, c] : p) {
        if (static_cast<int>(mono.exponents.size()) != q.m)
            throw std::invalid_argument("monomial " + mono.to_string() + " is not in R_" + std::to_string(q.m));
        int r = mono.degree();
        if (r > q.m)
            continue;
        const QuotientPiece* piece = q.piece(r, mono.weight());
        if (piece == nullptr || !piece->bm_is_basis)
            throw std::logic_error("no B_m normal form for " + mono.to_string());
        const Vector& coords = piece->normal_forms.at(mono);
        const std::size_t non_b = piece->monomials.size() - piece->bm_count;
        for (std::size_t b = 0; b < coords.size(); ++b)
            if (sgn(coords[b]) != 0)
                out[q.basis_index(piece->monomials[non_b + b])] += c * coords[b];
    }
    return out;
}
/*}}}*/

/*{{{ chain and determinant */
ChainReport jmj_chain_check(int m)
{
    if (m < 1)
        throw std::invalid_argument("jmj_chain_check requires m >= 1");
    ChainReport report;
    report.m = m;

    std::vector<HomogeneousGenerator> base;
    for (int r = 1; r <= m; ++r) {
        auto g = homogeneous(jm_generators(m, r), r, "J_m");
        base.insert(base.end(), g.begin(), g.end());
    }
    const ZSeries z1 = z1_series(m);

    for (int j = 1; j < m; ++j) {
        auto gens = base;
        for (int s = m - j + 1; s <= m - 1; ++s)
            for (int r = 1; r <= m - s; ++r) {
                ZSeries pw = series_power(z1, r, m);
                if (s < static_cast<int>(pw.size()) && !pw[s].empty())
                    gens.push_back({r, s, pw[s], "Z1(r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")"});
            }

        const int n = m - j;
        const ZSeries shifted = shifted_z0_series(m, n);
        for (int r = 1; r <= m; ++r) {
            ZSeries pw = series_power(shifted, r, m);
            for (int s = n + 1; s <= r * n && s < static_cast<int>(pw.size()); ++s) {
                if (pw[s].empty())
                    continue;
                const int d = s;  // weight of the shifted coefficient
                std::map<ZMonomial, std::size_t> column;
                for (const auto& z : piece_monomials(m, r, d))
                    column.emplace(z, column.size());
                RowSpace span = ideal_span(m, gens, r, d, column);
                Vector v(column.size());
                for (const auto& [mono, c] : pw[s])
                    v[column.at(mono)] += c;
                ++report.checked;
                if (!span.contains(std::move(v)))
                    report.failures.push_back("j=" + std::to_string(j) + ", shifted (Z0^" + std::to_string(r) + ")_" +
                                              std::to_string(s) + " = " + to_string(pw[s]));
            }
        }
    }
    return report;
}

Rational binomial_matrix_det(int r, int k)
{
    if (!(r >= k && k >= 0))
        throw std::invalid_argument("binomial_matrix_det requires r >= k >= 0");
    const std::size_t n = static_cast<std::size_t>(r - k + 1);
    ExactMatrix a(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            a(i - 1, j - 1) = binomial(k + static_cast<long>(i), static_cast<long>(j));
    return determinant(a);
}
/*}}}*/

}  // namespace weylmod
