#include "weylmod/polyseries.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>

namespace weylmod {

/*{{{ Polynomial */
Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(Vector{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    Vector v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(long k) const
{
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    Vector v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(i) + other.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + other.scaled(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    if (is_zero() || other.is_zero())
        return {};
    Vector v(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    Vector v = coeffs_;
    for (auto& c : v)
        c *= factor;
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& u) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    Vector v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result{1};
    for (unsigned i = 0; i < exponent; ++i)
        result = result * *this;
    return result;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        bool show_coeff = k == 0 || mag != 1;
        if (show_coeff)
            out += weylmod::to_string(mag);
        if (k > 0) {
            if (show_coeff && mag.get_den() != 1)
                out += "*";
            out += "u";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    Vector rem = a.coeffs();
    long db = b.degree();
    long da = a.degree();
    if (da < db)
        return {Polynomial{}, a};
    Vector quot(da - db + 1);
    for (long k = da; k >= db; --k) {
        Rational c = rem[k] / b.leading();
        quot[k - db] = c;
        if (sgn(c) == 0)
            continue;
        for (long i = 0; i <= db; ++i)
            rem[k - db + i] -= c * b.coeffs()[i];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& divisor, const Polynomial& p)
{
    return divmod(p, divisor).remainder.is_zero();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero())
        return x;
    return x.scaled(1 / x.leading());
}

Polynomial pi_minus(const Polynomial& p)
{
    if (!p.is_unital())
        throw std::invalid_argument("pi_minus expects constant term 1, got " + p.to_string());
    Vector rev(p.coeffs().rbegin(), p.coeffs().rend());
    Polynomial r(std::move(rev));
    return r.scaled(1 / r.coeff(0));
}

bool is_squarefree(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("is_squarefree of the zero polynomial");
    return gcd(p, p.derivative()).degree() <= 0;
}
/*}}}*/

/*{{{ TruncatedSeries */
TruncatedSeries::TruncatedSeries(std::size_t cap) : coeffs_(cap + 1)
{
}

TruncatedSeries::TruncatedSeries(std::size_t cap, const Vector& coeffs) : coeffs_(cap + 1)
{
    for (std::size_t i = 0; i < coeffs.size() && i <= cap; ++i)
        coeffs_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t cap)
{
    return TruncatedSeries(cap, p.coeffs());
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const
{
    std::size_t c = std::min(cap(), other.cap());
    TruncatedSeries s(c);
    for (std::size_t i = 0; i <= c; ++i)
        s.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const
{
    std::size_t c = std::min(cap(), other.cap());
    TruncatedSeries s(c);
    for (std::size_t i = 0; i <= c; ++i)
        s.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    std::size_t c = std::min(cap(), other.cap());
    TruncatedSeries s(c);
    for (std::size_t i = 0; i <= c; ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= c; ++j)
            s.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return s;
}

// f = exp(g)  <=>  f' = g' f,  i.e.  n f_n = sum_{k=1}^n k g_k f_{n-k}
TruncatedSeries TruncatedSeries::exp() const
{
    if (sgn(coeffs_[0]) != 0)
        throw std::domain_error("exp of a series with nonzero constant term");
    TruncatedSeries f(cap());
    f.coeffs_[0] = 1;
    for (std::size_t n = 1; n <= cap(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (sgn(coeffs_[k]) != 0)
                acc += Rational(static_cast<long>(k)) * coeffs_[k] * f.coeffs_[n - k];
        f.coeffs_[n] = acc / Rational(static_cast<long>(n));
    }
    return f;
}

// g = log(f)  <=>  f g' = f',  i.e.  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
TruncatedSeries TruncatedSeries::log() const
{
    if (coeffs_[0] != 1)
        throw std::domain_error("log of a series with constant term != 1");
    TruncatedSeries g(cap());
    for (std::size_t n = 1; n <= cap(); ++n) {
        Rational acc = Rational(static_cast<long>(n)) * coeffs_[n];
        for (std::size_t k = 1; k < n; ++k)
            acc -= Rational(static_cast<long>(k)) * g.coeffs_[k] * coeffs_[n - k];
        g.coeffs_[n] = acc / Rational(static_cast<long>(n));
    }
    return g;
}

Polynomial TruncatedSeries::to_polynomial() const
{
    return Polynomial(coeffs_);
}
/*}}}*/

/*{{{ RootMultiset */
RootMultiset::RootMultiset(std::vector<RootPair> pairs) : pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end(), [](const RootPair& a, const RootPair& b) { return a.root < b.root; });
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (sgn(pairs_[i].root) == 0)
            throw std::invalid_argument("root multiset contains the root 0");
        if (pairs_[i].multiplicity <= 0)
            throw std::invalid_argument("root multiplicity must be positive");
        if (i > 0 && pairs_[i].root == pairs_[i - 1].root)
            throw std::invalid_argument("root " + weylmod::to_string(pairs_[i].root) + " listed twice");
    }
}

long RootMultiset::degree() const
{
    long d = 0;
    for (auto& p : pairs_)
        d += p.multiplicity;
    return d;
}

RootMultiset RootMultiset::merged(const RootMultiset& other) const
{
    std::vector<RootPair> out = pairs_;
    for (const auto& p : other.pairs_) {
        auto it = std::find_if(out.begin(), out.end(), [&](const RootPair& q) { return q.root == p.root; });
        if (it != out.end())
            it->multiplicity += p.multiplicity;
        else
            out.push_back(p);
    }
    return RootMultiset(std::move(out));
}

bool RootMultiset::shares_root_with(const RootMultiset& other) const
{
    for (const auto& p : pairs_)
        for (const auto& q : other.pairs_)
            if (p.root == q.root)
                return true;
    return false;
}

std::string RootMultiset::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : pairs_)
        j.push_back({weylmod::to_string(p.root), p.multiplicity});
    return j.dump();
}
/*}}}*/

/*{{{ parsing */
namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial result;
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            result = result + term().scaled(sign);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    Polynomial term()
    {
        Rational coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'u')
                    throw ParseError("expected 'u' after '*'", pos_);
            }
        }
        std::size_t degree = 0;
        if (!at_end() && peek() == 'u') {
            ++pos_;
            degree = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t start = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                if (start == pos_)
                    throw ParseError("expected exponent after '^'", pos_);
                degree = std::stoul(std::string(text_.substr(start, pos_ - start)));
            }
        } else if (!have_coeff) {
            throw ParseError(at_end() ? "unexpected end of input" : std::string("unexpected character '") + peek() + "'", pos_);
        }
        return Polynomial::monomial(coeff, degree);
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t den_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (den_start == pos_)
                throw ParseError("expected denominator after '/'", pos_);
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return PolyParser(text).parse();
}

RootMultiset parse_root_multiset(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed root multiset JSON", e.byte == 0 ? 0 : e.byte - 1);
    }
    if (!j.is_array())
        throw ParseError("root multiset must be a JSON array", 0);
    std::vector<RootPair> pairs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& item = j[i];
        if (!item.is_array() || item.size() != 2)
            throw ParseError("entry " + std::to_string(i) + " must be [root, multiplicity]", i);
        Rational root;
        try {
            if (item[0].is_string())
                root = parse_rational(item[0].get<std::string>());
            else if (item[0].is_number_integer())
                root = Rational(item[0].get<long>());
            else
                throw std::invalid_argument("root must be a string or integer");
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("entry ") + std::to_string(i) + ": " + e.what(), i);
        }
        if (!item[1].is_number_integer())
            throw ParseError("entry " + std::to_string(i) + ": multiplicity must be an integer", i);
        pairs.push_back({root, item[1].get<long>()});
    }
    try {
        return RootMultiset(std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}
/*}}}*/

Polynomial poly_from_roots(const RootMultiset& roots)
{
    Polynomial p{1};
    for (const auto& [a, m] : roots.pairs()) {
        if (sgn(a) == 0)
            throw std::invalid_argument("zero root");
        Polynomial factor(Vector{Rational(1), Rational(-a)});
        p = p * factor.pow(static_cast<unsigned>(m));
    }
    return p;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

}  // namespace

RootMultiset factor_unital(const Polynomial& p)
{
    if (!p.is_unital())
        throw std::invalid_argument("expected a polynomial with constant term 1, got " + p.to_string());

    // Zeros u0 of p correspond to roots a = 1/u0.  Scale to integer coefficients
    // and use the rational root theorem.
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
        lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
    mpz_class c0 = lcm_den;
    mpz_class lead = mpz_class(p.leading() * Rational(lcm_den));

    std::set<Rational> candidates;
    for (const auto& num : positive_divisors(c0))
        for (const auto& den : positive_divisors(lead)) {
            Rational q(num, den);
            q.canonicalize();
            candidates.insert(q);
            candidates.insert(-q);
        }

    std::vector<RootPair> pairs;
    Polynomial rest = p;
    for (const auto& u0 : candidates) {
        long mult = 0;
        Polynomial linear(Vector{Rational(1), Rational(-1 / u0)});
        while (rest.degree() > 0 && sgn(rest.evaluate(u0)) == 0) {
            rest = divmod(rest, linear).quotient;
            ++mult;
        }
        if (mult > 0)
            pairs.push_back({1 / u0, mult});
    }
    if (rest.degree() > 0)
        throw std::domain_error("polynomial " + p.to_string() + " has an irreducible factor of degree " +
                                std::to_string(rest.degree()) + " over Q: " + rest.to_string());
    return RootMultiset(std::move(pairs));
}

Rational power_sum(const RootMultiset& roots, long k)
{
    Rational s = 0;
    for (const auto& [a, m] : roots.pairs())
        s += Rational(m) * power(a, k);
    return s;
}

TruncatedSeries lambda_coeffs_from_roots(const RootMultiset& roots, Sign sign, std::size_t cap)
{
    TruncatedSeries g(cap);
    for (std::size_t k = 1; k <= cap; ++k) {
        long index = sign == Sign::Plus ? static_cast<long>(k) : -static_cast<long>(k);
        g[k] = -power_sum(roots, index) / Rational(static_cast<long>(k));
    }
    return g.exp();
}

}  // namespace weylmod
