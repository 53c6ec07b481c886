#include "weylmod/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylmod {

bool CartanData::simply_laced() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (i != j && matrix[i][j] < -1)
                return false;
    return true;
}

void validate(const CartanData& c)
{
    const std::size_t n = c.rank();
    if (n == 0 || c.symmetrizer.size() != n)
        throw std::invalid_argument(c.name + ": symmetrizer length does not match the rank");
    for (std::size_t i = 0; i < n; ++i) {
        if (c.matrix[i].size() != n)
            throw std::invalid_argument(c.name + ": Cartan matrix is not square");
        if (c.matrix[i][i] != 2)
            throw std::invalid_argument(c.name + ": diagonal entry != 2");
        if (c.symmetrizer[i] <= 0)
            throw std::invalid_argument(c.name + ": symmetrizer must be positive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && c.matrix[i][j] > 0)
                throw std::invalid_argument(c.name + ": positive off-diagonal entry");
            if (c.symmetrizer[i] * c.matrix[i][j] != c.symmetrizer[j] * c.matrix[j][i])
                throw std::invalid_argument(c.name + ": d_i a_ij != d_j a_ji");
        }
    }
}

namespace {

CartanData from_edges(std::string name, std::size_t n, const std::vector<std::pair<int, int>>& edges)
{
    CartanData c{std::move(name), std::vector<std::vector<int>>(n, std::vector<int>(n, 0)), std::vector<int>(n, 1)};
    for (std::size_t i = 0; i < n; ++i)
        c.matrix[i][i] = 2;
    for (auto [a, b] : edges) {
        c.matrix[a - 1][b - 1] = -1;
        c.matrix[b - 1][a - 1] = -1;
    }
    return c;
}

CartanData type_a(std::size_t n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < static_cast<int>(n); ++i)
        e.emplace_back(i, i + 1);
    return from_edges("A" + std::to_string(n), n, e);
}

CartanData type_d(std::size_t n)
{
    std::vector<std::pair<int, int>> e;
    int ni = static_cast<int>(n);
    for (int i = 1; i < ni - 1; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(ni - 2, ni);
    return from_edges("D" + std::to_string(n), n, e);
}

CartanData type_e(std::size_t n)
{
    std::vector<std::pair<int, int>> e{{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < static_cast<int>(n); ++i)
        e.emplace_back(i, i + 1);
    return from_edges("E" + std::to_string(n), n, e);
}

}  // namespace

CartanData cartan_type(std::string_view tag)
{
    if (tag.size() < 2)
        throw std::invalid_argument("unknown Cartan type '" + std::string(tag) + "'");
    char series = tag[0];
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoul(std::string(tag.substr(1)), &used);
        if (used != tag.size() - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown Cartan type '" + std::string(tag) + "'");
    }

    CartanData c;
    if (series == 'A' && n >= 1 && n <= 8)
        c = type_a(n);
    else if (series == 'D' && n >= 4 && n <= 8)
        c = type_d(n);
    else if (series == 'E' && n >= 6 && n <= 8)
        c = type_e(n);
    else if (tag == "B2")
        c = {"B2", {{2, -1}, {-2, 2}}, {2, 1}};
    else if (tag == "C3")
        c = {"C3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {1, 1, 2}};
    else if (tag == "G2")
        c = {"G2", {{2, -3}, {-1, 2}}, {1, 3}};
    else if (tag == "F4")
        c = {"F4", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}, {2, 2, 1, 1}};
    else
        throw std::invalid_argument("unknown Cartan type '" + std::string(tag) + "'");
    validate(c);
    return c;
}

std::vector<std::string> shipped_cartan_types()
{
    std::vector<std::string> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back("A" + std::to_string(n));
    for (int n = 4; n <= 8; ++n)
        out.push_back("D" + std::to_string(n));
    for (const char* t : {"E6", "E7", "E8", "B2", "C3", "G2", "F4"})
        out.emplace_back(t);
    return out;
}

int PositiveRoot::height() const
{
    return std::accumulate(coords.begin(), coords.end(), 0);
}

std::string PositiveRoot::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (coords[i] != 1)
            out += std::to_string(coords[i]);
        out += "a" + std::to_string(i + 1);
    }
    return out;
}

std::vector<PositiveRoot> positive_roots(const CartanData& c)
{
    validate(c);
    const std::size_t n = c.rank();
    constexpr std::size_t max_roots = 240;

    auto half_norm = [&](const std::vector<int>& r) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s += static_cast<long>(r[i]) * r[j] * c.symmetrizer[i] * c.matrix[i][j];
        return static_cast<int>(s / 2);
    };

    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        known.insert(e);
        layer.push_back(e);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& beta : layer)
            for (std::size_t i = 0; i < n; ++i) {
                // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = <β, α_i^∨>
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.contains(down))
                        break;
                    ++p;
                }
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j)
                    pairing += c.matrix[i][j] * beta[j];
                if (p - pairing > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) {
            known.insert(r);
            all.push_back(r);
        }
        if (all.size() > max_roots)
            throw std::domain_error(c.name + ": root closure exceeds " + std::to_string(max_roots) +
                                    " roots; not of finite type");
    }

    std::vector<PositiveRoot> roots;
    for (auto& r : all)
        roots.push_back({r, half_norm(r)});
    std::stable_sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.height() != b.height())
            return a.height() < b.height();
        return a.coords < b.coords;
    });
    return roots;
}

namespace {

bool dominates(const PositiveRoot& a, const PositiveRoot& b)
{
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] < b.coords[i])
            return false;
    return true;
}

PositiveRoot unique_maximum(const std::vector<PositiveRoot>& roots, const std::string& what)
{
    const PositiveRoot& top = roots.back();  // sorted by height
    for (const auto& r : roots)
        if (!dominates(top, r))
            throw std::logic_error(what + " is not unique");
    return top;
}

}  // namespace

PositiveRoot highest_root(const CartanData& c)
{
    return unique_maximum(positive_roots(c), c.name + " highest root");
}

PositiveRoot highest_short_root(const CartanData& c)
{
    auto roots = positive_roots(c);
    int shortest = roots.front().d;
    for (const auto& r : roots)
        shortest = std::min(shortest, r.d);
    std::vector<PositiveRoot> shorts;
    std::copy_if(roots.begin(), roots.end(), std::back_inserter(shorts), [&](const PositiveRoot& r) { return r.d == shortest; });
    return unique_maximum(shorts, c.name + " highest short root");
}

Polynomial pi_beta(const std::vector<Polynomial>& pis, const PositiveRoot& beta, const CartanData& c)
{
    if (pis.size() != c.rank() || beta.coords.size() != c.rank())
        throw std::invalid_argument("expected " + std::to_string(c.rank()) + " polynomials for type " + c.name);
    Polynomial result{1};
    for (std::size_t i = 0; i < c.rank(); ++i) {
        int num = beta.coords[i] * c.symmetrizer[i];
        if (num % beta.d != 0)
            throw std::invalid_argument("exponent r_i d_i / d_beta = " + std::to_string(num) + "/" +
                                        std::to_string(beta.d) + " is not an integer for root " + beta.to_string() +
                                        " of " + c.name);
        result = result * pis[i].pow(static_cast<unsigned>(num / beta.d));
    }
    return result;
}

bool pi_theta_divisibility_check(const std::vector<Polynomial>& pis, const CartanData& c)
{
    Polynomial top = pi_beta(pis, highest_short_root(c), c);
    for (const auto& beta : positive_roots(c))
        if (!divides(pi_beta(pis, beta, c), top))
            return false;
    return true;
}

bool weyl_irreducibility_predicate(const std::vector<Polynomial>& pis, const CartanData& c)
{
    if (!c.simply_laced())
        throw std::invalid_argument("irreducibility criterion requires a simply-laced type, got " + c.name);
    return is_squarefree(pi_beta(pis, highest_root(c), c));
}

bool fundamental_module_irreducible(const CartanData& c, std::size_t i)
{
    if (i >= c.rank())
        throw std::out_of_range("node index out of range for " + c.name);
    return highest_root(c).coords[i] == 1;
}

}  // namespace weylmod
