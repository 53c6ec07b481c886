#include "weylmod/suite.hpp"

#include "weylmod/ideal_engine.hpp"
#include "weylmod/rootdata.hpp"
#include "weylmod/weyl_sl2.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace weylmod {

namespace {

const std::vector<Rational>& sample_roots()
{
    static const std::vector<Rational> roots = {make_rational(-2), make_rational(-1), make_rational(1, 2),
                                                make_rational(1), make_rational(2), make_rational(3)};
    return roots;
}

RootMultiset single(long a_num, long a_den, long m) { return RootMultiset({{make_rational(a_num, a_den), m}}); }

RootMultiset pairs_of(std::initializer_list<std::tuple<long, long, long>> items)
{
    std::vector<RootPair> pairs;
    for (auto [num, den, m] : items) pairs.push_back({make_rational(num, den), m});
    return RootMultiset(std::move(pairs));
}

long pow2(long n) { return 1L << n; }

std::map<int, long> binomial_character(long m)
{
    std::map<int, long> out;
    for (long r = 0; r <= m; ++r) out[static_cast<int>(m - 2 * r)] = binomial(m, r).get_num().get_si();
    return out;
}

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects the first failure description; later ones are only counted.
struct Failures {
    long count = 0;
    std::string first;

    void add(const std::string& what)
    {
        if (count++ == 0) first = what;
    }
    std::string summary(const std::string& ok_text) const
    {
        if (count == 0) return ok_text;
        return std::to_string(count) + " failure(s); first: " + first;
    }
};

std::string describe(const RootMultiset& r) { return r.to_json(); }

std::vector<Polynomial> random_pis(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> degree(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Polynomial> pis;
    for (std::size_t i = 0; i < n; ++i) {
        Vector c{Rational(1)};
        int d = degree(rng);
        for (int k = 0; k < d; ++k) c.push_back(Rational(coeff(rng)));
        if (d > 0 && c.back() == 0) c.back() = 1;
        pis.emplace_back(std::move(c));
    }
    return pis;
}

}  // namespace

std::vector<RootMultiset> sample_root_multisets(long max_degree)
{
    const auto& roots = sample_roots();
    std::vector<RootMultiset> out;
    std::vector<long> mult(roots.size(), 0);
    // Odometer over multiplicity vectors with bounded sum.
    while (true) {
        long total = 0;
        for (long x : mult) total += x;
        if (total >= 1) {
            std::vector<RootPair> pairs;
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (mult[i] > 0) pairs.push_back({roots[i], mult[i]});
            out.emplace_back(std::move(pairs));
        }
        std::size_t pos = 0;
        while (pos < mult.size()) {
            ++mult[pos];
            long sum = 0;
            for (long x : mult) sum += x;
            if (sum <= max_degree) break;
            mult[pos] = 0;
            ++pos;
        }
        if (pos == mult.size()) break;
    }
    return out;
}

std::vector<std::pair<RootMultiset, RootMultiset>> coprime_tensor_pairs()
{
    return {
        {single(1, 1, 1), single(2, 1, 1)},
        {single(1, 1, 1), single(-1, 1, 1)},
        {single(1, 1, 2), single(2, 1, 1)},
        {single(1, 1, 1), single(1, 2, 2)},
        {pairs_of({{1, 1, 1}, {2, 1, 1}}), single(3, 1, 1)},
        {single(2, 1, 2), single(-1, 1, 2)},
        {single(1, 1, 3), single(3, 1, 1)},
        {single(1, 1, 2), single(-2, 1, 2)},
        {pairs_of({{1, 1, 1}, {-1, 1, 1}}), single(2, 1, 2)},
        {single(1, 1, 3), single(-1, 1, 2)},
        {pairs_of({{1, 2, 1}, {3, 1, 1}}), single(-2, 1, 3)},
        {pairs_of({{1, 1, 2}, {2, 1, 1}}), pairs_of({{-1, 1, 1}, {3, 1, 1}})},
    };
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& progress)
{
    const bool full = options.level == SuiteLevel::Full;
    const long max_degree = full ? 6 : 3;
    const long irred_degree = full ? 5 : 3;
    const int max_m = full ? 6 : 3;
    const int chain_m = full ? 4 : 3;
    const long garland_s = full ? 4 : 2;
    const long tensor_degree = full ? 5 : 3;
    const int quotient_m = full ? 4 : 3;

    const auto multisets = sample_root_multisets(max_degree);
    std::vector<std::pair<RootMultiset, RootMultiset>> pairs;
    for (const auto& p : coprime_tensor_pairs())
        if (p.first.degree() + p.second.degree() <= tensor_degree) pairs.push_back(p);

    std::vector<CriterionResult> results;
    auto record = [&](CriterionResult r) {
        results.push_back(r);
        if (progress) progress(results.back());
    };

    // 1. dim W(π) = 2^deg π.
    {
        Timer t;
        Failures f;
        for (const auto& roots : multisets) {
            WeylModule w = weyl_module(roots);
            if (static_cast<long>(w.dim()) != pow2(roots.degree()))
                f.add(describe(roots) + " dim " + std::to_string(w.dim()));
        }
        CriterionResult r{1, "thm-dimw", "dim W(pi) = 2^deg(pi)", f.count == 0, "", t.seconds()};
        r.detail = f.summary(std::to_string(multisets.size()) + " root multisets, deg <= " + std::to_string(max_degree));
        if (full && r.seconds >= 60) {
            r.pass = false;
            r.detail += "; over the 60 s budget";
        }
        record(r);
    }

    // 2. Character of W((1 - a u)^m) is binomial.
    {
        Timer t;
        Failures f;
        long checked = 0;
        for (const auto& roots : multisets) {
            if (roots.pairs().size() != 1) continue;
            ++checked;
            WeylModule w = weyl_module(roots);
            if (character(w) != binomial_character(roots.degree())) f.add(describe(roots));
        }
        CriterionResult r{2, "thm-rankw", "character of W((1-au)^m) is C(m, r) at weight m-2r", f.count == 0, "",
                          t.seconds()};
        r.detail = f.summary(std::to_string(checked) + " single-root modules, m <= " + std::to_string(max_degree));
        record(r);
    }

    // 3. Commutative model: R_m/J_m has basis B_m; J chain; binomial determinant.
    {
        Timer t;
        Failures f;
        for (int m = 1; m <= max_m; ++m) {
            const GradedQuotient& q = graded_quotient_cached(m);
            if (!q.ok()) f.add("m=" + std::to_string(m) + ": " + q.failures.front());
            if (q.total != pow2(m)) f.add("m=" + std::to_string(m) + " total " + std::to_string(q.total));
            for (const auto& piece : q.pieces)
                if (!piece.bm_is_basis)
                    f.add("m=" + std::to_string(m) + " piece (" + std::to_string(piece.r) + "," +
                          std::to_string(piece.d) + ")");
            for (int r = 0; r <= m; ++r)
                if (q.hilbert_by_degree.at(r) != binomial(m, r))
                    f.add("m=" + std::to_string(m) + " degree " + std::to_string(r));
        }
        for (int m = 2; m <= chain_m; ++m) {
            ChainReport c = jmj_chain_check(m);
            if (!c.pass()) f.add("chain m=" + std::to_string(m) + ": " + c.failures.front());
        }
        for (int r = 1; r <= 6; ++r)
            for (int k = 1; k <= r; ++k)
                if (binomial_matrix_det(r, k) != binomial(r + 1, k))
                    f.add("det r=" + std::to_string(r) + " k=" + std::to_string(k));
        CriterionResult r{3, "prop-basis", "R_m/J_m has basis B_m; J chain inclusions; binomial determinants",
                          f.count == 0, "", t.seconds()};
        r.detail = f.summary("m <= " + std::to_string(max_m) + ", chain m <= " + std::to_string(chain_m) +
                             ", determinants r <= 6");
        record(r);
    }

    // 4. Garland identities in U(Lsl2).
    {
        Timer t;
        Failures f;
        long checked = 0;
        for (long s = 1; s <= garland_s; ++s)
            for (long r = 1; r <= s; ++r)
                for (auto variant : {GarlandVariant::I, GarlandVariant::II}) {
                    ++checked;
                    GarlandResult g = garland_check(r, s, variant, options.constants);
                    if (!g.equal)
                        f.add(std::string(variant == GarlandVariant::I ? "(i)" : "(ii)") + " r=" + std::to_string(r) +
                              " s=" + std::to_string(s));
                }
        CriterionResult r{4, "lem-gar", "Garland identities (i) and (ii)", f.count == 0, "", t.seconds()};
        r.detail = f.summary(std::to_string(checked) + " identities, 1 <= r <= s <= " + std::to_string(garland_s));
        if (full && r.seconds >= 30) {
            r.pass = false;
            r.detail += "; over the 30 s budget";
        }
        record(r);
    }

    // 5. Tensor products of coprime Weyl modules are cyclic Weyl modules.
    {
        Timer t;
        Failures f;
        for (const auto& [left, right] : pairs) {
            WeylModule w = tensor(weyl_module(left), weyl_module(right));
            ClosureResult c = is_cyclic(w, w.operators().hw_vector());
            std::string tag = describe(left) + " x " + describe(right);
            if (!c.cyclic || c.closure_dim != w.dim()) f.add(tag + " closure " + std::to_string(c.closure_dim));
            if (static_cast<long>(w.dim()) != pow2(left.degree() + right.degree())) f.add(tag + " dim");
            if (!verify_defining_relations(w).all_pass()) f.add(tag + " relations");
        }
        WeylModule neg = tensor(single_root_module(1, 1), single_root_module(1, 1), true);
        ClosureResult nc = is_cyclic(neg, neg.operators().hw_vector());
        if (nc.cyclic || nc.closure_dim != 3) f.add("equal-root control closure " + std::to_string(nc.closure_dim));
        CriterionResult r{5, "thm-wtensor", "coprime tensor products are cyclic on w1 x w2", f.count == 0, "",
                          t.seconds()};
        r.detail = f.summary(std::to_string(pairs.size()) + " coprime pairs; equal-root control closure " +
                             std::to_string(nc.closure_dim) + " of 4");
        record(r);
    }

    // 6. Irreducibility iff squarefree; irreducible quotients.
    {
        Timer t;
        Failures f;
        long irreducible = 0, reducible = 0;
        const CartanData a1 = cartan_type("A1");
        for (const auto& roots : multisets) {
            if (roots.degree() > irred_degree) continue;
            WeylModule w = weyl_module(roots);
            Polynomial p = w.polynomial();
            bool actual = is_irreducible(w);
            bool squarefree = is_squarefree(p);
            bool predicate = weyl_irreducibility_predicate({p}, a1);
            if (actual != squarefree || predicate != squarefree) f.add(describe(roots));
            (actual ? irreducible : reducible)++;
        }
        if (irreducible == 0 || reducible == 0) f.add("only one direction exercised");
        for (const Rational& a : sample_roots())
            for (int m = 1; m <= quotient_m; ++m) {
                OperatorModule v = irreducible_quotient(single_root_module(a, m));
                if (v.dim != static_cast<std::size_t>(m + 1)) f.add("quotient dim a=" + to_string(a));
                std::map<int, long> expected;
                for (int k = 0; k <= m; ++k) expected[m - 2 * k] = 1;
                if (character(v) != expected) f.add("quotient character a=" + to_string(a) + " m=" + std::to_string(m));
            }
        CriterionResult r{6, "thm-irred", "W(pi) irreducible iff pi squarefree; quotients of (1-au)^m",
                          f.count == 0, "", t.seconds()};
        r.detail = f.summary(std::to_string(irreducible) + " irreducible, " + std::to_string(reducible) +
                             " reducible, deg <= " + std::to_string(irred_degree) + "; quotients m <= " +
                             std::to_string(quotient_m));
        record(r);
    }

    // 7. Defining relations and h_k eigenvalues on every module above.
    {
        Timer t;
        Failures f;
        long checked = 0;
        auto check = [&](const WeylModule& w) {
            ++checked;
            RelationReport rep = verify_defining_relations(w);
            for (const auto& e : rep.entries)
                if (!e.pass) f.add(describe(w.roots()) + " " + e.id + ": " + e.detail);
            Vector hw = w.operators().hw_vector();
            long d = w.roots().degree();
            for (long k = -d; k <= 2 * d; ++k) {
                Vector img = w.mode(Kind::Cartan, k).apply(hw);
                Rational p = power_sum(w.roots(), k);
                for (std::size_t i = 0; i < img.size(); ++i)
                    if (img[i] != (i == w.hw_index() ? p : Rational(0))) {
                        f.add(describe(w.roots()) + " h_" + std::to_string(k));
                        break;
                    }
            }
        };
        for (const auto& roots : multisets) check(weyl_module(roots));
        for (const auto& [left, right] : pairs) check(tensor(weyl_module(left), weyl_module(right)));
        CriterionResult r{7, "prop-1.2", "defining relations hold; h_k w = p_k w", f.count == 0, "", t.seconds()};
        r.detail = f.summary(std::to_string(checked) + " modules");
        record(r);
    }

    // 8. π_β divides π_θs; exponents are integers.
    {
        Timer t;
        Failures f;
        std::mt19937 rng(20240601u);
        long trials = 0;
        for (const char* tag : {"A1", "A2", "A3", "A4", "D4"}) {
            CartanData c = cartan_type(tag);
            for (int trial = 0; trial < (full ? 40 : 10); ++trial) {
                ++trials;
                auto pis = random_pis(rng, c.rank());
                if (!pi_theta_divisibility_check(pis, c)) f.add(std::string(tag) + " trial " + std::to_string(trial));
            }
        }
        for (const auto& tag : shipped_cartan_types()) {
            CartanData c = cartan_type(tag);
            auto pis = random_pis(rng, c.rank());
            try {
                for (const auto& beta : positive_roots(c)) pi_beta(pis, beta, c);
            } catch (const std::invalid_argument& e) {
                f.add(tag + ": " + e.what());
            }
        }
        CriterionResult r{8, "lem-pibeta1", "pi_beta divides pi_theta_s; integral exponents", f.count == 0, "",
                          t.seconds()};
        r.detail = f.summary(std::to_string(trials) + " random tuples over A1-A4, D4; " +
                             std::to_string(shipped_cartan_types().size()) + " types for integrality");
        record(r);
    }

    // 9. Matrices satisfy the loop-algebra brackets.
    {
        Timer t;
        Failures f;
        long checked = 0;
        auto check = [&](const WeylModule& w) {
            ++checked;
            RelationReport rep = bracket_fidelity(w, options.constants);
            for (const auto& e : rep.entries)
                if (!e.pass) f.add(describe(w.roots()) + " " + e.id + ": " + e.detail);
        };
        for (const auto& roots : multisets) check(weyl_module(roots));
        for (const auto& [left, right] : pairs) check(tensor(weyl_module(left), weyl_module(right)));
        CriterionResult r{9, "bracket-fidelity", "loop-algebra brackets hold as matrices, modes in [-2, 2 deg]",
                          f.count == 0, "", t.seconds()};
        r.detail = f.summary(std::to_string(checked) + " modules");
        record(r);
    }

    return results;
}

}  // namespace weylmod
