#include "weylmod/weyl_sl2.hpp"

#include "weylmod/ideal_engine.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace weylmod {

namespace {

constexpr std::size_t kind_slot(Kind k) { return static_cast<std::size_t>(k); }

/*{{{ single-root local action */
// h ⊗ ε^l on p·w: derivation z_i -> -2 z_{i+l} (zero once i+l >= m), plus m·p when l = 0.
ZPolynomial cartan_apply(int m, int l, const ZPolynomial& p)
{
    ZPolynomial out;
    if (l >= m)
        return out;
    for (const auto& [mono, c] : p) {
        for (int i = 0; i < m; ++i) {
            int e = mono.exponents[i];
            if (e == 0 || i + l >= m)
                continue;
            ZMonomial moved = mono;
            --moved.exponents[i];
            ++moved.exponents[i + l];
            add_term(out, moved, c * Rational(-2 * e));
        }
        if (l == 0)
            add_term(out, mono, c * Rational(m));
    }
    return out;
}

// x+ ⊗ ε^j on z_{i1}..z_{ir}·w = Σ_k z_{i1}..z_{i(k-1)} · (h ⊗ ε^{j+ik})(z_{i(k+1)}..z_{ir}·w)
ZPolynomial raise_apply(int m, int j, const ZMonomial& mono)
{
    ZPolynomial out;
    const auto idx = mono.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
        int l = j + idx[k];
        if (l >= m)
            continue;
        std::vector<int> prefix(idx.begin(), idx.begin() + k), suffix(idx.begin() + k + 1, idx.end());
        ZPolynomial tail{{ZMonomial::from_indices(m, suffix), Rational(1)}};
        ZPolynomial head{{ZMonomial::from_indices(m, prefix), Rational(1)}};
        for (const auto& [x, c] : multiply(head, cartan_apply(m, l, tail)))
            add_term(out, x, c);
    }
    return out;
}

using LocalSet = std::array<std::vector<SparseMatrix>, 3>;

LocalSet build_local_matrices(int m)
{
    const GradedQuotient& q = graded_quotient_cached(m);
    if (!q.ok())
        throw std::logic_error("R_" + std::to_string(m) + "/J_" + std::to_string(m) +
                               " has no B_m basis: " + q.failures.front());
    const std::size_t n = q.basis.size();
    LocalSet set;
    for (auto& v : set)
        v.assign(m, SparseMatrix(n, n));

    auto put_column = [&](SparseMatrix& target, std::size_t col, const ZPolynomial& image) {
        Vector coords = normal_form(q, image);
        for (std::size_t r = 0; r < n; ++r)
            if (sgn(coords[r]) != 0)
                target.add_to(r, col, coords[r]);
    };

    for (std::size_t col = 0; col < n; ++col) {
        const ZMonomial& mono = q.basis[col];
        ZPolynomial self{{mono, Rational(1)}};
        for (int j = 0; j < m; ++j) {
            put_column(set[kind_slot(Kind::Lower)][j], col, {{mono * ZMonomial::from_indices(m, {j}), Rational(1)}});
            put_column(set[kind_slot(Kind::Cartan)][j], col, cartan_apply(m, j, self));
            put_column(set[kind_slot(Kind::Raise)][j], col, raise_apply(m, j, mono));
        }
    }
    return set;
}

const LocalSet& local_matrices(int m)
{
    static std::mutex lock;
    static std::map<int, std::unique_ptr<LocalSet>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[m];
    if (!slot)
        slot = std::make_unique<LocalSet>(build_local_matrices(m));
    return *slot;
}
/*}}}*/

/*{{{ closure */
Vector restrict_to_weight(const OperatorModule& mod, const Vector& v, int weight)
{
    Vector out(mod.dim);
    for (std::size_t i = 0; i < mod.dim; ++i)
        if (mod.weights[i] == weight)
            out[i] = v[i];
    return out;
}

int weight_of(const OperatorModule& mod, const Vector& v)
{
    for (std::size_t i = 0; i < mod.dim; ++i)
        if (sgn(v[i]) != 0)
            return mod.weights[i];
    throw std::logic_error("weight of the zero vector");
}

// Submodule generated by `seeds`, kept as one row space per weight.
std::map<int, RowSpace> closure(const OperatorModule& mod, const std::vector<Vector>& seeds)
{
    std::map<int, RowSpace> spaces;
    std::deque<std::pair<int, Vector>> queue;
    auto offer = [&](int weight, Vector v) {
        if (is_zero(v))
            return;
        auto it = spaces.try_emplace(weight, mod.dim).first;
        if (it->second.insert(v))
            queue.emplace_back(weight, std::move(v));
    };
    for (const auto& seed : seeds) {
        std::vector<int> seen;
        for (std::size_t i = 0; i < mod.dim; ++i)
            if (sgn(seed[i]) != 0 && std::find(seen.begin(), seen.end(), mod.weights[i]) == seen.end()) {
                seen.push_back(mod.weights[i]);
                offer(mod.weights[i], restrict_to_weight(mod, seed, mod.weights[i]));
            }
    }
    while (!queue.empty()) {
        auto [weight, v] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < mod.window(); ++k) {
            offer(weight + 2, mod.raise[k].apply(v));
            offer(weight, mod.cartan[k].apply(v));
            offer(weight - 2, mod.lower[k].apply(v));
        }
    }
    return spaces;
}

std::size_t total_rank(const std::map<int, RowSpace>& spaces)
{
    std::size_t n = 0;
    for (const auto& [w, s] : spaces)
        n += s.rank();
    return n;
}

// Quotient of mod by a submodule given weight by weight.  The surviving basis
// vectors are the non-pivot coordinates.
OperatorModule quotient(const OperatorModule& mod, const std::map<int, RowSpace>& sub)
{
    std::vector<bool> pivot(mod.dim, false);
    for (const auto& [w, s] : sub)
        for (std::size_t p : s.pivots())
            pivot[p] = true;
    std::vector<long> new_index(mod.dim, -1);
    OperatorModule out;
    for (std::size_t i = 0; i < mod.dim; ++i)
        if (!pivot[i]) {
            new_index[i] = static_cast<long>(out.dim++);
            out.weights.push_back(mod.weights[i]);
        }
    if (new_index[mod.hw_index] < 0)
        throw std::logic_error("submodule contains the highest-weight vector");
    out.hw_index = static_cast<std::size_t>(new_index[mod.hw_index]);

    auto project = [&](const SparseMatrix& g) {
        SparseMatrix p(out.dim, out.dim);
        for (std::size_t c = 0; c < mod.dim; ++c) {
            if (pivot[c])
                continue;
            Vector e(mod.dim);
            e[c] = 1;
            Vector image = g.apply(e);
            if (is_zero(image))
                continue;
            if (auto it = sub.find(weight_of(mod, image)); it != sub.end())
                it->second.reduce(image);
            for (std::size_t r = 0; r < mod.dim; ++r)
                if (sgn(image[r]) != 0)
                    p.add_to(static_cast<std::size_t>(new_index[r]), static_cast<std::size_t>(new_index[c]), image[r]);
        }
        return p;
    };
    for (std::size_t k = 0; k < mod.window(); ++k) {
        out.raise.push_back(project(mod.raise[k]));
        out.cartan.push_back(project(mod.cartan[k]));
        out.lower.push_back(project(mod.lower[k]));
    }
    return out;
}
/*}}}*/

}  // namespace

Vector OperatorModule::hw_vector() const
{
    Vector v(dim);
    v[hw_index] = 1;
    return v;
}

/*{{{ construction */
LocalModeImage mode_image(const Rational& a, int m, long k)
{
    if (sgn(a) == 0)
        throw std::invalid_argument("mode_image requires a nonzero root");
    LocalModeImage img{a, m, k, Vector(m)};
    for (int j = 0; j < m; ++j)
        img.coeffs[j] = binomial(k, j) * power(a, k - j);
    return img;
}

const SparseMatrix& WeylModule::local(std::size_t block, Kind kind, int j) const
{
    return locals_.at(block)[kind_slot(kind)].at(static_cast<std::size_t>(j));
}

SparseMatrix WeylModule::mode(Kind kind, long k) const
{
    SparseMatrix out(dim_, dim_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto img = mode_image(blocks_[b].root, blocks_[b].multiplicity, k);
        for (int j = 0; j < blocks_[b].multiplicity; ++j)
            if (sgn(img.coeffs[j]) != 0)
                out.add_scaled(locals_[b][kind_slot(kind)][j], img.coeffs[j]);
    }
    return out;
}

void WeylModule::finish()
{
    operators_ = OperatorModule{};
    operators_.dim = dim_;
    operators_.weights = weights_;
    operators_.hw_index = hw_index();
    for (int k = 0; k < highest_weight(); ++k) {
        operators_.raise.push_back(mode(Kind::Raise, k));
        operators_.cartan.push_back(mode(Kind::Cartan, k));
        operators_.lower.push_back(mode(Kind::Lower, k));
    }
    SparseMatrix h0 = mode(Kind::Cartan, 0);
    if (!h0.is_diagonal())
        throw std::logic_error("h_0 is not diagonal on the constructed basis");
    for (std::size_t i = 0; i < dim_; ++i)
        if (h0.at(i, i) != weights_[i])
            throw std::logic_error("h_0 eigenvalue disagrees with the basis weight");
}

WeylModule trivial_module()
{
    WeylModule w;
    w.dim_ = 1;
    w.labels_ = {{}};
    w.weights_ = {0};
    w.finish();
    return w;
}

WeylModule single_root_module(const Rational& a, int m)
{
    if (sgn(a) == 0)
        throw std::invalid_argument("single_root_module requires a nonzero root");
    if (m < 1)
        throw std::invalid_argument("single_root_module requires multiplicity >= 1");
    const GradedQuotient& q = graded_quotient_cached(m);
    WeylModule w;
    w.roots_ = RootMultiset({{a, m}});
    w.dim_ = q.basis.size();
    w.blocks_ = {{a, m}};
    w.locals_ = {local_matrices(m)};
    for (const auto& mono : q.basis) {
        w.labels_.push_back({mono.to_string()});
        w.weights_.push_back(m - 2 * mono.degree());
    }
    w.finish();
    return w;
}

WeylModule tensor(const WeylModule& left, const WeylModule& right, bool allow_non_coprime)
{
    if (!allow_non_coprime && left.roots().shares_root_with(right.roots()))
        throw std::invalid_argument("tensor factors share a root; pass allow_non_coprime to build it anyway");
    const std::size_t n1 = left.dim(), n2 = right.dim();
    WeylModule w;
    w.roots_ = left.roots().merged(right.roots());
    w.dim_ = n1 * n2;
    w.blocks_ = left.blocks_;
    w.blocks_.insert(w.blocks_.end(), right.blocks_.begin(), right.blocks_.end());
    for (const auto& set : left.locals_) {
        auto& slot = w.locals_.emplace_back();
        for (std::size_t kind = 0; kind < 3; ++kind)
            for (const auto& mat : set[kind])
                slot[kind].push_back(mat.tensor_identity(n2));
    }
    for (const auto& set : right.locals_) {
        auto& slot = w.locals_.emplace_back();
        for (std::size_t kind = 0; kind < 3; ++kind)
            for (const auto& mat : set[kind])
                slot[kind].push_back(mat.identity_tensor(n1));
    }
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            auto label = left.labels_[i];
            label.insert(label.end(), right.labels_[j].begin(), right.labels_[j].end());
            w.labels_.push_back(std::move(label));
            w.weights_.push_back(left.weights_[i] + right.weights_[j]);
        }
    w.finish();
    return w;
}

WeylModule weyl_module(const RootMultiset& roots)
{
    WeylModule w = trivial_module();
    bool first = true;
    for (const auto& [a, m] : roots.pairs()) {
        WeylModule factor = single_root_module(a, static_cast<int>(m));
        w = first ? std::move(factor) : tensor(w, factor);
        first = false;
    }
    return w;
}
/*}}}*/

/*{{{ analysis */
std::map<int, long> character(const OperatorModule& mod)
{
    std::map<int, long> out;
    for (int w : mod.weights)
        ++out[w];
    return out;
}

ClosureResult is_cyclic(const OperatorModule& mod, const Vector& v)
{
    if (v.size() != mod.dim)
        throw std::invalid_argument("vector length does not match the module dimension");
    ClosureResult r;
    r.closure_dim = total_rank(closure(mod, {v}));
    r.cyclic = r.closure_dim == mod.dim;
    return r;
}

std::vector<Vector> singular_vectors(const OperatorModule& mod)
{
    std::map<int, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < mod.dim; ++i)
        by_weight[mod.weights[i]].push_back(i);

    std::vector<Vector> out;
    for (const auto& [weight, cols] : by_weight) {
        std::vector<std::size_t> rows;
        if (auto it = by_weight.find(weight + 2); it != by_weight.end())
            rows = it->second;
        ExactMatrix stacked(rows.size() * mod.window(), cols.size());
        for (std::size_t k = 0; k < mod.window(); ++k)
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    stacked(k * rows.size() + r, c) = mod.raise[k].at(rows[r], cols[c]);
        for (const auto& v : nullspace(stacked)) {
            Vector full(mod.dim);
            for (std::size_t c = 0; c < cols.size(); ++c)
                full[cols[c]] = v[c];
            out.push_back(std::move(full));
        }
    }
    return out;
}

bool is_irreducible(const OperatorModule& mod)
{
    auto sv = singular_vectors(mod);
    if (sv.size() != 1 || weight_of(mod, sv.front()) != mod.top_weight())
        return false;
    return is_cyclic(mod, mod.hw_vector()).cyclic;
}

OperatorModule irreducible_quotient(const OperatorModule& mod)
{
    OperatorModule current = mod;
    while (true) {
        std::vector<Vector> lower;
        for (auto& v : singular_vectors(current))
            if (weight_of(current, v) < current.top_weight())
                lower.push_back(std::move(v));
        if (lower.empty())
            return current;
        current = quotient(current, closure(current, lower));
    }
}
/*}}}*/

/*{{{ relation checks */
bool RelationReport::all_pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

namespace {

class ModeCache {
public:
    explicit ModeCache(const WeylModule& w) : w_(w) {}
    const SparseMatrix& get(Kind kind, long k)
    {
        auto key = std::make_pair(static_cast<int>(kind), k);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, w_.mode(kind, k)).first;
        return it->second;
    }

private:
    const WeylModule& w_;
    std::map<std::pair<int, long>, SparseMatrix> cache_;
};

Vector scaled(const Vector& v, const Rational& c)
{
    Vector out = v;
    for (auto& x : out)
        x *= c;
    return out;
}

void add_into(Vector& acc, const Vector& v)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] += v[i];
}

struct FamilyTally {
    FamilyTally(std::string id_, std::string scope_) : id(std::move(id_)), scope(std::move(scope_)) {}

    std::string id;
    std::string scope;
    std::size_t checked = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok && first_failure.empty())
            first_failure = what;
    }
    CheckEntry entry() const
    {
        CheckEntry e{id, first_failure.empty(), {}};
        e.detail = first_failure.empty() ? std::to_string(checked) + " instances, " + scope
                                         : "fails at " + first_failure;
        return e;
    }
};

}  // namespace

RelationReport verify_defining_relations(const WeylModule& w)
{
    const long d = w.highest_weight();
    const long L = 2 * d + 2;  // Λ-modes are evaluated up to here
    const Vector hw = w.operators().hw_vector();
    const Polynomial pi = w.polynomial();
    const Polynomial pim = pi_minus(pi);
    const ModeWindow window{-L, L};
    ModeCache modes(w);

    auto lambda_apply = [&](long k, const Vector& v) {
        Vector acc(w.dim());
        const UEAElement lam = lambda_mode(k, window);
        for (const auto& [mono, c] : lam.terms()) {
            Vector x = v;
            for (auto it = mono.rbegin(); it != mono.rend(); ++it)
                x = modes.get(Kind::Cartan, it->mode).apply(x);
            add_into(acc, scaled(x, c));
        }
        return acc;
    };
    std::map<long, Vector> lam_w;
    for (long k = -L; k <= L; ++k)
        lam_w[k] = lambda_apply(k, hw);

    RelationReport report;

    FamilyTally raise{"raise-kills-w", "k in [-2d, 2d]"};
    for (long k = -2 * d; k <= 2 * d; ++k)
        raise.record(is_zero(modes.get(Kind::Raise, k).apply(hw)), "x+_" + std::to_string(k));
    report.entries.push_back(raise.entry());

    FamilyTally weight{"h0-weight", "h_0 w = deg(pi) w"};
    weight.record(modes.get(Kind::Cartan, 0).apply(hw) == scaled(hw, d), "h_0");
    report.entries.push_back(weight.entry());

    FamilyTally heig{"h-eigenvalues", "h_k w = p_k w, k in [-d, 2d]"};
    for (long k = -d; k <= 2 * d; ++k)
        heig.record(modes.get(Kind::Cartan, k).apply(hw) == scaled(hw, power_sum(w.roots(), k)),
                    "h_" + std::to_string(k));
    report.entries.push_back(heig.entry());

    FamilyTally lplus{"lambda-plus", "Lambda_k w = pi_k w, k in [0, 2d+2]"};
    FamilyTally lminus{"lambda-minus", "Lambda_-k w = pi^-_k w, k in [0, 2d+2]"};
    for (long k = 0; k <= L; ++k) {
        lplus.record(lam_w[k] == scaled(hw, pi.coeff(k)), "Lambda_" + std::to_string(k));
        lminus.record(lam_w[-k] == scaled(hw, pim.coeff(k)), "Lambda_-" + std::to_string(k));
    }
    report.entries.push_back(lplus.entry());
    report.entries.push_back(lminus.entry());

    FamilyTally prod{"lambda-product", "Lambda_d Lambda_-k w = Lambda_(d-k) w, k in [0, d]"};
    for (long k = 0; k <= d; ++k)
        prod.record(lambda_apply(d, lam_w[-k]) == lam_w[d - k], "k=" + std::to_string(k));
    report.entries.push_back(prod.entry());

    FamilyTally xt{"xtilde-lambda", "(X~-(u) Lambda+(u))_s w = 0, s in [-2d, 2d], Lambda_i for i <= 2d+2"};
    FamilyTally ht{"htilde-lambda", "(H~(u) Lambda+(u))_s w = 0, s in [-2d, 2d], Lambda_i for i <= 2d+2"};
    for (long s = -2 * d; s <= 2 * d; ++s) {
        Vector ax(w.dim()), ah(w.dim());
        for (long i = 0; i <= L; ++i) {
            if (is_zero(lam_w[i]))
                continue;
            add_into(ax, modes.get(Kind::Lower, s - 1 - i).apply(lam_w[i]));
            add_into(ah, modes.get(Kind::Cartan, s - 1 - i).apply(lam_w[i]));
        }
        xt.record(is_zero(ax), "s=" + std::to_string(s));
        ht.record(is_zero(ah), "s=" + std::to_string(s));
    }
    report.entries.push_back(xt.entry());
    report.entries.push_back(ht.entry());

    // Series of vectors: coefficient n of S(u)^r Λ+(u) w.
    for (bool zero_series : {false, true}) {
        FamilyTally fam{zero_series ? "xminus0-power-lambda" : "xminus-power-lambda",
                        "r in [1, d+1], s in (d, 2d+2]"};
        std::vector<Vector> series;
        for (long n = 0; n <= L; ++n)
            series.push_back(lam_w[n]);
        for (long r = 1; r <= d + 1; ++r) {
            std::vector<Vector> next(L + 1, Vector(w.dim()));
            for (long n = 0; n <= L; ++n)
                for (long p = 1; p <= n; ++p) {
                    // X-: x-_p u^p;  X-_0: x-_(p-1) u^p
                    const Vector& prev = series[n - p];
                    if (!is_zero(prev))
                        add_into(next[n], modes.get(Kind::Lower, zero_series ? p - 1 : p).apply(prev));
                }
            series = std::move(next);
            for (long s = d + 1; s <= L; ++s)
                fam.record(is_zero(series[s]), "r=" + std::to_string(r) + ", s=" + std::to_string(s));
        }
        report.entries.push_back(fam.entry());
    }

    FamilyTally op{"pi-xtilde-operator", "(pi(u) X~-(u))_s = 0 as a matrix, s in [-2d, 2d]"};
    for (long s = -2 * d; s <= 2 * d; ++s) {
        SparseMatrix acc(w.dim(), w.dim());
        for (long j = 0; j <= d; ++j)
            if (sgn(pi.coeff(j)) != 0)
                acc.add_scaled(modes.get(Kind::Lower, s - 1 - j), pi.coeff(j));
        op.record(acc.is_zero(), "s=" + std::to_string(s));
    }
    report.entries.push_back(op.entry());

    FamilyTally nil{"xminus-nilpotent", "(x-_k)^(d+1) w = 0, k in [-2d, 2d]"};
    for (long k = -2 * d; k <= 2 * d; ++k) {
        Vector v = hw;
        for (long i = 0; i <= d; ++i)
            v = modes.get(Kind::Lower, k).apply(v);
        nil.record(is_zero(v), "k=" + std::to_string(k));
    }
    report.entries.push_back(nil.entry());

    FamilyTally span{"lowering-span", "x-_r products with 0 <= r < d span W"};
    {
        OperatorModule lowering_only = w.operators();
        for (auto& m : lowering_only.raise)
            m = SparseMatrix(w.dim(), w.dim());
        for (auto& m : lowering_only.cartan)
            m = SparseMatrix(w.dim(), w.dim());
        auto r = is_cyclic(lowering_only, hw);
        span.record(r.cyclic, "span dimension " + std::to_string(r.closure_dim));
    }
    report.entries.push_back(span.entry());

    return report;
}

RelationReport bracket_fidelity(const WeylModule& w, const StructureConstants& sc)
{
    return bracket_fidelity(w, -2, 2L * w.highest_weight(), sc);
}

namespace {

// [X_k, Y_l] for X_k = Σ_{b,i} c^b_i(k) X_{b,i}: the commutator is bilinear, so
// it is assembled exactly from the commutators of the local matrices.
class BracketExpansion {
public:
    BracketExpansion(const WeylModule& w, Kind left, Kind right) : w_(w)
    {
        const auto& blocks = w.blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t c = 0; c < blocks.size(); ++c)
                for (int i = 0; i < blocks[b].multiplicity; ++i)
                    for (int j = 0; j < blocks[c].multiplicity; ++j) {
                        SparseMatrix m = w.local(b, left, i).commutator(w.local(c, right, j));
                        if (!m.is_zero())
                            terms_.push_back({b, c, i, j, std::move(m)});
                    }
    }

    SparseMatrix at(long k, long l) const
    {
        SparseMatrix out(w_.dim(), w_.dim());
        const auto& blocks = w_.blocks();
        std::vector<Vector> ck, cl;
        for (const auto& blk : blocks) {
            ck.push_back(mode_image(blk.root, blk.multiplicity, k).coeffs);
            cl.push_back(mode_image(blk.root, blk.multiplicity, l).coeffs);
        }
        for (const auto& t : terms_) {
            Rational f = ck[t.b][t.i] * cl[t.c][t.j];
            if (sgn(f) != 0)
                out.add_scaled(t.m, f);
        }
        return out;
    }

private:
    struct Term {
        std::size_t b, c;
        int i, j;
        SparseMatrix m;
    };
    const WeylModule& w_;
    std::vector<Term> terms_;
};

}  // namespace

RelationReport bracket_fidelity(const WeylModule& w, long lo, long hi, const StructureConstants& sc)
{
    ModeCache modes(w);
    FamilyTally rl{"bracket-raise-lower", "[x+_k, x-_l] = h_(k+l)"};
    FamilyTally hr{"bracket-cartan-raise", "[h_k, x+_l] = 2 x+_(k+l)"};
    FamilyTally hl{"bracket-cartan-lower", "[h_k, x-_l] = -2 x-_(k+l)"};
    FamilyTally hh{"bracket-cartan-cartan", "[h_k, h_l] = 0"};
    FamilyTally rr{"bracket-raise-raise", "[x+_k, x+_l] = 0"};
    FamilyTally ll{"bracket-lower-lower", "[x-_k, x-_l] = 0"};
    const std::string range = "k, l in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    for (auto* t : {&rl, &hr, &hl, &hh, &rr, &ll})
        t->scope += ", " + range;

    const BracketExpansion e_rl(w, Kind::Raise, Kind::Lower), e_hr(w, Kind::Cartan, Kind::Raise),
        e_hl(w, Kind::Cartan, Kind::Lower), e_hh(w, Kind::Cartan, Kind::Cartan), e_rr(w, Kind::Raise, Kind::Raise),
        e_ll(w, Kind::Lower, Kind::Lower);

    for (long k = lo; k <= hi; ++k)
        for (long l = lo; l <= hi; ++l) {
            const std::string at = "k=" + std::to_string(k) + ", l=" + std::to_string(l);
            rl.record(e_rl.at(k, l) == modes.get(Kind::Cartan, k + l).scaled(sc.raise_lower), at);
            hr.record(e_hr.at(k, l) == modes.get(Kind::Raise, k + l).scaled(sc.cartan_raise), at);
            hl.record(e_hl.at(k, l) == modes.get(Kind::Lower, k + l).scaled(sc.cartan_lower), at);
            if (l > k) {
                hh.record(e_hh.at(k, l).is_zero(), at);
                rr.record(e_rr.at(k, l).is_zero(), at);
                ll.record(e_ll.at(k, l).is_zero(), at);
            }
        }
    RelationReport report;
    for (auto* t : {&rl, &hr, &hl, &hh, &rr, &ll})
        report.entries.push_back(t->entry());
    return report;
}
/*}}}*/

}  // namespace weylmod
