#pragma once

// Explicit matrix realizations of the loop-sl2 Weyl modules W(π).
//
// A single root a of multiplicity m acts through the truncated current algebra
// sl2 ⊗ C[ε]/ε^m, ε = t - a.  Its module is R_m/J_m with basis B_m, w = 1.
// General π is the tensor product of its single-root factors; the modes
// x±_k, h_k are then Σ over blocks of Σ_j C(k, j) a^{k-j} (local ε^j action).

#include "weylmod/exactnum.hpp"
#include "weylmod/polyseries.hpp"
#include "weylmod/uea_sl2.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace weylmod {

/// Taylor coefficients of t^k at t = a: c_j = C(k, j) a^{k-j}, j < m.
struct LocalModeImage {
    Rational root;
    int multiplicity = 0;
    long mode = 0;
    Vector coeffs;
};

LocalModeImage mode_image(const Rational& a, int m, long k);

/// A finite-dimensional module presented by the matrices of x+_k, h_k, x-_k for
/// k = 0..window-1, on a basis of h_0-weight vectors.
struct OperatorModule {
    std::size_t dim = 0;
    std::vector<int> weights;  // h_0 eigenvalue of each basis vector
    std::size_t hw_index = 0;
    std::vector<SparseMatrix> raise, cartan, lower;

    std::size_t window() const { return raise.size(); }
    int top_weight() const { return weights.at(hw_index); }
    Vector hw_vector() const;
};

class WeylModule {
public:
    struct Block {
        Rational root;
        int multiplicity;
    };

    const RootMultiset& roots() const { return roots_; }
    std::size_t dim() const { return dim_; }
    int highest_weight() const { return static_cast<int>(roots_.degree()); }
    std::size_t hw_index() const { return 0; }
    const std::vector<Block>& blocks() const { return blocks_; }
    /// B_m monomial of each tensor factor, per basis vector.
    const std::vector<std::vector<std::string>>& basis_labels() const { return labels_; }
    const std::vector<int>& weights() const { return weights_; }

    /// Local action of x ⊗ (t - a_b)^j on the whole module.
    const SparseMatrix& local(std::size_t block, Kind kind, int j) const;
    /// Matrix of x+_k, h_k or x-_k.
    SparseMatrix mode(Kind kind, long k) const;
    /// Generators x±_k, h_k for k = 0..deg π - 1; they span the action of the
    /// whole loop algebra because t^0..t^{deg-1} span C[t]/π(t).
    const OperatorModule& operators() const { return operators_; }

    /// Product polynomial Π (1 - a u)^m.
    Polynomial polynomial() const { return poly_from_roots(roots_); }

private:
    friend WeylModule single_root_module(const Rational& a, int m);
    friend WeylModule tensor(const WeylModule& left, const WeylModule& right, bool allow_non_coprime);
    friend WeylModule trivial_module();
    void finish();

    RootMultiset roots_;
    std::size_t dim_ = 1;
    std::vector<Block> blocks_;
    std::vector<std::array<std::vector<SparseMatrix>, 3>> locals_;  // [block][kind][j]
    std::vector<std::vector<std::string>> labels_;
    std::vector<int> weights_;
    OperatorModule operators_;
};

/// The 1-dimensional module W(1).
WeylModule trivial_module();

/// W((1 - a u)^m).  Throws std::invalid_argument for a = 0 or m < 1.
WeylModule single_root_module(const Rational& a, int m);

/// W1 ⊗ W2 with the coproduct action.  Throws std::invalid_argument if the root
/// sets overlap and allow_non_coprime is false.
WeylModule tensor(const WeylModule& left, const WeylModule& right, bool allow_non_coprime = false);

/// Iterated tensor product over the factors of the multiset.
WeylModule weyl_module(const RootMultiset& roots);

/// h_0 weight -> multiplicity.
std::map<int, long> character(const OperatorModule& mod);
inline std::map<int, long> character(const WeylModule& w) { return character(w.operators()); }

struct ClosureResult {
    bool cyclic = false;
    std::size_t closure_dim = 0;
};

/// Dimension of the submodule generated by v.
ClosureResult is_cyclic(const OperatorModule& mod, const Vector& v);
inline ClosureResult is_cyclic(const WeylModule& w, const Vector& v) { return is_cyclic(w.operators(), v); }

/// Basis of the joint kernel of the raising generators, weight by weight.
std::vector<Vector> singular_vectors(const OperatorModule& mod);
inline std::vector<Vector> singular_vectors(const WeylModule& w) { return singular_vectors(w.operators()); }

/// Singular vectors are exactly span{w} and w generates.
bool is_irreducible(const OperatorModule& mod);
inline bool is_irreducible(const WeylModule& w) { return is_irreducible(w.operators()); }

/// Quotient by the maximal proper submodule.
OperatorModule irreducible_quotient(const OperatorModule& mod);
inline OperatorModule irreducible_quotient(const WeylModule& w) { return irreducible_quotient(w.operators()); }

struct CheckEntry {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::vector<CheckEntry> entries;
    bool all_pass() const;
};

/// Evaluates the defining relations of W(π) on w and the truncation identity
/// (π(u) X~-(u))_s = 0 as an operator.  Indices are sampled over
/// [-2 deg π, 2 deg π]; divided-power families use r <= deg π + 1.
RelationReport verify_defining_relations(const WeylModule& w);

/// Loop-algebra commutators as matrix identities for modes in [lo, hi]
/// (default [-2, 2 deg π]).
RelationReport bracket_fidelity(const WeylModule& w, const StructureConstants& sc = {});
RelationReport bracket_fidelity(const WeylModule& w, long lo, long hi, const StructureConstants& sc = {});

}  // namespace weylmod
