#pragma once

// Finite root systems by simple-root coordinates, and the polynomial attached
// to a positive root from an n-tuple of unital polynomials.

#include "weylmod/polyseries.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace weylmod {

/// Cartan matrix with a_ij = 2(α_i, α_j)/(α_i, α_i) and symmetrizers
/// d_i = (α_i, α_i)/2, normalized so that short simple roots have d_i = 1.
struct CartanData {
    std::string name;
    std::vector<std::vector<int>> matrix;
    std::vector<int> symmetrizer;

    std::size_t rank() const { return matrix.size(); }
    bool simply_laced() const;
};

/// Validates a_ii = 2, a_ij <= 0, d_i a_ij = d_j a_ji.  Throws std::invalid_argument.
void validate(const CartanData& c);

/// "A1".."A8", "D4".."D8", "E6", "E7", "E8", "B2", "C3", "G2", "F4" (Bourbaki labelling).
CartanData cartan_type(std::string_view tag);
std::vector<std::string> shipped_cartan_types();

struct PositiveRoot {
    std::vector<int> coords;  // β = Σ r_i α_i
    int d = 1;                // (β, β)/2

    int height() const;
    bool operator==(const PositiveRoot&) const = default;
    std::string to_string() const;
};

/// Root-string closure from the simple roots, ordered by height then
/// lexicographically.  Throws std::domain_error if the closure exceeds 240
/// roots (not of finite type).
std::vector<PositiveRoot> positive_roots(const CartanData& c);
PositiveRoot highest_root(const CartanData& c);
PositiveRoot highest_short_root(const CartanData& c);

/// prod_i pis[i]^{r_i d_i / d_β}.  Throws std::invalid_argument if an exponent
/// is not an integer or pis has the wrong length.
Polynomial pi_beta(const std::vector<Polynomial>& pis, const PositiveRoot& beta, const CartanData& c);

/// Every π_β divides π_{θ_s}.
bool pi_theta_divisibility_check(const std::vector<Polynomial>& pis, const CartanData& c);

/// W(π) irreducible iff π_θ is squarefree.  Simply-laced types only; throws
/// std::invalid_argument otherwise.
bool weyl_irreducibility_predicate(const std::vector<Polynomial>& pis, const CartanData& c);

/// Coefficient of α_i in the highest root equals 1 (the criterion for the
/// fundamental Weyl module W(i, a) to be irreducible).
bool fundamental_module_irreducible(const CartanData& c, std::size_t i);

}  // namespace weylmod
