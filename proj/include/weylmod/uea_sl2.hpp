#pragma once

// Universal enveloping algebra of the loop algebra sl2 ⊗ C[t, t^-1] on a
// bounded window of modes.  Elements are kept as linear combinations of
// PBW-ordered monomials: lowering factors first, then Cartan, then raising,
// modes weakly increasing inside each block.

#include "weylmod/polyseries.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylmod {

enum class Kind : int { Lower = 0, Cartan = 1, Raise = 2 };

const char* kind_name(Kind k);

/// x^-_k, h_k or x^+_k.
struct GeneratorMode {
    Kind kind;
    long mode;
    auto operator<=>(const GeneratorMode&) const = default;
    std::string to_string() const;
};

using PBWMonomial = std::vector<GeneratorMode>;

struct ModeWindow {
    long lo = -8;
    long hi = 8;
    bool contains(long k) const { return lo <= k && k <= hi; }
    ModeWindow widened() const;
};

/// Bracket coefficients of loop sl2:
///   [x+_r, x-_s] = raise_lower · h_{r+s}
///   [h_r, x+_s]  = cartan_raise · x+_{r+s}
///   [h_r, x-_s]  = cartan_lower · x-_{r+s}
/// Only the verification harness ever changes the defaults.
struct StructureConstants {
    Rational raise_lower = 1;
    Rational cartan_raise = 2;
    Rational cartan_lower = -2;
};

class ModeWindowOverflow : public std::runtime_error {
public:
    ModeWindowOverflow(long mode, ModeWindow window);
    long mode() const { return mode_; }

private:
    long mode_;
};

class UEAElement {
public:
    using Terms = std::map<PBWMonomial, Rational>;

    UEAElement() = default;
    explicit UEAElement(ModeWindow window) : window_(window) {}
    UEAElement(Terms terms, ModeWindow window);

    static UEAElement scalar(const Rational& c, ModeWindow window = {});
    static UEAElement generator(Kind kind, long mode, ModeWindow window = {});

    const Terms& terms() const { return terms_; }
    ModeWindow window() const { return window_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& m, const Rational& c);

    UEAElement operator+(const UEAElement& other) const;
    UEAElement operator-(const UEAElement& other) const;
    UEAElement scaled(const Rational& c) const;
    /// Concatenation of factor lists; the result is generally not in normal form.
    UEAElement concat(const UEAElement& other) const;

    /// Compares terms only (windows may differ).
    bool operator==(const UEAElement& other) const { return terms_ == other.terms_; }

    bool is_normal_ordered() const;
    std::string to_string() const;

private:
    Terms terms_;
    ModeWindow window_;
};

/// Rewrites every monomial into PBW normal form.  Throws ModeWindowOverflow if
/// a bracket produces a mode outside the element's window.
UEAElement straighten(const UEAElement& e, const StructureConstants& sc = {});

/// straighten(a · b)
UEAElement multiply(const UEAElement& a, const UEAElement& b, const StructureConstants& sc = {});

/// Bracket [a, b] of two generators as given by the structure constants.
UEAElement generator_bracket(GeneratorMode a, GeneratorMode b, ModeWindow window, const StructureConstants& sc = {});

/// Drops every monomial containing a raising factor (reduction modulo the left
/// ideal generated by positive raising elements).  Expects normal form.
UEAElement mod_positive(const UEAElement& e);

/// Λ_k as a polynomial in the Cartan modes: k >= 0 gives Λ^+_k in h_1..h_k,
/// k < 0 gives Λ^-_{|k|} in h_{-1}..h_{k}.  Λ_0 = 1.
UEAElement lambda_mode(long k, ModeWindow window = {});

enum class Series {
    XMinus,       // Σ_{m>=1} x-_m u^m
    XMinusZero,   // Σ_{m>=0} x-_m u^{m+1}
    XTildeMinus,  // Σ_{m∈Z} x-_m u^{m+1}, modes restricted to the window
    HTilde,       // Σ_{m∈Z} h_m u^{m+1},  modes restricted to the window
};

/// Coefficient of u^s in the r-th divided power series^r / r!.
UEAElement series_divided_power_coeff(Series series, long r, long s, ModeWindow window);

enum class GarlandVariant { I, II };

struct GarlandResult {
    UEAElement lhs;
    UEAElement rhs;
    bool equal = false;
    ModeWindow window;
};

/// Straightens both sides of the Garland normal-ordering identity
///   (x+_a)^(r) (x-_b)^(s) = (-1)^r (S(u)^(s-r) Λ^+(u))_s   mod U·U(>)_+
/// with (a, b, S) = (0, 1, X^-) for variant I and (1, 0, X^-_0) for variant II.
/// The window starts at [-(s+2), s(r+2)] and is widened at most twice on
/// overflow.
GarlandResult garland_check(long r, long s, GarlandVariant variant, const StructureConstants& sc = {});

/// The automorphism x±_m -> x±_{m±step}.  Cartan images are recomputed as
/// brackets of the images, [T x+_m, T x-_0].
UEAElement shift_automorphism(const UEAElement& e, long step, const StructureConstants& sc = {});

}  // namespace weylmod
