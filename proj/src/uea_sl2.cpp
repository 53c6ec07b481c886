#include "weylmod/uea_sl2.hpp"

#include <algorithm>
#include <functional>

namespace weylmod {

const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::Lower: return "x-";
    case Kind::Cartan: return "h";
    case Kind::Raise: return "x+";
    }
    return "?";
}

std::string GeneratorMode::to_string() const
{
    return std::string(kind_name(kind)) + "_" + std::to_string(mode);
}

ModeWindow ModeWindow::widened() const
{
    long span = std::max<long>(hi - lo, 1);
    return {lo - span, hi + span};
}

ModeWindowOverflow::ModeWindowOverflow(long mode, ModeWindow window)
    : std::runtime_error("mode " + std::to_string(mode) + " outside window [" + std::to_string(window.lo) + ", " +
                         std::to_string(window.hi) + "]"),
      mode_(mode)
{
}

/*{{{ UEAElement */
UEAElement::UEAElement(Terms terms, ModeWindow window) : window_(window)
{
    for (auto& [m, c] : terms)
        add_term(m, c);
}

UEAElement UEAElement::scalar(const Rational& c, ModeWindow window)
{
    UEAElement e(window);
    e.add_term({}, c);
    return e;
}

UEAElement UEAElement::generator(Kind kind, long mode, ModeWindow window)
{
    if (!window.contains(mode))
        throw ModeWindowOverflow(mode, window);
    UEAElement e(window);
    e.add_term({GeneratorMode{kind, mode}}, 1);
    return e;
}

void UEAElement::add_term(const PBWMonomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    for (const auto& g : m)
        if (!window_.contains(g.mode))
            throw ModeWindowOverflow(g.mode, window_);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

UEAElement UEAElement::operator+(const UEAElement& other) const
{
    UEAElement s = *this;
    for (const auto& [m, c] : other.terms_)
        s.add_term(m, c);
    return s;
}

UEAElement UEAElement::operator-(const UEAElement& other) const
{
    return *this + other.scaled(-1);
}

UEAElement UEAElement::scaled(const Rational& c) const
{
    UEAElement s(window_);
    if (sgn(c) == 0)
        return s;
    for (const auto& [m, x] : terms_)
        s.terms_.emplace(m, x * c);
    return s;
}

UEAElement UEAElement::concat(const UEAElement& other) const
{
    UEAElement p(window_);
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : other.terms_) {
            PBWMonomial m = a;
            m.insert(m.end(), b.begin(), b.end());
            p.add_term(m, x * y);
        }
    return p;
}

bool UEAElement::is_normal_ordered() const
{
    for (const auto& [m, c] : terms_)
        if (!std::is_sorted(m.begin(), m.end()))
            return false;
    return true;
}

std::string UEAElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (m.empty() || mag != 1)
            out += weylmod::to_string(mag) + (m.empty() ? "" : "*");
        for (std::size_t i = 0; i < m.size(); ++i)
            out += (i ? "*" : "") + m[i].to_string();
    }
    return out;
}
/*}}}*/

/*{{{ straightening */
namespace {

class Straightener {
public:
    Straightener(ModeWindow window, const StructureConstants& sc) : window_(window), sc_(sc) {}

    using Terms = UEAElement::Terms;

    // g · M for a normal-ordered monomial M, in normal form.
    const Terms& left_mul(const GeneratorMode& g, const PBWMonomial& mono)
    {
        auto key = std::make_pair(g, mono);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        Terms result;
        if (mono.empty() || !(mono.front() < g)) {
            PBWMonomial m;
            m.reserve(mono.size() + 1);
            m.push_back(g);
            m.insert(m.end(), mono.begin(), mono.end());
            result.emplace(std::move(m), Rational(1));
        } else {
            // g M0 rest = M0 (g rest) + [g, M0] rest
            const GeneratorMode head = mono.front();
            PBWMonomial rest(mono.begin() + 1, mono.end());
            Terms moved = left_mul(g, rest);
            for (const auto& [m, c] : moved)
                for (const auto& [m2, c2] : left_mul(head, m))
                    accumulate(result, m2, c * c2);
            auto [coef, gen] = bracket(g, head);
            if (sgn(coef) != 0)
                for (const auto& [m, c] : left_mul(gen, rest))
                    accumulate(result, m, coef * c);
        }
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    // [a, b] for generators with b < a in PBW order.
    std::pair<Rational, GeneratorMode> bracket(const GeneratorMode& a, const GeneratorMode& b) const
    {
        long mode = a.mode + b.mode;
        Rational coef = 0;
        Kind kind = Kind::Cartan;
        if (a.kind == Kind::Raise && b.kind == Kind::Lower) {
            coef = sc_.raise_lower;
            kind = Kind::Cartan;
        } else if (a.kind == Kind::Raise && b.kind == Kind::Cartan) {
            coef = -sc_.cartan_raise;  // [x+_r, h_s] = -[h_s, x+_r]
            kind = Kind::Raise;
        } else if (a.kind == Kind::Cartan && b.kind == Kind::Lower) {
            coef = sc_.cartan_lower;
            kind = Kind::Lower;
        }
        if (sgn(coef) != 0 && !window_.contains(mode))
            throw ModeWindowOverflow(mode, window_);
        return {coef, GeneratorMode{kind, mode}};
    }

    Terms straighten_monomial(const PBWMonomial& mono)
    {
        Terms current{{PBWMonomial{}, Rational(1)}};
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
            Terms next;
            for (const auto& [m, c] : current)
                for (const auto& [m2, c2] : left_mul(*it, m))
                    accumulate(next, m2, c * c2);
            current = std::move(next);
        }
        return current;
    }

    static void accumulate(Terms& t, const PBWMonomial& m, const Rational& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = t.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                t.erase(it);
        }
    }

private:
    ModeWindow window_;
    const StructureConstants& sc_;
    std::map<std::pair<GeneratorMode, PBWMonomial>, Terms> memo_;
};

}  // namespace

UEAElement straighten(const UEAElement& e, const StructureConstants& sc)
{
    Straightener st(e.window(), sc);
    UEAElement out(e.window());
    for (const auto& [m, c] : e.terms())
        for (const auto& [m2, c2] : st.straighten_monomial(m))
            out.add_term(m2, c * c2);
    return out;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b, const StructureConstants& sc)
{
    return straighten(a.concat(b), sc);
}

UEAElement generator_bracket(GeneratorMode a, GeneratorMode b, ModeWindow window, const StructureConstants& sc)
{
    UEAElement out(window);
    if (a == b)
        return out;
    bool flipped = a < b;
    if (flipped)
        std::swap(a, b);
    Straightener st(window, sc);
    auto [coef, gen] = st.bracket(a, b);
    if (sgn(coef) != 0)
        out.add_term({gen}, flipped ? Rational(-coef) : coef);
    return out;
}

UEAElement mod_positive(const UEAElement& e)
{
    UEAElement out(e.window());
    for (const auto& [m, c] : e.terms()) {
        bool has_raise = std::any_of(m.begin(), m.end(), [](const GeneratorMode& g) { return g.kind == Kind::Raise; });
        if (!has_raise)
            out.add_term(m, c);
    }
    return out;
}
/*}}}*/

/*{{{ series */
UEAElement lambda_mode(long k, ModeWindow window)
{
    long n = k >= 0 ? k : -k;
    long sign = k >= 0 ? 1 : -1;
    // Newton form of Λ(u) = exp(-Σ h_{±i} u^i / i):  n Λ_n = -Σ_{i=1}^n h_{±i} Λ_{n-i}
    std::vector<UEAElement> lambdas{UEAElement::scalar(1, window)};
    for (long j = 1; j <= n; ++j) {
        UEAElement acc(window);
        for (long i = 1; i <= j; ++i)
            acc = acc + multiply(UEAElement::generator(Kind::Cartan, sign * i, window), lambdas[j - i]);
        lambdas.push_back(acc.scaled(Rational(-1) / Rational(j)));
    }
    return lambdas.back();
}

namespace {

struct SeriesTerm {
    long power;
    GeneratorMode gen;
};

std::vector<SeriesTerm> series_terms(Series series, long max_power, ModeWindow window)
{
    std::vector<SeriesTerm> out;
    switch (series) {
    case Series::XMinus:
        for (long m = 1; m <= max_power; ++m)
            out.push_back({m, {Kind::Lower, m}});
        break;
    case Series::XMinusZero:
        for (long m = 0; m + 1 <= max_power; ++m)
            out.push_back({m + 1, {Kind::Lower, m}});
        break;
    case Series::XTildeMinus:
        for (long m = window.lo; m <= window.hi; ++m)
            out.push_back({m + 1, {Kind::Lower, m}});
        break;
    case Series::HTilde:
        for (long m = window.lo; m <= window.hi; ++m)
            out.push_back({m + 1, {Kind::Cartan, m}});
        break;
    }
    return out;
}

}  // namespace

UEAElement series_divided_power_coeff(Series series, long r, long s, ModeWindow window)
{
    if (r < 0)
        throw std::invalid_argument("divided power index must be nonnegative");
    if (r == 0)
        return s == 0 ? UEAElement::scalar(1, window) : UEAElement(window);

    bool one_sided = series == Series::XMinus || series == Series::XMinusZero;
    if (one_sided && s < r)
        return UEAElement(window);
    auto terms = series_terms(series, s, window);
    if (terms.empty())
        return UEAElement(window);
    long min_power = terms.front().power, max_power = terms.back().power;

    // Ordered r-tuples of series terms with total power s.
    UEAElement acc(window);
    PBWMonomial factors;
    std::function<void(long, long)> rec = [&](long remaining, long power_left) {
        if (remaining == 0) {
            if (power_left == 0)
                acc.add_term(factors, 1);
            return;
        }
        for (const auto& t : terms) {
            long after = power_left - t.power;
            if (after < (remaining - 1) * min_power || after > (remaining - 1) * max_power)
                continue;
            factors.push_back(t.gen);
            rec(remaining - 1, after);
            factors.pop_back();
        }
    };
    rec(r, s);

    Rational factorial = 1;
    for (long i = 2; i <= r; ++i)
        factorial *= i;
    return straighten(acc).scaled(1 / factorial);
}

GarlandResult garland_check(long r, long s, GarlandVariant variant, const StructureConstants& sc)
{
    if (!(s >= r && r >= 1))
        throw std::invalid_argument("garland_check requires s >= r >= 1");

    ModeWindow window{-(s + 2), s * (r + 2)};
    for (int attempt = 0;; ++attempt) {
        try {
            const bool first = variant == GarlandVariant::I;
            const long raise_mode = first ? 0 : 1;
            const long lower_mode = first ? 1 : 0;
            const Series series = first ? Series::XMinus : Series::XMinusZero;

            UEAElement lhs_raw = UEAElement::scalar(1, window);
            for (long i = 0; i < r; ++i)
                lhs_raw = lhs_raw.concat(UEAElement::generator(Kind::Raise, raise_mode, window));
            for (long i = 0; i < s; ++i)
                lhs_raw = lhs_raw.concat(UEAElement::generator(Kind::Lower, lower_mode, window));
            Rational norm = 1;
            for (long i = 2; i <= r; ++i)
                norm *= i;
            for (long i = 2; i <= s; ++i)
                norm *= i;
            UEAElement lhs = mod_positive(straighten(lhs_raw, sc)).scaled(1 / norm);

            UEAElement rhs(window);
            for (long i = 0; i <= s; ++i) {
                UEAElement x = series_divided_power_coeff(series, s - r, s - i, window);
                if (x.is_zero())
                    continue;
                rhs = rhs + multiply(x, lambda_mode(i, window), sc);
            }
            rhs = mod_positive(rhs).scaled(r % 2 == 0 ? 1 : -1);

            GarlandResult out{lhs, rhs, lhs == rhs, window};
            return out;
        } catch (const ModeWindowOverflow&) {
            if (attempt >= 2)
                throw;
            window = window.widened();
        }
    }
}

UEAElement shift_automorphism(const UEAElement& e, long step, const StructureConstants& sc)
{
    ModeWindow w = e.window();
    ModeWindow shifted{w.lo - std::abs(step), w.hi + std::abs(step)};

    auto image = [&](const GeneratorMode& g) {
        switch (g.kind) {
        case Kind::Raise: return UEAElement::generator(Kind::Raise, g.mode + step, shifted);
        case Kind::Lower: return UEAElement::generator(Kind::Lower, g.mode - step, shifted);
        case Kind::Cartan: {
            // h_m = [x+_m, x-_0]
            GeneratorMode xp{Kind::Raise, g.mode + step}, xm{Kind::Lower, -step};
            return generator_bracket(xp, xm, shifted, sc).scaled(1 / sc.raise_lower);
        }
        }
        return UEAElement(shifted);
    };

    UEAElement out(shifted);
    for (const auto& [m, c] : e.terms()) {
        UEAElement prod = UEAElement::scalar(c, shifted);
        for (const auto& g : m)
            prod = prod.concat(image(g));
        out = out + prod;
    }
    return straighten(out, sc);
}
/*}}}*/

}  // namespace weylmod
