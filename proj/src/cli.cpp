#include "weylmod/cli.hpp"

#include "weylmod/ideal_engine.hpp"
#include "weylmod/polyseries.hpp"
#include "weylmod/rootdata.hpp"
#include "weylmod/suite.hpp"
#include "weylmod/uea_sl2.hpp"
#include "weylmod/weyl_sl2.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace weylmod::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kMaxModuleDegree = 8;
constexpr int kMaxIdealM = 7;
constexpr long kMaxGarlandIndex = 6;

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<CheckEntry> checks;

    void check(std::string id, bool pass, std::string detail)
    {
        checks.push_back({std::move(id), pass, std::move(detail)});
    }
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json roots_json(const RootMultiset& roots)
{
    Json out = Json::array();
    for (const auto& p : roots.pairs()) out.push_back(Json::array({to_string(p.root), p.multiplicity}));
    return out;
}

// Descending weights, string keys.
Json character_json(const std::map<int, long>& ch)
{
    Json out = Json::object();
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) out[std::to_string(it->first)] = it->second;
    return out;
}

std::map<int, long> binomial_character(long m)
{
    std::map<int, long> out;
    for (long r = 0; r <= m; ++r) out[static_cast<int>(m - 2 * r)] = binomial(m, r).get_num().get_si();
    return out;
}

RootMultiset checked_roots(const RootMultiset& roots)
{
    if (roots.degree() > kMaxModuleDegree)
        throw UsageError("deg pi = " + std::to_string(roots.degree()) + " exceeds the supported maximum " +
                         std::to_string(kMaxModuleDegree));
    return roots;
}

// --roots JSON or --poly text, exactly one.
RootMultiset module_roots(const std::string& roots_text, const std::string& poly_text, Report& report)
{
    if (roots_text.empty() == poly_text.empty()) throw UsageError("give exactly one of --roots or --poly");
    if (!roots_text.empty()) {
        RootMultiset roots = parse_root_multiset(roots_text);
        report.inputs["roots"] = roots_json(roots);
        return checked_roots(roots);
    }
    Polynomial p = parse_polynomial(poly_text);
    report.inputs["poly"] = p.to_string();
    if (!p.is_unital()) throw UsageError("polynomial must have constant term 1");
    return checked_roots(factor_unital(p));
}

std::vector<Polynomial> parse_pis(const std::vector<std::string>& texts, const CartanData& c)
{
    if (texts.size() != c.rank())
        throw UsageError("type " + c.name + " needs " + std::to_string(c.rank()) + " --pi values, got " +
                         std::to_string(texts.size()));
    std::vector<Polynomial> pis;
    for (const auto& t : texts) {
        Polynomial p = parse_polynomial(t);
        if (!p.is_unital()) throw UsageError("pi '" + t + "' must have constant term 1");
        pis.push_back(p);
    }
    return pis;
}

Json polys_json(const std::vector<Polynomial>& pis)
{
    Json out = Json::array();
    for (const auto& p : pis) out.push_back(p.to_string());
    return out;
}

void add_entries(Report& report, const std::string& prefix, const RelationReport& rep)
{
    for (const auto& e : rep.entries) report.check(prefix + e.id, e.pass, e.detail);
}

// ---- commands ----

void weyl_construct(Report& report, const std::string& roots_text, const std::string& poly_text)
{
    RootMultiset roots = module_roots(roots_text, poly_text, report);
    WeylModule w = weyl_module(roots);
    const long deg = roots.degree();
    auto ch = character(w);
    bool irreducible = is_irreducible(w);
    bool squarefree = is_squarefree(w.polynomial());
    OperatorModule quotient = irreducible_quotient(w);

    report.results["roots"] = roots_json(roots);
    report.results["polynomial"] = w.polynomial().to_string();
    report.results["dim"] = w.dim();
    report.results["character"] = character_json(ch);
    report.results["irreducible"] = irreducible;
    report.results["squarefree"] = squarefree;
    report.results["singular_dim"] = singular_vectors(w).size();
    report.results["quotient_dim"] = quotient.dim;
    report.results["quotient_character"] = character_json(character(quotient));

    report.check("thm-dimw", w.dim() == (std::size_t{1} << deg),
                 "dim " + std::to_string(w.dim()) + ", 2^" + std::to_string(deg));
    report.check("thm-rankw", ch == binomial_character(deg), "weight m-2r has multiplicity C(m, r)");
    report.check("thm-irred", irreducible == squarefree,
                 std::string("irreducible ") + (irreducible ? "true" : "false") + ", squarefree " +
                     (squarefree ? "true" : "false"));
}

void weyl_verify(Report& report, const std::string& roots_text, const std::string& poly_text,
                 std::optional<long> lo, std::optional<long> hi)
{
    RootMultiset roots = module_roots(roots_text, poly_text, report);
    WeylModule w = weyl_module(roots);
    const long deg = roots.degree();
    long mode_lo = lo.value_or(-2), mode_hi = hi.value_or(2 * deg);
    if (mode_lo > mode_hi) throw UsageError("--lo must not exceed --hi");
    report.inputs["lo"] = mode_lo;
    report.inputs["hi"] = mode_hi;
    report.results["roots"] = roots_json(roots);
    report.results["dim"] = w.dim();
    add_entries(report, "prop-1.2:", verify_defining_relations(w));
    add_entries(report, "fidelity:", bracket_fidelity(w, mode_lo, mode_hi));
}

void weyl_tensor(Report& report, const std::string& left_text, const std::string& right_text,
                 bool allow_non_coprime)
{
    RootMultiset left = parse_root_multiset(left_text);
    RootMultiset right = parse_root_multiset(right_text);
    report.inputs["left"] = roots_json(left);
    report.inputs["right"] = roots_json(right);
    report.inputs["allow_non_coprime"] = allow_non_coprime;
    checked_roots(left.merged(right));
    bool coprime = !left.shares_root_with(right);
    if (!coprime && !allow_non_coprime)
        throw UsageError("left and right share a root; pass --allow-non-coprime to build the product anyway");

    WeylModule w = tensor(weyl_module(left), weyl_module(right), allow_non_coprime);
    ClosureResult c = is_cyclic(w, w.operators().hw_vector());
    report.results["roots"] = roots_json(w.roots());
    report.results["coprime"] = coprime;
    report.results["dim"] = w.dim();
    report.results["cyclic"] = c.cyclic;
    report.results["closure_dim"] = c.closure_dim;
    if (coprime) {
        report.check("thm-wtensor", c.cyclic,
                     "closure of w1 x w2 has dim " + std::to_string(c.closure_dim) + " of " + std::to_string(w.dim()));
        RelationReport rel = verify_defining_relations(w);
        std::string first_failure;
        for (const auto& e : rel.entries)
            if (!e.pass && first_failure.empty()) first_failure = e.id + ": " + e.detail;
        report.check("prop-1.2", rel.all_pass(),
                     rel.all_pass() ? "relations of W(pi1 pi2) hold on w1 x w2" : first_failure);
    }
}

void ideal_hilbert(Report& report, int m)
{
    report.inputs["m"] = m;
    if (m < 1 || m > kMaxIdealM) throw UsageError("--m must lie in [1, " + std::to_string(kMaxIdealM) + "]");
    const GradedQuotient& q = graded_quotient_cached(m);
    Json basis = Json::array();
    for (const auto& mono : q.basis) basis.push_back(mono.to_string());
    report.results["m"] = m;
    report.results["by_degree"] = q.hilbert_by_degree;
    report.results["total"] = q.total;
    report.results["basis"] = basis;

    bool binomial_ok = true;
    for (int r = 0; r <= m; ++r) binomial_ok = binomial_ok && q.hilbert_by_degree.at(r) == binomial(m, r);
    report.check("prop-basis", q.ok(), q.ok() ? "B_m is a basis of every bigraded piece" : q.failures.front());
    report.check("lem-free", binomial_ok, "degree r has dimension C(m, r)");
    report.check("thm-dimw", q.total == (1L << m), "total " + std::to_string(q.total));
}

void ideal_chain(Report& report, int m)
{
    report.inputs["m"] = m;
    if (m < 2 || m > 6) throw UsageError("--m must lie in [2, 6]");
    ChainReport c = jmj_chain_check(m);
    report.results["m"] = m;
    report.results["checked"] = c.checked;
    report.results["failures"] = c.failures;
    report.check("lem-6.5", c.pass(),
                 c.pass() ? std::to_string(c.checked) + " shifted generators lie in J_{m,j-1}" : c.failures.front());
}

void uea_garland(Report& report, long r, long s, const std::string& variant_text, const StructureConstants& sc)
{
    report.inputs["r"] = r;
    report.inputs["s"] = s;
    report.inputs["variant"] = variant_text;
    if (r < 1 || s < r || s > kMaxGarlandIndex)
        throw UsageError("need 1 <= r <= s <= " + std::to_string(kMaxGarlandIndex));
    GarlandVariant variant = variant_text == "i" ? GarlandVariant::I : GarlandVariant::II;
    GarlandResult g = garland_check(r, s, variant, sc);
    report.results["lhs"] = g.lhs.to_string();
    report.results["rhs"] = g.rhs.to_string();
    report.results["equal"] = g.equal;
    report.check("lem-gar", g.equal, "both sides straightened in PBW order");
}

void root_pibeta(Report& report, const std::string& type, const std::vector<std::string>& pi_texts)
{
    report.inputs["type"] = type;
    CartanData c = cartan_type(type);
    auto pis = parse_pis(pi_texts, c);
    report.inputs["pi"] = polys_json(pis);
    PositiveRoot theta_s = highest_short_root(c);
    Polynomial target = pi_beta(pis, theta_s, c);

    Json roots = Json::array();
    bool all_divide = true;
    for (const auto& beta : positive_roots(c)) {
        Polynomial p = pi_beta(pis, beta, c);
        bool d = divides(p, target);
        all_divide = all_divide && d;
        roots.push_back(Json{{"root", beta.coords}, {"d", beta.d}, {"pi_beta", p.to_string()}, {"divides", d}});
    }
    report.results["highest_root"] = highest_root(c).coords;
    report.results["highest_short_root"] = theta_s.coords;
    report.results["pi_theta_s"] = target.to_string();
    report.results["roots"] = roots;
    bool check = pi_theta_divisibility_check(pis, c);
    report.check("lem-pibeta1", all_divide && check, "every pi_beta divides pi_theta_s");
}

void root_irred(Report& report, const std::string& type, const std::vector<std::string>& pi_texts)
{
    report.inputs["type"] = type;
    CartanData c = cartan_type(type);
    auto pis = parse_pis(pi_texts, c);
    report.inputs["pi"] = polys_json(pis);
    bool predicate = weyl_irreducibility_predicate(pis, c);
    Polynomial theta = pi_beta(pis, highest_root(c), c);
    report.results["pi_theta"] = theta.to_string();
    report.results["irreducible"] = predicate;

    // For sl2 the module itself can be built and tested directly.
    if (c.rank() == 1 && theta.degree() <= kMaxModuleDegree) {
        try {
            RootMultiset roots = factor_unital(theta);
            bool built = is_irreducible(weyl_module(roots));
            report.results["constructed_irreducible"] = built;
            report.check("thm-irred", built == predicate, "predicate matches the constructed module");
        } catch (const std::domain_error&) {
            report.results["constructed_irreducible"] = nullptr;
        }
    }
}

void suite(Report& report, const std::string& level_text, bool corrupt)
{
    report.inputs["level"] = level_text;
    SuiteOptions opts;
    opts.level = level_text == "full" ? SuiteLevel::Full : SuiteLevel::Quick;
    if (corrupt) {
        report.inputs["corrupt_structure_constant"] = true;
        opts.constants.raise_lower = 2;
    }
    Json criteria = Json::array();
    for (const auto& r : run_suite(opts)) {
        criteria.push_back(Json{{"criterion", r.number}, {"id", r.id}, {"title", r.title}, {"pass", r.pass}});
        report.check(r.id, r.pass, r.detail);
    }
    report.results["level"] = level_text;
    report.results["criteria"] = criteria;
}

// ---- output ----

std::string render_json(const Report& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(Json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    Json doc{{"command", report.command}, {"inputs", report.inputs}, {"results", report.results}, {"checks", checks}};
    return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_csv(const Report& report)
{
    std::ostringstream os;
    os << "kind,id,value\n";
    os << "command,command," << csv_field(report.command) << "\n";
    for (const auto& [k, v] : report.inputs.items()) os << "input," << csv_field(k) << "," << csv_field(csv_value(v)) << "\n";
    for (const auto& [k, v] : report.results.items())
        os << "result," << csv_field(k) << "," << csv_field(csv_value(v)) << "\n";
    for (const auto& c : report.checks) os << "check," << csv_field(c.id) << "," << (c.pass ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weyl modules for the loop algebra of sl2: construction and verification", "weylmod"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write the report to PATH instead of stdout");

    std::string roots_text, poly_text, left_text, right_text, variant = "i", type, level = "quick";
    std::vector<std::string> pis;
    std::optional<long> lo, hi;
    long r = 0, s = 0;
    int m = 0;
    bool allow_non_coprime = false, corrupt = false;

    auto* weyl = app.add_subcommand("weyl", "Weyl module construction and checks")->require_subcommand(1);
    auto* construct = weyl->add_subcommand("construct", "Build W(pi): dimension, character, irreducibility");
    auto* verify = weyl->add_subcommand("verify", "Defining relations and bracket fidelity on W(pi)");
    auto* tens = weyl->add_subcommand("tensor", "Tensor product of two Weyl modules and cyclicity of w1 x w2");
    for (auto* sub : {construct, verify}) {
        sub->add_option("--roots", roots_text, "Root multiset, e.g. [[\"1\",2],[\"1/2\",1]]");
        sub->add_option("--poly", poly_text, "Unital polynomial, e.g. \"1 - 3u + 2u^2\"");
    }
    verify->add_option("--lo", lo, "Lowest mode for bracket fidelity (default -2)");
    verify->add_option("--hi", hi, "Highest mode for bracket fidelity (default 2 deg pi)");
    tens->add_option("--left", left_text, "Root multiset of the left factor")->required();
    tens->add_option("--right", right_text, "Root multiset of the right factor")->required();
    tens->add_flag("--allow-non-coprime", allow_non_coprime, "Allow factors with a common root");

    auto* ideal = app.add_subcommand("ideal", "The commutative model R_m/J_m")->require_subcommand(1);
    auto* hilbert = ideal->add_subcommand("hilbert", "Graded dimensions and basis of R_m/J_m");
    auto* chain = ideal->add_subcommand("chain", "Inclusions of shifted J_{m-j} generators");
    for (auto* sub : {hilbert, chain}) sub->add_option("--m", m, "Multiplicity m")->required();

    auto* uea = app.add_subcommand("uea", "Identities in U(L sl2)")->require_subcommand(1);
    auto* garland = uea->add_subcommand("garland", "Check a Garland identity by straightening");
    garland->add_option("--r", r)->required();
    garland->add_option("--s", s)->required();
    garland->add_option("--variant", variant, "i or ii")->check(CLI::IsMember({"i", "ii"}));

    auto* root = app.add_subcommand("root", "Root-system polynomials pi_beta")->require_subcommand(1);
    auto* pibeta = root->add_subcommand("pibeta", "pi_beta for every positive root, divisibility into pi_theta_s");
    auto* irred = root->add_subcommand("irred", "Irreducibility predicate: pi_theta squarefree");
    for (auto* sub : {pibeta, irred}) {
        sub->add_option("--type", type, "Cartan type, e.g. A2, D4, G2")->required();
        sub->add_option("--pi", pis, "Polynomial pi_i, once per node in order")->required();
    }

    auto* suite_cmd = app.add_subcommand("suite", "Run the verification battery");
    suite_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    suite_cmd->add_flag("--corrupt-structure-constant", corrupt)->group("");

    for (auto* sub : {weyl, construct, verify, tens, ideal, hilbert, chain, uea, garland, root, pibeta, irred, suite_cmd})
        sub->fallthrough();

    std::vector<const char*> argv{"weylmod"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : InvalidInput;
    }

    Report report;
    try {
        if (construct->parsed()) {
            report.command = "weyl construct";
            weyl_construct(report, roots_text, poly_text);
        } else if (verify->parsed()) {
            report.command = "weyl verify";
            weyl_verify(report, roots_text, poly_text, lo, hi);
        } else if (tens->parsed()) {
            report.command = "weyl tensor";
            weyl_tensor(report, left_text, right_text, allow_non_coprime);
        } else if (hilbert->parsed()) {
            report.command = "ideal hilbert";
            ideal_hilbert(report, m);
        } else if (chain->parsed()) {
            report.command = "ideal chain";
            ideal_chain(report, m);
        } else if (garland->parsed()) {
            report.command = "uea garland";
            uea_garland(report, r, s, variant, {});
        } else if (pibeta->parsed()) {
            report.command = "root pibeta";
            root_pibeta(report, type, pis);
        } else if (irred->parsed()) {
            report.command = "root irred";
            root_irred(report, type, pis);
        } else {
            report.command = "suite";
            suite(report, level, corrupt);
        }
    } catch (const std::invalid_argument& e) {  // includes ParseError
        err << "error: " << e.what() << "\n";
        return InvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return InvalidInput;
    } catch (const std::exception& e) {
        err << "error: internal check failed: " << e.what() << "\n";
        return CheckFailed;
    }

    std::string text = format == "csv" ? render_csv(report) : render_json(report);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return InvalidInput;
        }
        file << text;
    }
    if (!report.all_pass()) {
        for (const auto& c : report.checks)
            if (!c.pass) err << "check failed: " << c.id << ": " << c.detail << "\n";
        return CheckFailed;
    }
    return Ok;
}

}  // namespace weylmod::cli
