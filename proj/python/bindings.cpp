#include "weylmod/cli.hpp"
#include "weylmod/ideal_engine.hpp"
#include "weylmod/polyseries.hpp"
#include "weylmod/rootdata.hpp"
#include "weylmod/uea_sl2.hpp"
#include "weylmod/weyl_sl2.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace weylmod;

namespace {

py::object fraction(const Rational& x)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(x));
}

// Roots given as [(a, m), ...] with a an int, str or fractions.Fraction.
RootMultiset to_roots(const std::vector<std::pair<py::object, long>>& items)
{
    std::vector<RootPair> pairs;
    for (const auto& [a, m] : items) pairs.push_back({parse_rational(std::string(py::str(a))), m});
    return RootMultiset(std::move(pairs));
}

py::list from_roots(const RootMultiset& roots)
{
    py::list out;
    for (const auto& p : roots.pairs()) out.append(py::make_tuple(fraction(p.root), p.multiplicity));
    return out;
}

py::list report_list(const RelationReport& rep)
{
    py::list out;
    for (const auto& e : rep.entries) out.append(py::make_tuple(e.id, e.pass, e.detail));
    return out;
}

Kind to_kind(const std::string& name)
{
    if (name == "x+") return Kind::Raise;
    if (name == "h") return Kind::Cartan;
    if (name == "x-") return Kind::Lower;
    throw std::invalid_argument("kind must be 'x+', 'h' or 'x-'");
}

std::vector<Polynomial> to_polys(const std::vector<std::string>& texts)
{
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_weylmod, m)
{
    m.doc() = "Exact Weyl modules for the loop algebra of sl2";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<WeylModule>(m, "WeylModule")
        .def_property_readonly("dim", &WeylModule::dim)
        .def_property_readonly("roots", [](const WeylModule& w) { return from_roots(w.roots()); })
        .def_property_readonly("weights", &WeylModule::weights)
        .def_property_readonly("polynomial", [](const WeylModule& w) { return w.polynomial().to_string(); })
        .def("character", [](const WeylModule& w) { return character(w); })
        .def("is_irreducible", [](const WeylModule& w) { return is_irreducible(w); })
        .def("singular_dim", [](const WeylModule& w) { return singular_vectors(w).size(); })
        .def("quotient_dim", [](const WeylModule& w) { return irreducible_quotient(w).dim; })
        .def("quotient_character", [](const WeylModule& w) { return character(irreducible_quotient(w)); })
        .def("closure_dim",
             [](const WeylModule& w) { return is_cyclic(w, w.operators().hw_vector()).closure_dim; },
             "Dimension of the submodule generated by the highest-weight vector")
        .def(
            "mode",
            [](const WeylModule& w, const std::string& kind, long k) {
                SparseMatrix a = w.mode(to_kind(kind), k);
                const std::size_t n = w.dim();
                std::vector<Vector> columns;
                for (std::size_t j = 0; j < n; ++j) {
                    Vector ej(n, Rational(0));
                    ej[j] = 1;
                    columns.push_back(a.apply(ej));
                }
                py::list rows;
                for (std::size_t i = 0; i < n; ++i) {
                    py::list row;
                    for (std::size_t j = 0; j < n; ++j) row.append(fraction(columns[j][i]));
                    rows.append(row);
                }
                return rows;
            },
            py::arg("kind"), py::arg("k"), "Dense matrix of x+_k, h_k or x-_k as Fractions")
        .def("verify_relations", [](const WeylModule& w) { return report_list(verify_defining_relations(w)); })
        .def(
            "bracket_fidelity",
            [](const WeylModule& w, std::optional<long> lo, std::optional<long> hi) {
                long d = w.roots().degree();
                return report_list(bracket_fidelity(w, lo.value_or(-2), hi.value_or(2 * d)));
            },
            py::arg("lo") = py::none(), py::arg("hi") = py::none());

    m.def(
        "weyl_module", [](const std::vector<std::pair<py::object, long>>& roots) { return weyl_module(to_roots(roots)); },
        py::arg("roots"), "W(pi) for pi = prod (1 - a u)^m over [(a, m), ...]");
    m.def("tensor", &tensor, py::arg("left"), py::arg("right"), py::arg("allow_non_coprime") = false);
    m.def(
        "factor", [](const std::string& poly) { return from_roots(factor_unital(parse_polynomial(poly))); },
        py::arg("poly"));

    m.def(
        "graded_quotient",
        [](int mult) {
            const GradedQuotient& q = graded_quotient_cached(mult);
            py::dict out;
            std::vector<std::string> basis;
            for (const auto& mono : q.basis) basis.push_back(mono.to_string());
            out["m"] = q.m;
            out["by_degree"] = q.hilbert_by_degree;
            out["total"] = q.total;
            out["basis"] = basis;
            out["ok"] = q.ok();
            return out;
        },
        py::arg("m"));
    m.def(
        "chain_check", [](int mult) { return jmj_chain_check(mult).pass(); }, py::arg("m"));
    m.def(
        "binomial_matrix_det", [](int r, int k) { return fraction(binomial_matrix_det(r, k)); }, py::arg("r"),
        py::arg("k"));

    m.def(
        "garland_check",
        [](long r, long s, const std::string& variant) {
            if (variant != "i" && variant != "ii") throw std::invalid_argument("variant must be 'i' or 'ii'");
            GarlandResult g = garland_check(r, s, variant == "i" ? GarlandVariant::I : GarlandVariant::II);
            py::dict out;
            out["lhs"] = g.lhs.to_string();
            out["rhs"] = g.rhs.to_string();
            out["equal"] = g.equal;
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("variant") = "i");

    m.def("shipped_cartan_types", &shipped_cartan_types);
    m.def(
        "positive_roots",
        [](const std::string& type) {
            std::vector<std::vector<int>> out;
            for (const auto& b : positive_roots(cartan_type(type))) out.push_back(b.coords);
            return out;
        },
        py::arg("type"));
    m.def(
        "pi_beta",
        [](const std::string& type, const std::vector<std::string>& pis, const std::vector<int>& coords) {
            CartanData c = cartan_type(type);
            for (const auto& b : positive_roots(c))
                if (b.coords == coords) return pi_beta(to_polys(pis), b, c).to_string();
            throw std::invalid_argument("not a positive root of " + type);
        },
        py::arg("type"), py::arg("pis"), py::arg("root"));
    m.def(
        "divisibility_check",
        [](const std::string& type, const std::vector<std::string>& pis) {
            return pi_theta_divisibility_check(to_polys(pis), cartan_type(type));
        },
        py::arg("type"), py::arg("pis"));
    m.def(
        "irreducibility_predicate",
        [](const std::string& type, const std::vector<std::string>& pis) {
            return weyl_irreducibility_predicate(to_polys(pis), cartan_type(type));
        },
        py::arg("type"), py::arg("pis"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr)");
}
