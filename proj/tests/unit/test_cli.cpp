#include <doctest.h>

#include "weylmod/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = weylmod::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool check_passed(const json& doc, const std::string& id)
{
    for (const auto& c : doc["checks"])
        if (c["id"] == id) return c["pass"].get<bool>();
    FAIL("missing check " << id);
    return false;
}

}  // namespace

TEST_CASE("weyl construct on a double root")
{
    auto r = run({"weyl", "construct", "--roots", R"([["1",2]])"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["command"] == "weyl construct");
    CHECK(doc["results"]["dim"] == 4);
    CHECK(doc["results"]["irreducible"] == false);
    CHECK(doc["results"]["quotient_dim"] == 3);
    CHECK(doc["results"]["character"] == json{{"2", 1}, {"0", 2}, {"-2", 1}});
    CHECK(check_passed(doc, "thm-dimw"));
    CHECK(check_passed(doc, "thm-irred"));
}

TEST_CASE("weyl construct from a polynomial")
{
    auto r = run({"weyl", "construct", "--poly", "1 - 3u + 2u^2"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["results"]["roots"] == json::array({json::array({"1", 1}), json::array({"2", 1})}));
    CHECK(doc["results"]["irreducible"] == true);
    CHECK(doc["results"]["quotient_dim"] == 4);
}

TEST_CASE("rationals are serialized as strings")
{
    auto r = run({"weyl", "construct", "--roots", R"([["1/2",1],[3,1]])"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["results"]["roots"] == json::array({json::array({"1/2", 1}), json::array({"3", 1})}));
}

TEST_CASE("ideal hilbert m = 1")
{
    auto r = run({"ideal", "hilbert", "--m", "1"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["results"]["by_degree"] == json{1, 1});
    CHECK(doc["results"]["total"] == 2);
    CHECK(check_passed(doc, "prop-basis"));
}

TEST_CASE("ideal hilbert m = 3 and chain m = 3")
{
    auto h = run({"ideal", "hilbert", "--m", "3"});
    REQUIRE(h.code == 0);
    CHECK(h.doc()["results"]["by_degree"] == json{1, 3, 3, 1});
    auto c = run({"ideal", "chain", "--m", "3"});
    REQUIRE(c.code == 0);
    CHECK(check_passed(c.doc(), "lem-6.5"));
}

TEST_CASE("uea garland r = s = 1")
{
    auto r = run({"uea", "garland", "--r", "1", "--s", "1", "--variant", "i"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["results"]["equal"] == true);
    auto r2 = run({"uea", "garland", "--r", "1", "--s", "2", "--variant", "ii"});
    REQUIRE(r2.code == 0);
    CHECK(r2.doc()["results"]["equal"] == true);
}

TEST_CASE("weyl tensor: coprime and equal roots")
{
    auto ok = run({"weyl", "tensor", "--left", R"([["1",1]])", "--right", R"([["2",1]])"});
    REQUIRE(ok.code == 0);
    CHECK(ok.doc()["results"]["cyclic"] == true);
    CHECK(ok.doc()["results"]["closure_dim"] == 4);

    auto refused = run({"weyl", "tensor", "--left", R"([["1",1]])", "--right", R"([["1",1]])"});
    CHECK(refused.code == 1);

    auto forced = run({"weyl", "tensor", "--left", R"([["1",1]])", "--right", R"([["1",1]])", "--allow-non-coprime"});
    REQUIRE(forced.code == 0);
    CHECK(forced.doc()["results"]["cyclic"] == false);
    CHECK(forced.doc()["results"]["closure_dim"] == 3);
}

TEST_CASE("weyl verify reports relation and bracket checks")
{
    auto r = run({"weyl", "verify", "--roots", R"([["1",2],["-1",1]])"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    bool saw_relation = false, saw_bracket = false;
    for (const auto& c : doc["checks"]) {
        std::string id = c["id"];
        saw_relation |= id.rfind("prop-1.2:", 0) == 0;
        saw_bracket |= id.rfind("fidelity:", 0) == 0;
        CHECK(c["pass"] == true);
    }
    CHECK(saw_relation);
    CHECK(saw_bracket);
}

TEST_CASE("root pibeta and irred")
{
    auto p = run({"root", "pibeta", "--type", "B2", "--pi", "1 - u", "--pi", "1 - 2u"});
    REQUIRE(p.code == 0);
    CHECK(check_passed(p.doc(), "lem-pibeta1"));

    auto i = run({"root", "irred", "--type", "A2", "--pi", "1 - u", "--pi", "1 - u"});
    REQUIRE(i.code == 0);
    CHECK(i.doc()["results"]["irreducible"] == false);
    CHECK(i.doc()["results"]["pi_theta"] == "1 - 2u + u^2");

    auto a1 = run({"root", "irred", "--type", "A1", "--pi", "1 - 3u + 2u^2"});
    REQUIRE(a1.code == 0);
    CHECK(a1.doc()["results"]["constructed_irreducible"] == true);

    CHECK(run({"root", "irred", "--type", "B2", "--pi", "1 - u", "--pi", "1"}).code == 1);
    CHECK(run({"root", "pibeta", "--type", "A2", "--pi", "1 - u"}).code == 1);
}

TEST_CASE("validation errors exit 1 with a position")
{
    auto bad_poly = run({"weyl", "construct", "--poly", "1 - 3u +"});
    CHECK(bad_poly.code == 1);
    CHECK(bad_poly.err.find("position") != std::string::npos);

    auto bad_roots = run({"weyl", "construct", "--roots", R"([["1",2)"});
    CHECK(bad_roots.code == 1);
    CHECK(bad_roots.err.find("position") != std::string::npos);

    CHECK(run({"weyl", "construct", "--poly", "1 + u^2"}).code == 1);  // no rational roots
    CHECK(run({"weyl", "construct"}).code == 1);
    CHECK(run({"ideal", "hilbert", "--m", "0"}).code == 1);
    CHECK(run({"uea", "garland", "--r", "2", "--s", "1"}).code == 1);
    CHECK(run({"uea", "garland", "--r", "1", "--s", "1", "--variant", "iii"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"--format", "xml", "ideal", "hilbert", "--m", "1"}).code == 1);
}

TEST_CASE("help exits 0")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("weyl") != std::string::npos);
}

TEST_CASE("output is deterministic in both formats")
{
    std::vector<std::string> args{"weyl", "construct", "--roots", R"([["2",1],["1",2]])"};
    CHECK(run(args).out == run(args).out);
    auto csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    auto a = run(csv_args), b = run(csv_args);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("kind,id,value\n", 0) == 0);
    CHECK(a.out.find("check,thm-dimw,pass\n") != std::string::npos);
    CHECK(a.out.find("result,dim,8\n") != std::string::npos);
}

TEST_CASE("--out writes the report to a file")
{
    std::string path = "weylmod_cli_test_out.json";
    auto r = run({"ideal", "hilbert", "--m", "2", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(json::parse(text.str())["results"]["total"] == 4);
    std::remove(path.c_str());
}

TEST_CASE("suite quick passes; a corrupted structure constant exits 2")
{
    auto ok = run({"suite", "--level", "quick"});
    REQUIRE(ok.code == 0);
    CHECK(ok.doc()["checks"].size() == 9);

    auto bad = run({"suite", "--level", "quick", "--corrupt-structure-constant"});
    CHECK(bad.code == 2);
    json doc = bad.doc();
    CHECK(check_passed(doc, "lem-gar") == false);
    CHECK(check_passed(doc, "bracket-fidelity") == false);
    CHECK(check_passed(doc, "thm-dimw") == true);
}
