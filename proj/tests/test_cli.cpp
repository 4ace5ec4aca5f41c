#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gdlab/cli.hpp"
#include "gdlab/io.hpp"
#include "support.hpp"

using namespace gdlab;

namespace {

const std::string kData = GDLAB_DATA_DIR;

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

}  // namespace

TEST_CASE("structure files round-trip through parse and serialize") {
    const StructureFile f = load_structure_file(kData + "/gd_novikov_type.json");
    CHECK(f.dim == 2);
    CHECK(f.has_circ);
    CHECK(f.has_delta0);
    CHECK(f.alg.circ(0, 1, 1) == 1);
    CHECK(f.co.delta0(1, 0, 1) == 1);

    nlohmann::json j = algebra_to_json(f.alg);
    merge_coalgebra_json(j, f.co);
    const StructureFile g = parse_structure_file(dump_json(j));
    CHECK(g.alg == f.alg);
    CHECK(g.co == f.co);

    // serialization is canonical: dumping twice gives identical bytes
    nlohmann::json j2 = algebra_to_json(g.alg);
    merge_coalgebra_json(j2, g.co);
    CHECK(dump_json(j) == dump_json(j2));
}

TEST_CASE("malformed structure files are rejected") {
    CHECK_THROWS_AS(parse_structure_file("{"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 2, "bogus": []})"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 0})"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 2, "circ": [[1,2,3,1,1]]})"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 2, "circ": [[1,2,2,1,0]]})"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 2, "circ": [[1,2,2,0.5,1]]})"), input_error);
    CHECK_THROWS_AS(parse_structure_file(R"({"dim": 2, "r": [[1,2,1]]})"), input_error);
}

TEST_CASE("check command exit codes") {
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "gd-bialg"}) == 0);
    CHECK(cli({"check", kData + "/gd_lie_type.json", "--kind", "gd-bialg"}) == 0);
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "lie"}) == 0);
    CHECK(cli({"check", kData + "/zinbiel3.json", "--kind", "zinbiel"}) == 0);
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "matched-pair"}) == 0);
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "conformal-bialg"}) == 0);
    // the triple-product representation file carries rep and T tables
    CHECK(cli({"check", kData + "/pregd_rep3.json", "--kind", "rep"}) == 0);
    CHECK(cli({"check", kData + "/pregd_rep3.json", "--kind", "o-operator"}) == 0);
    CHECK(cli({"check", kData + "/pregd_rep3.json", "--kind", "conformal-o-operator"}) == 0);
    // a mutated entry flips the verdict to 1 and prints a witness
    std::string text;
    CHECK(cli({"check", kData + "/mutant_novikov_type.json", "--kind", "gd-bialg"}, &text) == 1);
    CHECK(text.find("violated") != std::string::npos);
    // parse failures exit 2
    CHECK(cli({"check", kData + "/does_not_exist.json", "--kind", "gd"}) == 2);
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "nonsense"}) == 2);
}

TEST_CASE("json reports are machine readable") {
    std::string text;
    CHECK(cli({"check", kData + "/gd_novikov_type.json", "--kind", "gd-bialg", "--json"},
              &text) == 0);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["passed"] == true);
    CHECK(j["violations"].is_array());
}

TEST_CASE("construct commands") {
    std::string text;
    CHECK(cli({"construct", "affinize", kData + "/gd_novikov_type.json", "--print"}, &text) == 0);
    CHECK(text.find("[e1 _λ e2] = λ e2") != std::string::npos);

    CHECK(cli({"construct", "cobracket", kData + "/gd_lie_type.json", "--print"}, &text) == 0);
    CHECK(text.find("δ(e2) = ∂e1⊗e2 − e2⊗∂e1") !=
          std::string::npos);

    CHECK(cli({"construct", "pipeline-zinbiel", kData + "/zinbiel3.json", "--xi", "0", "--k",
               "1", "--print"},
              &text) == 0);
    CHECK(text.find("[e1 _λ e1] = 2(∂+2λ) e2") != std::string::npos);
    CHECK(text.find("gd-bialgebra check: pass") != std::string::npos);

    // a failing bialgebra goes to exit 1 through the double construction
    CHECK(cli({"construct", "double", kData + "/mutant_novikov_type.json"}, &text) == 1);
    CHECK(cli({"construct", "double", kData + "/gd_novikov_type.json"}, &text) == 0);

    // dualize emits the dual bialgebra, which is again checkable
    const std::string dual_path = "/tmp/gdlab_dual_test.json";
    CHECK(cli({"construct", "dualize", kData + "/gd_novikov_type.json", "-o", dual_path}) == 0);
    CHECK(cli({"check", dual_path, "--kind", "gd-bialg"}) == 0);

    // semidirect product of the triple-product file's algebra and rep
    CHECK(cli({"construct", "semidirect", kData + "/pregd_rep3.json", "--print"}, &text) == 0);
    CHECK(text.find("e1∘e1 = 2 e2") != std::string::npos);

    // coboundary maps from a stored r, both finite and conformal renderings
    const std::string withr_path = "/tmp/gdlab_withr_test.json";
    {
        std::ofstream f(withr_path);
        f << R"({"dim": 2, "bracket": [[1, 2, 2, 1, 1], [2, 1, 2, -1, 1]],)"
          << R"( "r": [[1, 2, 1, 1], [2, 1, -1, 1]]})";
    }
    CHECK(cli({"construct", "coboundary", withr_path, "--print"}, &text) == 0);
    CHECK(text.find("δ0(") != std::string::npos);
    CHECK(cli({"construct", "coboundary-conformal", withr_path, "--print"}, &text) == 0);
    CHECK(text.find("δ(") != std::string::npos);
}

TEST_CASE("search enumerates the skew grid deterministically") {
    std::string text;
    CHECK(cli({"search", kData + "/gd_novikov_type.json", "--coeffs", "-1,0,1", "--skew"},
              &text) == 0);
    // the only solution on this algebra is r = 0
    CHECK(text.find("skew candidates: 3, solutions: 1") != std::string::npos);

    // results are closed under negation of r
    CHECK(cli({"search", kData + "/gd_lie_type.json", "--coeffs", "-1,0,1", "--json"}, &text) ==
          0);
    const auto j = nlohmann::json::parse(text);
    std::vector<std::string> seen;
    for (const auto& sol : j["solutions"]) {
        nlohmann::json neg = nlohmann::json::array();
        for (const auto& row : sol)
            neg.push_back({row[0], row[1], -row[2].get<long long>(), row[3]});
        seen.push_back(neg.dump());
    }
    for (const auto& sol : j["solutions"]) {
        bool found = false;
        for (const auto& s : seen)
            if (s == sol.dump()) found = true;
        CHECK(found);
    }

    // the dimension guard rejects large inputs
    const std::string big = R"({"dim": 5})";
    const std::string path = "/tmp/gdlab_dim5.json";
    {
        std::ostringstream cmd;
        std::ofstream f(path);
        f << big;
    }
    CHECK(cli({"search", path, "--coeffs", "-1,0,1"}) == 2);
}

TEST_CASE("example catalog runs against the stored goldens") {
    std::string text;
    CHECK(cli({"examples", "list"}, &text) == 0);
    CHECK(text.find("thm3.36-zinbiel") != std::string::npos);

    CHECK(cli({"examples", "run", "ex2.10-novikov-type"}, &text) == 0);
    CHECK(cli({"examples", "run", "ex2.10-novikov-type-mutant"}, &text) == 0);
    CHECK(cli({"examples", "run", "--all"}, &text) == 0);
    CHECK(cli({"examples", "run", "thm3.36-zinbiel", "--xi", "1", "--k", "2"}, &text) == 0);
    CHECK(cli({"examples", "run", "unknown-example"}, &text) == 2);
    CHECK(cli({"examples", "show", "ex2.14-conformal"}, &text) == 0);
    CHECK(text.find("[e1 _λ e2] = λ e2") != std::string::npos);
}

TEST_CASE("registry output is deterministic across repeated runs") {
    for (const auto& e : registry_entries()) {
        const std::string a = example_output(e.name, Rat(0), Rat(1));
        const std::string b = example_output(e.name, Rat(0), Rat(1));
        CHECK(a == b);
    }
}
