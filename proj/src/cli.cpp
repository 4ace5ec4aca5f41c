#include "gdlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gdlab/registry.hpp"

namespace gdlab {

namespace {

using nlohmann::json;

Rat parse_rat_arg(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den <= 0) throw input_error("denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw input_error("not a rational number: " + s);
    }
}

json report_to_json(const AxiomReport& rep) {
    json j;
    j["passed"] = rep.passed;
    json vs = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["axiom"] = v.axiom;
        e["witness"] = v.witness;
        e["defect"] = v.defect;
        vs.push_back(e);
    }
    j["violations"] = vs;
    return j;
}

void print_report(std::ostream& out, const std::string& what, const AxiomReport& rep,
                  bool as_json) {
    if (as_json) {
        json j = report_to_json(rep);
        j["check"] = what;
        out << dump_json(j);
        return;
    }
    out << what << ": " << (rep.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& v : rep.violations) {
        out << "  violated " << v.axiom << " at (";
        for (std::size_t t = 0; t < v.witness.size(); ++t)
            out << (t ? "," : "") << v.witness[t];
        out << "): defect = " << v.defect << "\n";
    }
}

AxiomReport dispatch_check(const StructureFile& f, const std::string& kind) {
    if (kind == "novikov") return check_algebra(f.alg, AlgebraLaw::Novikov);
    if (kind == "lie") return check_algebra(f.alg, AlgebraLaw::Lie);
    if (kind == "gd") return check_algebra(f.alg, AlgebraLaw::Gd);
    if (kind == "novikov-coalg") return check_coalgebra(f.co, CoalgebraLaw::Novikov);
    if (kind == "lie-coalg") return check_coalgebra(f.co, CoalgebraLaw::Lie);
    if (kind == "gd-coalg") return check_coalgebra(f.co, CoalgebraLaw::Gd);
    if (kind == "novikov-bialg") return check_bialgebra({f.alg, f.co}, BialgebraLaw::Novikov);
    if (kind == "lie-bialg") return check_bialgebra({f.alg, f.co}, BialgebraLaw::Lie);
    if (kind == "gd-bialg") return check_bialgebra({f.alg, f.co}, BialgebraLaw::Gd);
    if (kind == "pre-gd") {
        if (!f.has_pre) throw input_error("check pre-gd needs lhd/rhd/diamond tables");
        return check_pre_gd(f.pre);
    }
    if (kind == "zinbiel") return check_zinbiel(f.zinbiel(Rat(0), Rat(1)));
    if (kind == "quadratic") {
        if (!f.has_form) throw input_error("check quadratic needs a 'form' matrix");
        return check_quadratic_gd(f.alg, f.form);
    }
    if (kind == "rep") {
        if (!f.has_rep) throw input_error("check rep needs a 'rep' table");
        return check_representation(f.alg, f.rep, RepLaw::Gd);
    }
    if (kind == "o-operator") {
        if (!f.has_rep || !f.has_T) throw input_error("check o-operator needs 'rep' and 'T'");
        return check_o_operator(f.alg, f.rep, f.T);
    }
    if (kind == "matched-pair") return check_matched_pair(standard_dual_matched_pair({f.alg, f.co}));
    if (kind == "conformal") return check_conformal_algebra(affinize(f.alg));
    if (kind == "conformal-bialg") {
        const CobracketResult cb = build_cobracket(affinize(f.alg), f.co);
        AxiomReport rep = check_conformal_algebra(cb.cs);
        rep.merge(cb.report);
        rep.merge(check_conformal_bialgebra(cb.cs));
        return rep;
    }
    if (kind == "conformal-o-operator") {
        if (!f.has_rep || !f.has_T)
            throw input_error("check conformal-o-operator needs 'rep' and 'T'");
        const ConformalRepResult crep = conformal_rep(f.alg, f.rep);
        AxiomReport rep = crep.report;
        rep.merge(check_conformal_o_operator(affinize(f.alg), crep.rep, f.T));
        return rep;
    }
    throw input_error("unknown check kind: " + kind);
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw input_error("cannot write file: " + path);
    os << text;
}

int cmd_construct(const std::string& op, const StructureFile& f, const std::string& out_path,
                  bool print, const Rat& xi, const Rat& k, std::ostream& out) {
    std::string text;
    std::string file_payload;
    int exit_code = 0;

    if (op == "affinize") {
        text = render_lambda_table(affinize(f.alg));
        file_payload = text;
    } else if (op == "cobracket") {
        const CobracketResult cb = build_cobracket(affinize(f.alg), f.co);
        text = render_lambda_table(cb.cs) + render_cobracket_table(cb.cs);
        if (!cb.report.passed) {
            exit_code = 1;
            text += "conformal coalgebra check: FAIL\n";
        }
        file_payload = text;
    } else if (op == "double") {
        const ManinTripleResult res = build_standard_manin({f.alg, f.co});
        json j = algebra_to_json(res.double_alg);
        merge_form_json(j, res.form);
        file_payload = dump_json(j);
        text = render_gd_product_tables(res.double_alg);
        text += std::string("quadratic gd check: ") + (res.report.passed ? "PASS" : "FAIL") + "\n";
        if (!res.report.passed) exit_code = 1;
    } else if (op == "coboundary") {
        if (!f.has_r) throw input_error("construct coboundary needs an 'r' table");
        const CoalgebraStructure co = coboundary_maps(f.alg, f.r);
        json j = algebra_to_json(f.alg);
        merge_coalgebra_json(j, co);
        merge_r_json(j, f.r);
        file_payload = dump_json(j);
        text = render_gd_coalgebra_tables(co);
    } else if (op == "coboundary-conformal") {
        if (!f.has_r) throw input_error("construct coboundary-conformal needs an 'r' table");
        const ConformalStructure aff = affinize(f.alg);
        ConformalStructure cs = aff;
        cs.set_cobracket(coboundary_conformal(aff, f.r));
        text = render_lambda_table(cs) + render_cobracket_table(cs);
        file_payload = text;
    } else if (op == "dualize") {
        json j = algebra_to_json(dualize_coalgebra(f.co));
        merge_coalgebra_json(j, dualize_algebra(f.alg));
        file_payload = dump_json(j);
        text = file_payload;
    } else if (op == "semidirect") {
        if (!f.has_rep) throw input_error("construct semidirect needs a 'rep' table");
        const AlgebraStructure s = semidirect(f.alg, f.rep);
        file_payload = dump_json(algebra_to_json(s));
        text = render_gd_product_tables(s);
    } else if (op == "pipeline-zinbiel") {
        const PreGDStructure p = zinbiel_to_pregd(f.zinbiel(xi, k));
        const PipelineRun run = run_pregd_pipeline_chain(p);
        text = run.text;
        if (!run.ok) exit_code = 1;
        json j = algebra_to_json(run.result.double_alg);
        merge_coalgebra_json(j, run.result.bialg.co);
        merge_r_json(j, run.result.r);
        file_payload = dump_json(j);
    } else {
        throw input_error("unknown construct operation: " + op);
    }

    if (!out_path.empty()) write_output(out_path, file_payload);
    if (print || out_path.empty()) out << text;
    return exit_code;
}

int cmd_search(const StructureFile& f, const std::string& coeffs, bool as_json,
               std::ostream& out) {
    const int n = f.dim;
    if (n > 4) throw input_error("search is limited to dim <= 4");
    if (!check_algebra(f.alg, AlgebraLaw::Gd).passed)
        throw input_error("search requires a GD algebra");

    std::vector<Rat> grid;
    std::stringstream ss(coeffs);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) grid.push_back(parse_rat_arg(tok));
    }
    if (grid.empty()) throw input_error("--coeffs must list at least one value");

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    std::size_t total = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) total *= grid.size();

    json solutions = json::array();
    std::size_t found = 0;
    for (std::size_t code = 0; code < total; ++code) {
        RMatrix r(n);
        std::size_t rest = code;
        // Most significant digit on the first slot, grid order as supplied.
        for (std::size_t s = slots.size(); s-- > 0;) {
            const Rat& c = grid[rest % grid.size()];
            rest /= grid.size();
            r.set(slots[s].first, slots[s].second, c);
            r.set(slots[s].second, slots[s].first, -c);
        }
        const GdybeReport rep = check_gdybe(f.alg, r);
        if (rep.solution()) {
            ++found;
            if (as_json) {
                json e;
                merge_r_json(e, r);
                solutions.push_back(e["r"]);
            } else {
                out << "solution: r = " << render_tensor2(r.t, f.basis) << "\n";
            }
        }
    }
    if (as_json) {
        json j;
        j["candidates"] = total;
        j["solutions"] = solutions;
        out << dump_json(j);
    } else {
        out << "skew candidates: " << total << ", solutions: " << found << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification and construction kernel for Gel'fand-Dorfman "
                 "(bi)algebras and their conformal counterparts"};
    app.require_subcommand(1);

    std::string file, kind, out_path, coeffs = "-1,0,1", xi_str = "0", k_str = "1";
    bool as_json = false, print = false, skew = true, run_all = false;

    auto* check = app.add_subcommand("check", "run an axiom check on a structure file");
    check->add_option("file", file, "structure file (JSON)")->required();
    check->add_option("--kind", kind, "which check to run")->required();
    check->add_flag("--json", as_json, "machine-readable report");

    auto* construct = app.add_subcommand("construct", "build derived structures");
    std::string op;
    construct->add_option("op", op,
                          "affinize | cobracket | double | coboundary | coboundary-conformal | "
                          "dualize | semidirect | pipeline-zinbiel")
        ->required();
    construct->add_option("file", file, "structure file (JSON)")->required();
    construct->add_option("-o,--output", out_path, "write the constructed structure here");
    construct->add_flag("--print", print, "print the canonical text rendering");
    construct->add_option("--xi", xi_str, "rational parameter for pipeline-zinbiel");
    construct->add_option("--k", k_str, "rational parameter for pipeline-zinbiel");

    auto* search = app.add_subcommand("search", "enumerate skew r over a coefficient grid");
    search->add_option("file", file, "structure file (JSON)")->required();
    search->add_option("--coeffs", coeffs, "comma-separated coefficient grid");
    search->add_flag("--skew", skew, "restrict to skew-symmetric r (always on)");
    search->add_flag("--json", as_json, "machine-readable report");

    auto* examples = app.add_subcommand("examples", "bundled example catalog");
    std::string action, name;
    examples->add_option("action", action, "list | run | show")->required();
    examples->add_option("name", name, "example name (for run/show)");
    examples->add_flag("--all", run_all, "run every example");
    examples->add_option("--xi", xi_str, "rational parameter");
    examples->add_option("--k", k_str, "rational parameter");

    try {
        std::vector<const char*> argv;
        argv.push_back("gdlab");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Rat xi = parse_rat_arg(xi_str), kp = parse_rat_arg(k_str);
        if (check->parsed()) {
            const StructureFile f = load_structure_file(file);
            const AxiomReport rep = dispatch_check(f, kind);
            print_report(out, "check " + kind, rep, as_json);
            return rep.passed ? 0 : 1;
        }
        if (construct->parsed()) {
            const StructureFile f = load_structure_file(file);
            return cmd_construct(op, f, out_path, print, xi, kp, out);
        }
        if (search->parsed()) {
            const StructureFile f = load_structure_file(file);
            return cmd_search(f, coeffs, as_json, out);
        }
        if (examples->parsed()) {
            if (action == "list") {
                for (const auto& e : registry_entries())
                    out << e.name << " — " << e.description << "\n";
                return 0;
            }
            if (action == "show") {
                if (name.empty()) throw input_error("examples show needs a name");
                out << example_output(name, xi, kp);
                return 0;
            }
            if (action == "run") {
                const bool explicit_params =
                    examples->count("--xi") > 0 || examples->count("--k") > 0;
                auto run_one = [&](const std::string& n) {
                    return explicit_params ? run_example(n, xi, kp) : run_example_sweep(n);
                };
                if (run_all) {
                    int worst = 0;
                    for (const auto& e : registry_entries()) {
                        const RunResult r = run_one(e.name);
                        out << e.name << ": " << (r.exit_code == 0 ? "ok" : "FAIL") << "\n";
                        if (r.exit_code != 0) {
                            out << "  " << r.message << "\n";
                            worst = 1;
                        }
                    }
                    return worst;
                }
                if (name.empty()) throw input_error("examples run needs a name or --all");
                const RunResult r = run_one(name);
                if (r.exit_code == 0) {
                    out << name << ": ok\n";
                } else {
                    out << name << ": FAIL — " << r.message << "\n";
                    out << "--- actual output ---\n" << r.output;
                }
                return r.exit_code;
            }
            throw input_error("unknown examples action: " + action);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gdlab
