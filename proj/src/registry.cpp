#include "gdlab/registry.hpp"

#include <map>

namespace gdlab {

namespace builtin {

BialgebraData novikov_type_2d() {
    AlgebraStructure alg(2);
    alg.set_circ(0, 1, 1, Rat(1));  // e1∘e2 = e2
    CoalgebraStructure co(2);
    co.set_delta0(1, 0, 1, Rat(1));   // δ0(e2) = e1⊗e2 − e2⊗e1
    co.set_delta0(1, 1, 0, Rat(-1));
    return {std::move(alg), std::move(co)};
}

BialgebraData lie_type_2d() {
    AlgebraStructure alg(2);
    alg.set_bracket(0, 1, 1, Rat(1));   // [e1,e2] = e2
    alg.set_bracket(1, 0, 1, Rat(-1));
    CoalgebraStructure co(2);
    co.set_Delta(1, 0, 1, Rat(1));  // Δ(e2) = e1⊗e2
    return {std::move(alg), std::move(co)};
}

BialgebraData novikov_bialgebra_2d() {
    AlgebraStructure alg(2);
    alg.set_circ(0, 0, 0, Rat(1));  // e1∘e1 = e1
    alg.set_circ(1, 0, 1, Rat(1));  // e2∘e1 = e2
    CoalgebraStructure co(2);
    co.set_Delta(0, 1, 1, Rat(1));  // Δ(e1) = e2⊗e2
    return {std::move(alg), std::move(co)};
}

ZinbielData zinbiel_3d(const Rat& xi, const Rat& k) {
    ZinbielData z;
    z.dim = 3;
    z.dot.assign(27, Rat(0));
    auto set = [&](int i, int j, int t, int c) {
        z.dot[(static_cast<std::size_t>(i) * 3 + j) * 3 + t] = Rat(c);
    };
    set(0, 0, 1, 1);  // e1·e1 = e2
    set(0, 1, 2, 2);  // e1·e2 = 2e3
    set(1, 0, 2, 1);  // e2·e1 = e3
    z.D = Mat(3, 3);
    for (int i = 0; i < 3; ++i) z.D.at(i, i) = MPoly(i + 1);
    z.xi = xi;
    z.kparam = k;
    return z;
}

}  // namespace builtin

namespace {

std::string verdict_line(const std::string& what, bool pass) {
    return what + ": " + (pass ? "pass" : "fail") + "\n";
}

std::string violations_text(const AxiomReport& rep, std::size_t cap = 6) {
    std::string out;
    for (std::size_t i = 0; i < rep.violations.size() && i < cap; ++i) {
        const auto& v = rep.violations[i];
        out += "  violated " + v.axiom + " at (";
        for (std::size_t t = 0; t < v.witness.size(); ++t)
            out += (t ? "," : "") + std::to_string(v.witness[t]);
        out += "): defect = " + v.defect + "\n";
    }
    if (rep.violations.size() > cap)
        out += "  … " + std::to_string(rep.violations.size() - cap) + " more\n";
    return out;
}

struct ChainResult {
    std::string text;
    bool as_expected = false;
};

ChainResult bialgebra_chain(const BialgebraData& d, bool expect_pass) {
    std::string out = render_gd_product_tables(d.alg) + render_gd_coalgebra_tables(d.co);
    const AxiomReport rep = check_bialgebra(d, BialgebraLaw::Gd);
    out += verdict_line("gd-bialgebra check", rep.passed);
    out += violations_text(rep);
    if (rep.passed)
        out += std::string("classification: ") + special_type_name(classify_special(d)) + "\n";
    return {std::move(out), rep.passed == expect_pass};
}

ChainResult conformal_chain(const BialgebraData& d) {
    const CobracketResult cb = build_cobracket(affinize(d.alg), d.co);
    std::string out = render_lambda_table(cb.cs) + render_cobracket_table(cb.cs);
    const AxiomReport alg_rep = check_conformal_algebra(cb.cs);
    const AxiomReport bi_rep = check_conformal_bialgebra(cb.cs);
    const bool ok = alg_rep.passed && cb.report.passed && bi_rep.passed;
    out += verdict_line("conformal bialgebra check", ok);
    out += violations_text(alg_rep);
    out += violations_text(cb.report);
    out += violations_text(bi_rep);
    return {std::move(out), ok};
}

ChainResult zinbiel_chain(const Rat& xi, const Rat& k, bool mutate) {
    std::string out =
        "parameters: xi = " + to_string(xi) + ", k = " + to_string(k) + "\n";
    const ZinbielData z = builtin::zinbiel_3d(xi, k);
    const AxiomReport zrep = check_zinbiel(z);
    out += verdict_line("zinbiel and derivation check", zrep.passed);
    if (!zrep.passed) return {std::move(out), false};

    PreGDStructure p = zinbiel_to_pregd(z);
    if (mutate) p.lhd[p.idx(0, 0, 1)] += Rat(1);
    const AxiomReport prep = check_pre_gd(p);
    if (!prep.passed) {
        out += verdict_line("pre-gd check", false);
        out += violations_text(prep, 3);
        return {std::move(out), mutate};
    }
    const PipelineRun run = run_pregd_pipeline_chain(p);
    out += run.text;
    return {std::move(out), run.ok && !mutate};
}

ChainResult run_chain(const std::string& name, const Rat& xi, const Rat& k) {
    if (name == "ex2.10-novikov-type") return bialgebra_chain(builtin::novikov_type_2d(), true);
    if (name == "ex2.10-lie-type") return bialgebra_chain(builtin::lie_type_2d(), true);
    if (name == "ex2.15-novikov-bialg") {
        const BialgebraData d = builtin::novikov_bialgebra_2d();
        const AxiomReport nov = check_bialgebra(d, BialgebraLaw::Novikov);
        ChainResult r = bialgebra_chain(d, true);
        r.text = verdict_line("novikov-bialgebra check", nov.passed) + r.text;
        r.as_expected = r.as_expected && nov.passed;
        return r;
    }
    if (name == "ex2.14-conformal") {
        ChainResult a = conformal_chain(builtin::novikov_type_2d());
        ChainResult b = conformal_chain(builtin::lie_type_2d());
        return {"== novikov type ==\n" + a.text + "== lie type ==\n" + b.text,
                a.as_expected && b.as_expected};
    }
    if (name == "ex2.15-conformal") return conformal_chain(builtin::novikov_bialgebra_2d());
    if (name == "thm3.36-zinbiel") return zinbiel_chain(xi, k, false);
    if (name == "ex2.10-novikov-type-mutant") {
        BialgebraData d = builtin::novikov_type_2d();
        d.co.set_delta0(1, 1, 0, Rat(0));  // break antisymmetry of δ0(e2)
        return bialgebra_chain(d, false);
    }
    if (name == "ex2.15-novikov-bialg-mutant") {
        BialgebraData d = builtin::novikov_bialgebra_2d();
        d.co.set_Delta(1, 0, 0, Rat(1));  // spurious Δ(e2) = e1⊗e1
        return bialgebra_chain(d, false);
    }
    if (name == "thm3.36-zinbiel-mutant") return zinbiel_chain(xi, k, true);
    throw input_error("unknown example: " + name);
}

}  // namespace

PipelineRun run_pregd_pipeline_chain(const PreGDStructure& p) {
    PipelineRun run;
    const AxiomReport prep = check_pre_gd(p);
    run.text += verdict_line("pre-gd check", prep.passed);
    if (!prep.passed) {
        run.text += violations_text(prep, 3);
        run.ok = false;
        return run;
    }
    run.result = pregd_pipeline(p);
    const PipelineResult& res = run.result;
    run.text += "double products:\n" + render_gd_product_tables(res.double_alg);
    run.text += "coproducts:\n" + render_gd_coalgebra_tables(res.bialg.co);
    run.text += std::string("canonical r: skew = ") + (res.gdybe.skew ? "yes" : "no") +
                ", nybe defect zero = " + (res.gdybe.nybe_zero ? "yes" : "no") +
                ", cybe defect zero = " + (res.gdybe.cybe_zero ? "yes" : "no") + "\n";

    const ConformalStructure aff = affinize(res.double_alg);
    const bool ccybe_zero = ccybe_defect(aff, res.r).is_zero();
    run.text += verdict_line("ccybe defect vanishes", ccybe_zero);

    const CobracketResult cb = build_cobracket(aff, res.bialg.co);
    run.text += "lambda brackets:\n" + render_lambda_table(cb.cs);
    run.text += "cobrackets:\n" + render_cobracket_table(cb.cs);

    const std::vector<Tensor2> direct = coboundary_conformal(aff, res.r);
    bool routes_agree = true;
    for (int t = 0; t < res.double_alg.dim(); ++t)
        if (!(direct[static_cast<std::size_t>(t)] == cb.cs.cobracket_entry(t)))
            routes_agree = false;
    run.text += verdict_line("coboundary route agrees", routes_agree);

    run.text += verdict_line("gd-bialgebra check", res.bialgebra_report.passed);
    run.ok = res.gdybe.skew_solution() && ccybe_zero && routes_agree &&
             res.bialgebra_report.passed && cb.report.passed;
    return run;
}

const std::vector<RegistryEntry>& registry_entries() {
    static const std::vector<RegistryEntry> entries = {
        {"ex2.10-novikov-type", "2-dim bialgebra with trivial bracket and Delta", false},
        {"ex2.10-lie-type", "2-dim bialgebra with trivial circ and delta0", false},
        {"ex2.14-conformal", "conformal bialgebras built from the two 2-dim structures", false},
        {"ex2.15-novikov-bialg", "2-dim Novikov bialgebra", false},
        {"ex2.15-conformal", "conformal bialgebra built from the Novikov bialgebra", false},
        {"thm3.36-zinbiel", "3-dim Zinbiel-derived pipeline (parameterised by xi, k)", true},
        {"ex2.10-novikov-type-mutant", "negative control: broken cobracket", false},
        {"ex2.15-novikov-bialg-mutant", "negative control: broken comultiplication", false},
        {"thm3.36-zinbiel-mutant", "negative control: broken pre-GD table", true},
    };
    return entries;
}

std::string example_output(const std::string& name, const Rat& xi, const Rat& k) {
    return run_chain(name, xi, k).text;
}

// Generated at configure time from data/goldens/*.txt.
extern const std::map<std::string, std::string>& golden_table();

const std::string* find_golden(const std::string& name) {
    const auto& table = golden_table();
    auto it = table.find(name);
    return it == table.end() ? nullptr : &it->second;
}

RunResult run_example_sweep(const std::string& name) {
    const RegistryEntry* entry = nullptr;
    for (const auto& e : registry_entries())
        if (e.name == name) entry = &e;
    if (!entry) return {2, "", "unknown example: " + name};
    if (!entry->parameterised) return run_example(name, Rat(0), Rat(1));

    static const std::pair<Rat, Rat> kDefaultParams[] = {
        {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {make_rat(-1, 2), Rat(2)}};
    RunResult combined;
    for (const auto& [xi, k] : kDefaultParams) {
        const RunResult r = run_example(name, xi, k);
        combined.output += r.output;
        if (r.exit_code > combined.exit_code) {
            combined.exit_code = r.exit_code;
            combined.message = r.message;
        }
    }
    return combined;
}

RunResult run_example(const std::string& name, const Rat& xi, const Rat& k) {
    const RegistryEntry* entry = nullptr;
    for (const auto& e : registry_entries())
        if (e.name == name) entry = &e;
    if (!entry) return {2, "", "unknown example: " + name};

    const ChainResult chain = run_chain(name, xi, k);
    const bool default_params = !entry->parameterised || (xi == 0 && k == 1);
    if (!default_params)
        return {chain.as_expected ? 0 : 1, chain.text,
                chain.as_expected ? "" : "claim chain failed"};

    const std::string* golden = find_golden(name);
    if (!golden) return {1, chain.text, "no golden stored for " + name};
    if (*golden != chain.text) return {1, chain.text, "golden mismatch for " + name};
    return {0, chain.text, ""};
}

}  // namespace gdlab
