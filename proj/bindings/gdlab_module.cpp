#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gdlab/cli.hpp"
#include "gdlab/registry.hpp"

namespace py = pybind11;
using namespace gdlab;

namespace {

Rat rat_arg(const py::object& q) {
    const std::string s = py::cast<std::string>(py::str(q));
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int den{s.substr(slash + 1)};
        if (den <= 0) throw input_error("denominator must be positive: " + s);
        return Rat(Int(s.substr(0, slash)), den);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("not a rational number: " + s);
    }
}

Mat mat_arg(const py::sequence& rows) {
    const int r = static_cast<int>(py::len(rows));
    if (r == 0) throw input_error("matrix must have rows");
    const int c = static_cast<int>(py::len(py::cast<py::sequence>(rows[0])));
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        const py::sequence row = py::cast<py::sequence>(rows[i]);
        if (static_cast<int>(py::len(row)) != c) throw input_error("ragged matrix");
        for (int j = 0; j < c; ++j) m.at(i, j) = MPoly(rat_arg(row[j]));
    }
    return m;
}

py::list matrix_out(const Mat& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(render_poly(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

AlgebraLaw algebra_law(const std::string& s) {
    if (s == "novikov") return AlgebraLaw::Novikov;
    if (s == "lie") return AlgebraLaw::Lie;
    if (s == "gd-compat") return AlgebraLaw::GdCompat;
    if (s == "gd") return AlgebraLaw::Gd;
    throw input_error("unknown algebra law: " + s);
}

CoalgebraLaw coalgebra_law(const std::string& s) {
    if (s == "novikov") return CoalgebraLaw::Novikov;
    if (s == "lie") return CoalgebraLaw::Lie;
    if (s == "gd") return CoalgebraLaw::Gd;
    throw input_error("unknown coalgebra law: " + s);
}

BialgebraLaw bialgebra_law(const std::string& s) {
    if (s == "novikov") return BialgebraLaw::Novikov;
    if (s == "lie") return BialgebraLaw::Lie;
    if (s == "gd") return BialgebraLaw::Gd;
    throw input_error("unknown bialgebra law: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification kernel for Gel'fand-Dorfman (bi)algebras, "
              "Yang-Baxter tensors and their conformal counterparts";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

    py::class_<Violation>(m, "Violation")
        .def_readonly("axiom", &Violation::axiom)
        .def_readonly("witness", &Violation::witness)
        .def_readonly("defect", &Violation::defect)
        .def("__repr__", [](const Violation& v) {
            std::ostringstream os;
            os << "Violation(" << v.axiom << " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                os << (i ? "," : "") << v.witness[i];
            os << "): " << v.defect << ")";
            return os.str();
        });

    py::class_<AxiomReport>(m, "Report")
        .def_readonly("passed", &AxiomReport::passed)
        .def_readonly("violations", &AxiomReport::violations)
        .def("__bool__", [](const AxiomReport& r) { return r.passed; })
        .def("__repr__", [](const AxiomReport& r) {
            return std::string("Report(passed=") + (r.passed ? "True" : "False") + ", " +
                   std::to_string(r.violations.size()) + " violations)";
        });

    py::class_<AlgebraStructure>(m, "AlgebraStructure")
        .def(py::init<int>(), py::arg("dim"))
        .def_property_readonly("dim", &AlgebraStructure::dim)
        .def(
            "set_circ",
            [](AlgebraStructure& a, int i, int j, int k, const py::object& q) {
                a.set_circ(i - 1, j - 1, k - 1, rat_arg(q));
            },
            py::arg("i"), py::arg("j"), py::arg("k"), py::arg("coeff"),
            "1-based: coefficient of e_k in the product of e_i and e_j")
        .def("set_bracket",
             [](AlgebraStructure& a, int i, int j, int k, const py::object& q) {
                 a.set_bracket(i - 1, j - 1, k - 1, rat_arg(q));
             })
        .def("circ",
             [](const AlgebraStructure& a, int i, int j, int k) {
                 return to_string(a.circ(i - 1, j - 1, k - 1));
             })
        .def("bracket",
             [](const AlgebraStructure& a, int i, int j, int k) {
                 return to_string(a.bracket(i - 1, j - 1, k - 1));
             })
        .def_property("labels", &AlgebraStructure::labels, &AlgebraStructure::set_labels)
        .def("render", &render_gd_product_tables)
        .def("check", [](const AlgebraStructure& a, const std::string& law) {
            return check_algebra(a, algebra_law(law));
        });

    py::class_<CoalgebraStructure>(m, "CoalgebraStructure")
        .def(py::init<int>(), py::arg("dim"))
        .def_property_readonly("dim", &CoalgebraStructure::dim)
        .def(
            "set_Delta",
            [](CoalgebraStructure& c, int k, int i, int j, const py::object& q) {
                c.set_Delta(k - 1, i - 1, j - 1, rat_arg(q));
            },
            py::arg("k"), py::arg("i"), py::arg("j"), py::arg("coeff"),
            "1-based: coefficient of e_i⊗e_j in the comultiplication of e_k")
        .def("set_delta0",
             [](CoalgebraStructure& c, int k, int i, int j, const py::object& q) {
                 c.set_delta0(k - 1, i - 1, j - 1, rat_arg(q));
             })
        .def("render", &render_gd_coalgebra_tables)
        .def("check", [](const CoalgebraStructure& c, const std::string& law) {
            return check_coalgebra(c, coalgebra_law(law));
        });

    m.def("dualize_algebra", &dualize_algebra);
    m.def("dualize_coalgebra", &dualize_coalgebra);

    py::class_<BialgebraData>(m, "BialgebraData")
        .def(py::init<AlgebraStructure, CoalgebraStructure>())
        .def_readonly("alg", &BialgebraData::alg)
        .def_readonly("co", &BialgebraData::co)
        .def("check",
             [](const BialgebraData& d, const std::string& law) {
                 return check_bialgebra(d, bialgebra_law(law));
             })
        .def("classify", [](const BialgebraData& d) {
            return std::string(special_type_name(classify_special(d)));
        });

    py::class_<RMatrix>(m, "RMatrix")
        .def(py::init<int>(), py::arg("dim"))
        .def("set", [](RMatrix& r, int i, int j,
                       const py::object& q) { r.set(i - 1, j - 1, rat_arg(q)); })
        .def("get",
             [](const RMatrix& r, int i, int j) { return to_string(r.get(i - 1, j - 1)); })
        .def_property_readonly("skew", &RMatrix::is_skew)
        .def("render",
             [](const RMatrix& r) { return render_tensor2(r.t, default_labels(r.dim)); });

    m.def("nybe_defect_is_zero", [](const AlgebraStructure& a, const RMatrix& r) {
        return nybe_defect(a, r).is_zero();
    });
    m.def("cybe_defect_is_zero", [](const AlgebraStructure& a, const RMatrix& r) {
        return cybe_defect(a, r).is_zero();
    });
    m.def("check_gdybe", [](const AlgebraStructure& a, const RMatrix& r) {
        const GdybeReport rep = check_gdybe(a, r);
        py::dict d;
        d["skew"] = rep.skew;
        d["nybe_zero"] = rep.nybe_zero;
        d["cybe_zero"] = rep.cybe_zero;
        d["solution"] = rep.solution();
        return d;
    });
    m.def("coboundary_maps", &coboundary_maps);
    m.def("check_coboundary_conditions", &check_coboundary_conditions);
    m.def("r_to_operator", [](const AlgebraStructure& a, const RMatrix& r) {
        OperatorFormResult res = r_to_operator(a, r);
        return py::make_tuple(matrix_out(res.T), res.report);
    });

    py::class_<Representation>(m, "Representation")
        .def(py::init<int, int>(), py::arg("alg_dim"), py::arg("rep_dim"))
        .def_readonly("alg_dim", &Representation::alg_dim)
        .def_readonly("rep_dim", &Representation::rep_dim)
        .def("set_l",
             [](Representation& rep, int a, int row, int col, const py::object& q) {
                 rep.l[static_cast<std::size_t>(a - 1)].at(row - 1, col - 1) = MPoly(rat_arg(q));
             })
        .def("set_r",
             [](Representation& rep, int a, int row, int col, const py::object& q) {
                 rep.r[static_cast<std::size_t>(a - 1)].at(row - 1, col - 1) = MPoly(rat_arg(q));
             })
        .def("set_rho", [](Representation& rep, int a, int row, int col, const py::object& q) {
            rep.rho[static_cast<std::size_t>(a - 1)].at(row - 1, col - 1) = MPoly(rat_arg(q));
        });

    m.def("adjoint_representation", &adjoint_representation);
    m.def("dual_representation", &dual_representation);
    m.def(
        "check_representation",
        [](const AlgebraStructure& a, const Representation& rep, const std::string& law) {
            const RepLaw l = law == "novikov" ? RepLaw::Novikov
                             : law == "lie"   ? RepLaw::Lie
                                              : RepLaw::Gd;
            return check_representation(a, rep, l);
        },
        py::arg("alg"), py::arg("rep"), py::arg("law") = "gd");
    m.def("semidirect", [](const AlgebraStructure& a, const Representation& rep) {
        return semidirect(a, rep);
    });
    m.def("check_o_operator",
          [](const AlgebraStructure& a, const Representation& rep, const py::sequence& T) {
              return check_o_operator(a, rep, mat_arg(T));
          });
    m.def("o_operator_to_r",
          [](const AlgebraStructure& a, const Representation& rep, const py::sequence& T) {
              OOperatorDouble res = o_operator_to_r(a, rep, mat_arg(T));
              return py::make_tuple(res.double_alg, res.r);
          });

    py::class_<PreGDStructure>(m, "PreGDStructure")
        .def(py::init<int>(), py::arg("dim"))
        .def_readonly("dim", &PreGDStructure::dim)
        .def("set_lhd",
             [](PreGDStructure& p, int i, int j, int k, const py::object& q) {
                 p.lhd[p.idx(i - 1, j - 1, k - 1)] = rat_arg(q);
             })
        .def("set_rhd",
             [](PreGDStructure& p, int i, int j, int k, const py::object& q) {
                 p.rhd[p.idx(i - 1, j - 1, k - 1)] = rat_arg(q);
             })
        .def("set_diamond", [](PreGDStructure& p, int i, int j, int k, const py::object& q) {
            p.diamond[p.idx(i - 1, j - 1, k - 1)] = rat_arg(q);
        });

    m.def("check_pre_gd", &check_pre_gd);
    m.def("pregd_to_gd", [](const PreGDStructure& p) {
        GdWithRep res = pregd_to_gd(p);
        return py::make_tuple(res.alg, res.rep);
    });

    py::class_<ZinbielData>(m, "ZinbielData")
        .def(py::init([](int dim, const py::object& xi, const py::object& k) {
                 ZinbielData z;
                 z.dim = dim;
                 z.dot.assign(static_cast<std::size_t>(dim) * dim * dim, Rat(0));
                 z.D = Mat(dim, dim);
                 z.xi = rat_arg(xi);
                 z.kparam = rat_arg(k);
                 return z;
             }),
             py::arg("dim"), py::arg("xi") = 0, py::arg("k") = 1)
        .def("set_dot",
             [](ZinbielData& z, int i, int j, int k, const py::object& q) {
                 z.dot[(static_cast<std::size_t>(i - 1) * z.dim + (j - 1)) * z.dim + (k - 1)] =
                     rat_arg(q);
             })
        .def("set_D", [](ZinbielData& z, int row, int col, const py::object& q) {
            z.D.at(row - 1, col - 1) = MPoly(rat_arg(q));
        });

    m.def("check_zinbiel", &check_zinbiel);
    m.def("zinbiel_to_pregd", &zinbiel_to_pregd);

    py::class_<PipelineResult>(m, "PipelineResult")
        .def_readonly("double_alg", &PipelineResult::double_alg)
        .def_readonly("r", &PipelineResult::r)
        .def_readonly("bialgebra_report", &PipelineResult::bialgebra_report)
        .def_property_readonly("bialg", [](const PipelineResult& p) { return p.bialg; })
        .def_property_readonly("gdybe", [](const PipelineResult& p) {
            py::dict d;
            d["skew"] = p.gdybe.skew;
            d["nybe_zero"] = p.gdybe.nybe_zero;
            d["cybe_zero"] = p.gdybe.cybe_zero;
            d["solution"] = p.gdybe.solution();
            return d;
        });

    m.def("pregd_pipeline", &pregd_pipeline);
    m.def("pipeline_text", [](const PreGDStructure& p) {
        const PipelineRun run = run_pregd_pipeline_chain(p);
        return py::make_tuple(run.text, run.ok);
    });

    py::class_<ConformalStructure>(m, "ConformalStructure")
        .def_property_readonly("dim", &ConformalStructure::dim)
        .def("render", &render_lambda_table)
        .def("render_cobracket", &render_cobracket_table)
        .def_property_readonly("has_cobracket", &ConformalStructure::has_cobracket)
        .def("check", &check_conformal_algebra)
        .def("check_bialgebra", &check_conformal_bialgebra);

    m.def("affinize", &affinize);
    m.def("build_cobracket", [](const ConformalStructure& cs, const CoalgebraStructure& co) {
        CobracketResult res = build_cobracket(cs, co);
        return py::make_tuple(res.cs, res.report);
    });
    m.def("ccybe_defect_is_zero", [](const ConformalStructure& cs, const RMatrix& r) {
        return ccybe_defect(cs, r).is_zero();
    });
    m.def("coboundary_conformal", [](const ConformalStructure& cs, const RMatrix& r) {
        ConformalStructure out = cs;
        out.set_cobracket(coboundary_conformal(cs, r));
        return out;
    });
    m.def("conformal_rep_valid", [](const AlgebraStructure& a, const Representation& rep) {
        return conformal_rep(a, rep).report;
    });
    m.def("check_conformal_o_operator",
          [](const AlgebraStructure& a, const Representation& rep, const py::sequence& T) {
              const ConformalRepResult crep = conformal_rep(a, rep);
              AxiomReport out = crep.report;
              out.merge(check_conformal_o_operator(affinize(a), crep.rep, mat_arg(T)));
              return out;
          });
    m.def("left_symmetric_conformal",
          [](const PreGDStructure& p) { return left_symmetric_conformal(p).report; });

    py::class_<BilinearForm>(m, "BilinearForm")
        .def(py::init<int>(), py::arg("dim"))
        .def_static("identity", &BilinearForm::identity)
        .def_static("standard_hyperbolic", &BilinearForm::standard_hyperbolic)
        .def("set", [](BilinearForm& f, int i, int j, const py::object& q) {
            f.gram.at(i - 1, j - 1) = MPoly(rat_arg(q));
        });

    m.def("check_quadratic_gd", &check_quadratic_gd);
    m.def("check_conformal_bilinear", &check_conformal_bilinear);
    m.def("check_matched_pair_of", [](const BialgebraData& d) {
        return check_matched_pair(standard_dual_matched_pair(d));
    });
    m.def("build_standard_manin", [](const BialgebraData& d) {
        ManinTripleResult res = build_standard_manin(d);
        return py::make_tuple(res.double_alg, res.report);
    });

    // example catalog and the CLI entry point
    m.def("list_examples", [] {
        py::list out;
        for (const auto& e : registry_entries())
            out.append(py::make_tuple(e.name, e.description));
        return out;
    });
    m.def(
        "example_output",
        [](const std::string& name, const py::object& xi, const py::object& k) {
            return example_output(name, rat_arg(xi), rat_arg(k));
        },
        py::arg("name"), py::arg("xi") = 0, py::arg("k") = 1);
    m.def(
        "run_example",
        [](const std::string& name, const py::object& xi, const py::object& k) {
            const RunResult r = run_example(name, rat_arg(xi), rat_arg(k));
            return py::make_tuple(r.exit_code, r.output, r.message);
        },
        py::arg("name"), py::arg("xi") = 0, py::arg("k") = 1);
    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str() + err.str());
    });

    m.def("builtin_novikov_type_2d", &builtin::novikov_type_2d);
    m.def("builtin_lie_type_2d", &builtin::lie_type_2d);
    m.def("builtin_novikov_bialgebra_2d", &builtin::novikov_bialgebra_2d);
    m.def(
        "builtin_zinbiel_3d",
        [](const py::object& xi, const py::object& k) {
            return builtin::zinbiel_3d(rat_arg(xi), rat_arg(k));
        },
        py::arg("xi") = 0, py::arg("k") = 1);
}
