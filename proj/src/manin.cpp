#include "gdlab/manin.hpp"

namespace gdlab {

namespace {

void validate(const MatchedPairData& mp) {
    const int n = mp.A.dim(), m = mp.B.dim();
    auto check_maps = [](const std::vector<Mat>& maps, int count, int d, const char* what) {
        if (static_cast<int>(maps.size()) != count) throw input_error(std::string(what));
        for (const auto& M : maps)
            if (M.rows != d || M.cols != d) throw input_error(std::string(what));
    };
    check_maps(mp.lA, n, m, "matched pair: lA shape mismatch");
    check_maps(mp.rA, n, m, "matched pair: rA shape mismatch");
    check_maps(mp.rhoA, n, m, "matched pair: rhoA shape mismatch");
    check_maps(mp.lB, m, n, "matched pair: lB shape mismatch");
    check_maps(mp.rB, m, n, "matched pair: rB shape mismatch");
    check_maps(mp.rhoB, m, n, "matched pair: rhoB shape mismatch");
}

}  // namespace

AlgebraStructure build_double(const MatchedPairData& mp) {
    validate(mp);
    const int n = mp.A.dim(), m = mp.B.dim();
    AlgebraStructure s(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                s.set_circ(i, j, k, mp.A.circ(i, j, k));
                s.set_bracket(i, j, k, mp.A.bracket(i, j, k));
            }
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int t = 0; t < m; ++t) {
                s.set_circ(n + p, n + q, n + t, mp.B.circ(p, q, t));
                s.set_bracket(n + p, n + q, n + t, mp.B.bracket(p, q, t));
            }
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < m; ++q) {
            // a•y = r_B(y)a + l_A(a)y ; [a,y] = −ρ_B(y)a + ρ_A(a)y
            for (int k = 0; k < n; ++k) {
                s.set_circ(i, n + q, k, mp.rB[q].at(k, i).constant_value());
                s.set_bracket(i, n + q, k, -mp.rhoB[q].at(k, i).constant_value());
            }
            for (int p = 0; p < m; ++p) {
                s.set_circ(i, n + q, n + p, mp.lA[i].at(p, q).constant_value());
                s.set_bracket(i, n + q, n + p, mp.rhoA[i].at(p, q).constant_value());
            }
            // x•b = l_B(x)b + r_A(b)x ; [x,b] = ρ_B(x)b − ρ_A(b)x
            for (int k = 0; k < n; ++k) {
                s.set_circ(n + q, i, k, mp.lB[q].at(k, i).constant_value());
                s.set_bracket(n + q, i, k, mp.rhoB[q].at(k, i).constant_value());
            }
            for (int p = 0; p < m; ++p) {
                s.set_circ(n + q, i, n + p, mp.rA[i].at(p, q).constant_value());
                s.set_bracket(n + q, i, n + p, -mp.rhoA[i].at(p, q).constant_value());
            }
        }
    std::vector<std::string> labels = mp.A.labels();
    labels.insert(labels.end(), mp.B.labels().begin(), mp.B.labels().end());
    s.set_labels(std::move(labels));
    return s;
}

AxiomReport check_matched_pair(const MatchedPairData& mp) {
    validate(mp);
    const int n = mp.A.dim(), m = mp.B.dim();
    const AlgebraStructure dbl = build_double(mp);

    AxiomReport rep;
    rep.merge(check_algebra(dbl, AlgebraLaw::Gd), "double");

    AxiomReport diag;
    diag.merge(check_algebra(dbl, AlgebraLaw::Novikov), "novikov-matched-pair");
    diag.merge(check_algebra(dbl, AlgebraLaw::Lie), "lie-matched-pair");

    Representation repA(n, m);
    repA.l = mp.lA;
    repA.r = mp.rA;
    repA.rho = mp.rhoA;
    diag.merge(check_representation(mp.A, repA, RepLaw::Gd), "rep-over-A");
    Representation repB(m, n);
    repB.l = mp.lB;
    repB.r = mp.rB;
    repB.rho = mp.rhoB;
    diag.merge(check_representation(mp.B, repB, RepLaw::Gd), "rep-over-B");

    auto circA = [&](const Vec& x, const Vec& y) { return evaluate(mp.A, ProductKind::Circ, x, y); };
    auto brA = [&](const Vec& x, const Vec& y) { return evaluate(mp.A, ProductKind::Bracket, x, y); };
    auto circB = [&](const Vec& x, const Vec& y) { return evaluate(mp.B, ProductKind::Circ, x, y); };
    auto brB = [&](const Vec& x, const Vec& y) { return evaluate(mp.B, ProductKind::Bracket, x, y); };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < m; ++x) {
                const Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b), ex = Vec::basis(m, x);
                // [a, r_B(x)b] − ρ_B(l_A(b)x)a − ρ_B(x)(b∘a) + r_B(x)[b,a]
                //  + (ρ_B(x)b)∘a − l_B(ρ_A(b)x)a + b∘(ρ_B(x)a) − r_B(ρ_A(a)x)b
                Vec d = brA(ea, mp.rB[x] * eb) - rep_map(mp.rhoB, mp.lA[b] * ex) * ea -
                        rep_map(mp.rhoB, ex) * circA(eb, ea) + mp.rB[x] * brA(eb, ea) +
                        circA(rep_map(mp.rhoB, ex) * eb, ea) -
                        rep_map(mp.lB, mp.rhoA[b] * ex) * ea +
                        circA(eb, rep_map(mp.rhoB, ex) * ea) -
                        rep_map(mp.rB, mp.rhoA[a] * ex) * eb;
                if (!d.is_zero())
                    diag.add("cross-compatibility-1", {a + 1, b + 1, x + 1},
                             render_vec(d, mp.A.labels()));

                // [a, l_B(x)b] − ρ_B(r_A(b)x)a − [b, l_B(x)a] + ρ_B(r_A(a)x)b
                //  + (ρ_B(x)a)∘b − l_B(ρ_A(a)x)b − (ρ_B(x)b)∘a + l_B(ρ_A(b)x)a − l_B(x)[a,b]
                d = brA(ea, mp.lB[x] * eb) - rep_map(mp.rhoB, mp.rA[b] * ex) * ea -
                    brA(eb, mp.lB[x] * ea) + rep_map(mp.rhoB, mp.rA[a] * ex) * eb +
                    circA(rep_map(mp.rhoB, ex) * ea, eb) -
                    rep_map(mp.lB, mp.rhoA[a] * ex) * eb -
                    circA(rep_map(mp.rhoB, ex) * eb, ea) +
                    rep_map(mp.lB, mp.rhoA[b] * ex) * ea - mp.lB[x] * brA(ea, eb);
                if (!d.is_zero())
                    diag.add("cross-compatibility-2", {a + 1, b + 1, x + 1},
                             render_vec(d, mp.A.labels()));
            }

    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                const Vec ea = Vec::basis(n, a), ex = Vec::basis(m, x), ey = Vec::basis(m, y);
                // [y, r_A(a)x] − ρ_A(a)(x∘y) − ρ_A(l_B(x)a)y + (ρ_A(a)x)∘y
                //  − l_A(ρ_B(x)a)y + r_A(a)[x,y] + x∘(ρ_A(a)y) − r_A(ρ_B(y)a)x
                Vec d = brB(ey, mp.rA[a] * ex) - mp.rhoA[a] * circB(ex, ey) -
                        rep_map(mp.rhoA, mp.lB[x] * ea) * ey +
                        circB(mp.rhoA[a] * ex, ey) - rep_map(mp.lA, mp.rhoB[x] * ea) * ey +
                        mp.rA[a] * brB(ex, ey) + circB(ex, mp.rhoA[a] * ey) -
                        rep_map(mp.rA, mp.rhoB[y] * ea) * ex;
                if (!d.is_zero())
                    diag.add("cross-compatibility-3", {a + 1, x + 1, y + 1},
                             render_vec(d, mp.B.labels()));

                // [x, l_A(a)y] − ρ_A(r_B(y)a)x − [y, l_A(a)x] + ρ_A(r_B(x)a)y
                //  + (ρ_A(a)x)∘y − l_A(ρ_B(x)a)y − (ρ_A(a)y)∘x + l_A(ρ_B(y)a)x − l_A(a)[x,y]
                d = brB(ex, mp.lA[a] * ey) - rep_map(mp.rhoA, mp.rB[y] * ea) * ex -
                    brB(ey, mp.lA[a] * ex) + rep_map(mp.rhoA, mp.rB[x] * ea) * ey +
                    circB(mp.rhoA[a] * ex, ey) - rep_map(mp.lA, mp.rhoB[x] * ea) * ey -
                    circB(mp.rhoA[a] * ey, ex) + rep_map(mp.lA, mp.rhoB[y] * ea) * ex -
                    mp.lA[a] * brB(ex, ey);
                if (!d.is_zero())
                    diag.add("cross-compatibility-4", {a + 1, x + 1, y + 1},
                             render_vec(d, mp.B.labels()));
            }

    if (diag.passed != rep.passed)
        rep.add("oracle-disagreement", {},
                rep.passed ? "diagnostics failed but the double passes the GD check"
                           : "diagnostics passed but the double fails the GD check");
    if (!diag.passed) rep.merge(diag);
    return rep;
}

BilinearForm BilinearForm::identity(int n) {
    BilinearForm f(n);
    f.gram = Mat::identity(n);
    return f;
}

BilinearForm BilinearForm::standard_hyperbolic(int n) {
    BilinearForm f(2 * n);
    for (int i = 0; i < n; ++i) {
        f.gram.at(i, n + i) = MPoly(1);
        f.gram.at(n + i, i) = MPoly(1);
    }
    return f;
}

MPoly BilinearForm::apply(const Vec& u, const Vec& v) const {
    if (u.dim != dim || v.dim != dim) throw input_error("bilinear form dimension mismatch");
    MPoly s;
    for (int i = 0; i < dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j].is_zero() || gram.at(i, j).is_zero()) continue;
            s += u[i] * gram.at(i, j) * v[j];
        }
    }
    return s;
}

AxiomReport check_quadratic_gd(const AlgebraStructure& alg, const BilinearForm& form) {
    if (form.dim != alg.dim()) throw input_error("dimension mismatch in check_quadratic_gd");
    const int n = alg.dim();
    AxiomReport rep;
    if (form.gram != form.gram.transpose()) rep.add("form-symmetry", {}, "gram matrix not symmetric");
    if (determinant(form.gram) == 0) rep.add("form-nondegeneracy", {}, "determinant is zero");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec a = Vec::basis(n, i), b = Vec::basis(n, j), c = Vec::basis(n, k);
                // (a∘b, c) = −(b, a⋆c)
                const MPoly nov = form.apply(evaluate(alg, ProductKind::Circ, a, b), c) +
                                  form.apply(b, evaluate(alg, ProductKind::Star, a, c));
                if (!nov.is_zero())
                    rep.add("novikov-invariance", {i + 1, j + 1, k + 1}, render_poly(nov));
                // ([a,b], c) = (a, [b,c])
                const MPoly lie = form.apply(evaluate(alg, ProductKind::Bracket, a, b), c) -
                                  form.apply(a, evaluate(alg, ProductKind::Bracket, b, c));
                if (!lie.is_zero())
                    rep.add("lie-invariance", {i + 1, j + 1, k + 1}, render_poly(lie));
            }
    return rep;
}

MatchedPairData standard_dual_matched_pair(const BialgebraData& d) {
    const int n = d.dim();
    MatchedPairData mp;
    mp.A = d.alg;
    mp.B = dualize_coalgebra(d.co);
    const Representation dualA = dual_representation(adjoint_representation(mp.A));
    const Representation dualB = dual_representation(adjoint_representation(mp.B));
    mp.lA.resize(n);
    mp.rA.resize(n);
    mp.rhoA.resize(n);
    mp.lB.resize(n);
    mp.rB.resize(n);
    mp.rhoB.resize(n);
    for (int i = 0; i < n; ++i) {
        mp.lA[i] = dualA.l[i];    // L⋆*(e_i)
        mp.rA[i] = dualA.r[i];    // −R∘*(e_i)
        mp.rhoA[i] = dualA.rho[i];  // ad*(e_i)
        mp.lB[i] = dualB.l[i];
        mp.rB[i] = dualB.r[i];
        mp.rhoB[i] = dualB.rho[i];
    }
    return mp;
}

ManinTripleResult build_standard_manin(const BialgebraData& d) {
    ManinTripleResult res;
    res.pair = standard_dual_matched_pair(d);
    res.double_alg = build_double(res.pair);
    res.form = BilinearForm::standard_hyperbolic(d.dim());
    res.report.merge(check_algebra(res.double_alg, AlgebraLaw::Gd), "double");
    res.report.merge(check_quadratic_gd(res.double_alg, res.form), "form");
    return res;
}

}  // namespace gdlab
