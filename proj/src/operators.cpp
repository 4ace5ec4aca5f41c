#include "gdlab/operators.hpp"

namespace gdlab {

Representation::Representation(int n, int m) : alg_dim(n), rep_dim(m) {
    if (n <= 0 || m <= 0) throw input_error("representation dimensions must be positive");
    l.assign(static_cast<std::size_t>(n), Mat(m, m));
    r.assign(static_cast<std::size_t>(n), Mat(m, m));
    rho.assign(static_cast<std::size_t>(n), Mat(m, m));
}

Representation adjoint_representation(const AlgebraStructure& alg) {
    Representation rep(alg.dim(), alg.dim());
    for (int a = 0; a < alg.dim(); ++a) {
        rep.l[a] = operator_matrix(alg, OperatorKind::LeftCirc, a);
        rep.r[a] = operator_matrix(alg, OperatorKind::RightCirc, a);
        rep.rho[a] = operator_matrix(alg, OperatorKind::Ad, a);
    }
    return rep;
}

Mat rep_map(const std::vector<Mat>& maps, const Vec& a) {
    if (maps.empty() || static_cast<int>(maps.size()) != a.dim)
        throw input_error("dimension mismatch in rep_map");
    Mat m(maps[0].rows, maps[0].cols);
    for (int i = 0; i < a.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t t = 0; t < m.e.size(); ++t) m.e[t] += a[i] * maps[i].e[t];
    }
    return m;
}

namespace {

void report_matrix_defect(AxiomReport& rep, const std::string& axiom, int a, int b,
                          const Mat& defect, const std::vector<std::string>& vlabels) {
    if (defect.is_zero()) return;
    for (int v = 0; v < defect.cols; ++v) {
        Vec col(defect.rows);
        for (int i = 0; i < defect.rows; ++i) col[i] = defect.at(i, v);
        if (!col.is_zero()) {
            std::vector<int> witness = b >= 0 ? std::vector<int>{a + 1, b + 1, v + 1}
                                              : std::vector<int>{a + 1, v + 1};
            rep.add(axiom, std::move(witness), render_vec(col, vlabels));
        }
    }
}

void check_novikov_rep(const AlgebraStructure& alg, const Representation& rep,
                       AxiomReport& out) {
    const int n = alg.dim();
    const auto vlabels = default_labels(rep.rep_dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b);
            const Vec ab = evaluate(alg, ProductKind::Circ, ea, eb);
            const Vec ba = evaluate(alg, ProductKind::Circ, eb, ea);
            // l(a∘b−b∘a) = [l(a), l(b)]
            report_matrix_defect(out, "module-left-symmetry", a, b,
                                 rep_map(rep.l, ab - ba) -
                                     (rep.l[a] * rep.l[b] - rep.l[b] * rep.l[a]),
                                 vlabels);
            // [l(a), r(b)] = r(a∘b) − r(b)r(a)
            report_matrix_defect(out, "module-mixed-symmetry", a, b,
                                 rep.l[a] * rep.r[b] - rep.r[b] * rep.l[a] -
                                     rep_map(rep.r, ab) + rep.r[b] * rep.r[a],
                                 vlabels);
            // l(a∘b) = r(b)l(a)
            report_matrix_defect(out, "module-right-commutativity-1", a, b,
                                 rep_map(rep.l, ab) - rep.r[b] * rep.l[a], vlabels);
            // r(a)r(b) = r(b)r(a)
            report_matrix_defect(out, "module-right-commutativity-2", a, b,
                                 rep.r[a] * rep.r[b] - rep.r[b] * rep.r[a], vlabels);
        }
}

void check_lie_rep(const AlgebraStructure& alg, const Representation& rep, AxiomReport& out) {
    const int n = alg.dim();
    const auto vlabels = default_labels(rep.rep_dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Vec ab = evaluate(alg, ProductKind::Bracket, Vec::basis(n, a),
                                    Vec::basis(n, b));
            report_matrix_defect(out, "module-jacobi", a, b,
                                 rep_map(rep.rho, ab) -
                                     (rep.rho[a] * rep.rho[b] - rep.rho[b] * rep.rho[a]),
                                 vlabels);
        }
}

void check_gd_rep_compat(const AlgebraStructure& alg, const Representation& rep,
                         AxiomReport& out) {
    const int n = alg.dim();
    const auto vlabels = default_labels(rep.rep_dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b);
            const Vec ba = evaluate(alg, ProductKind::Circ, eb, ea);
            const Vec br_ba = evaluate(alg, ProductKind::Bracket, eb, ea);
            const Vec br_ab = evaluate(alg, ProductKind::Bracket, ea, eb);
            // ρ(a)l(b) + ρ(b∘a) + l([b,a]) − r(a)ρ(b) − l(b)ρ(a) = 0
            report_matrix_defect(out, "module-gd-compatibility-1", a, b,
                                 rep.rho[a] * rep.l[b] + rep_map(rep.rho, ba) +
                                     rep_map(rep.l, br_ba) - rep.r[a] * rep.rho[b] -
                                     rep.l[b] * rep.rho[a],
                                 vlabels);
            // ρ(a)r(b) − ρ(b)r(a) − r(b)ρ(a) + r(a)ρ(b) − r([a,b]) = 0
            report_matrix_defect(out, "module-gd-compatibility-2", a, b,
                                 rep.rho[a] * rep.r[b] - rep.rho[b] * rep.r[a] -
                                     rep.r[b] * rep.rho[a] + rep.r[a] * rep.rho[b] -
                                     rep_map(rep.r, br_ab),
                                 vlabels);
        }
}

}  // namespace

AxiomReport check_representation(const AlgebraStructure& alg, const Representation& rep,
                                 RepLaw law) {
    if (rep.alg_dim != alg.dim()) throw input_error("dimension mismatch in check_representation");
    AxiomReport out;
    switch (law) {
        case RepLaw::Novikov: check_novikov_rep(alg, rep, out); break;
        case RepLaw::Lie: check_lie_rep(alg, rep, out); break;
        case RepLaw::Gd:
            check_novikov_rep(alg, rep, out);
            check_lie_rep(alg, rep, out);
            check_gd_rep_compat(alg, rep, out);
            break;
    }
    return out;
}

AlgebraStructure semidirect(const AlgebraStructure& alg, const Representation& rep,
                            const std::vector<std::string>& v_labels) {
    if (rep.alg_dim != alg.dim()) throw input_error("dimension mismatch in semidirect");
    const int n = alg.dim(), m = rep.rep_dim;
    AlgebraStructure s(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                s.set_circ(i, j, k, alg.circ(i, j, k));
                s.set_bracket(i, j, k, alg.bracket(i, j, k));
            }
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                // a•v = l(a)v, v•a = r(a)v, [a,v] = ρ(a)v, [v,a] = −ρ(a)v
                s.set_circ(a, n + q, n + p, rep.l[a].at(p, q).constant_value());
                s.set_circ(n + q, a, n + p, rep.r[a].at(p, q).constant_value());
                s.set_bracket(a, n + q, n + p, rep.rho[a].at(p, q).constant_value());
                s.set_bracket(n + q, a, n + p, -rep.rho[a].at(p, q).constant_value());
            }
    std::vector<std::string> labels = alg.labels();
    const auto vl = v_labels.empty() ? [m] {
        std::vector<std::string> v;
        for (int i = 0; i < m; ++i) v.push_back("v" + std::to_string(i + 1));
        return v;
    }()
                                     : v_labels;
    if (static_cast<int>(vl.size()) != m) throw input_error("semidirect label count mismatch");
    labels.insert(labels.end(), vl.begin(), vl.end());
    s.set_labels(std::move(labels));
    return s;
}

Representation dual_representation(const Representation& rep) {
    Representation d(rep.alg_dim, rep.rep_dim);
    for (int a = 0; a < rep.alg_dim; ++a) {
        d.l[a] = -(rep.l[a].transpose() + rep.r[a].transpose());
        d.r[a] = rep.r[a].transpose();
        d.rho[a] = -rep.rho[a].transpose();
    }
    return d;
}

AxiomReport check_o_operator(const AlgebraStructure& alg, const Representation& rep,
                             const Mat& T) {
    if (rep.alg_dim != alg.dim() || T.rows != alg.dim() || T.cols != rep.rep_dim)
        throw input_error("dimension mismatch in check_o_operator");
    const int m = rep.rep_dim;
    auto column = [&](int j) {
        Vec v(T.rows);
        for (int i = 0; i < T.rows; ++i) v[i] = T.at(i, j);
        return v;
    };
    AxiomReport out;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const Vec Tu = column(p), Tv = column(q);
            // T(u)∘T(v) = T(l(Tu)v + r(Tv)u)
            const Vec d1 = evaluate(alg, ProductKind::Circ, Tu, Tv) -
                           T * (rep_map(rep.l, Tu) * Vec::basis(m, q) +
                                rep_map(rep.r, Tv) * Vec::basis(m, p));
            if (!d1.is_zero())
                out.add("o-operator-circ", {p + 1, q + 1}, render_vec(d1, alg.labels()));
            // [T(u),T(v)] = T(ρ(Tu)v − ρ(Tv)u)
            const Vec d2 = evaluate(alg, ProductKind::Bracket, Tu, Tv) -
                           T * (rep_map(rep.rho, Tu) * Vec::basis(m, q) -
                                rep_map(rep.rho, Tv) * Vec::basis(m, p));
            if (!d2.is_zero())
                out.add("o-operator-bracket", {p + 1, q + 1}, render_vec(d2, alg.labels()));
        }
    return out;
}

OOperatorDouble o_operator_to_r(const AlgebraStructure& alg, const Representation& rep,
                                const Mat& T, const std::vector<std::string>& v_labels) {
    if (T.rows != alg.dim() || T.cols != rep.rep_dim)
        throw input_error("dimension mismatch in o_operator_to_r");
    const int n = alg.dim(), m = rep.rep_dim;
    std::vector<std::string> starred;
    const auto base = v_labels.empty() ? default_labels(m) : v_labels;
    for (const auto& l : base) starred.push_back(l + "*");
    AlgebraStructure dbl = semidirect(alg, dual_representation(rep), starred);

    RMatrix r(n + m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) {
            const Rat c = T.at(k, i).constant_value();
            if (c == 0) continue;
            // r_T = Σ_i T(v_i) ⊗ v_i*
            r.set(k, n + i, r.get(k, n + i) + c);
            r.set(n + i, k, r.get(n + i, k) - c);
        }
    return {std::move(dbl), std::move(r)};
}

PreGDStructure::PreGDStructure(int n)
    : dim(n),
      lhd(static_cast<std::size_t>(n) * n * n),
      rhd(static_cast<std::size_t>(n) * n * n),
      diamond(static_cast<std::size_t>(n) * n * n) {
    if (n <= 0) throw input_error("pre-GD dimension must be positive");
}

Vec PreGDStructure::product(const std::vector<Rat>& table, int i, int j) const {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) {
        const Rat& c = table[idx(i, j, k)];
        if (c != 0) v[k] = MPoly(c);
    }
    return v;
}

namespace {

// Bilinear extension of a pre-GD table.
Vec ext(const PreGDStructure& p, const std::vector<Rat>& table, const Vec& a, const Vec& b) {
    Vec r(p.dim);
    for (int i = 0; i < p.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < p.dim; ++j) {
            if (b[j].is_zero()) continue;
            const MPoly c = a[i] * b[j];
            for (int k = 0; k < p.dim; ++k) {
                const Rat& t = table[p.idx(i, j, k)];
                if (t != 0) r[k] += c * MPoly(t);
            }
        }
    }
    return r;
}

}  // namespace

AxiomReport check_pre_gd(const PreGDStructure& p) {
    const int n = p.dim;
    const auto labels = default_labels(n);
    auto lhd = [&](const Vec& a, const Vec& b) { return ext(p, p.lhd, a, b); };
    auto rhd = [&](const Vec& a, const Vec& b) { return ext(p, p.rhd, a, b); };
    auto dia = [&](const Vec& a, const Vec& b) { return ext(p, p.diamond, a, b); };

    AxiomReport out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec a = Vec::basis(n, i), b = Vec::basis(n, j), c = Vec::basis(n, k);
                const std::vector<int> w = {i + 1, j + 1, k + 1};

                // a⊳(b⊳c) = (a⊳b + a⊲b)⊳c + b⊳(a⊳c) − (b⊳a + b⊲a)⊳c
                Vec d = rhd(a, rhd(b, c)) - rhd(rhd(a, b) + lhd(a, b), c) - rhd(b, rhd(a, c)) +
                        rhd(rhd(b, a) + lhd(b, a), c);
                if (!d.is_zero()) out.add("pre-left-symmetry", w, render_vec(d, labels));

                // a⊳(b⊲c) = (a⊳b)⊲c + b⊲(a⊲c + a⊳c) − (b⊲a)⊲c
                d = rhd(a, lhd(b, c)) - lhd(rhd(a, b), c) - lhd(b, lhd(a, c) + rhd(a, c)) +
                    lhd(lhd(b, a), c);
                if (!d.is_zero()) out.add("pre-mixed-symmetry", w, render_vec(d, labels));

                // (a⊲b + a⊳b)⊳c = (a⊳c)⊲b
                d = rhd(lhd(a, b) + rhd(a, b), c) - lhd(rhd(a, c), b);
                if (!d.is_zero()) out.add("pre-exchange", w, render_vec(d, labels));

                // (a⊲b)⊲c = (a⊲c)⊲b
                d = lhd(lhd(a, b), c) - lhd(lhd(a, c), b);
                if (!d.is_zero())
                    out.add("pre-right-commutativity", w, render_vec(d, labels));

                // ⋄ is left-symmetric
                d = dia(dia(a, b), c) - dia(a, dia(b, c)) - dia(dia(b, a), c) +
                    dia(b, dia(a, c));
                if (!d.is_zero())
                    out.add("diamond-left-symmetry", w, render_vec(d, labels));

                // c⊲(a⋄b − b⋄a) − a⋄(c⊲b) − (b⋄c)⊲a = −b⋄(c⊲a) − (a⋄c)⊲b
                d = lhd(c, dia(a, b) - dia(b, a)) - dia(a, lhd(c, b)) - lhd(dia(b, c), a) +
                    dia(b, lhd(c, a)) + lhd(dia(a, c), b);
                if (!d.is_zero()) out.add("pre-gd-compatibility-1", w, render_vec(d, labels));

                // (a⋄b − b⋄a)⊳c + (a⊲b + a⊳b)⋄c = a⊳(b⋄c) − b⋄(a⊳c) + (a⋄c)⊲b
                d = rhd(dia(a, b) - dia(b, a), c) + dia(lhd(a, b) + rhd(a, b), c) -
                    rhd(a, dia(b, c)) + dia(b, rhd(a, c)) - lhd(dia(a, c), b);
                if (!d.is_zero()) out.add("pre-gd-compatibility-2", w, render_vec(d, labels));
            }
    return out;
}

GdWithRep pregd_to_gd(const PreGDStructure& p) {
    const int n = p.dim;
    AlgebraStructure alg(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                alg.set_circ(i, j, k, p.lhd[p.idx(i, j, k)] + p.rhd[p.idx(i, j, k)]);
                alg.set_bracket(i, j, k, p.diamond[p.idx(i, j, k)] - p.diamond[p.idx(j, i, k)]);
            }
    Representation rep(n, n);
    for (int a = 0; a < n; ++a)
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < n; ++k) {
                rep.l[a].at(k, v) = MPoly(p.rhd[p.idx(a, v, k)]);      // L_⊳(a)v = a⊳v
                rep.r[a].at(k, v) = MPoly(p.lhd[p.idx(v, a, k)]);      // R_⊲(a)v = v⊲a
                rep.rho[a].at(k, v) = MPoly(p.diamond[p.idx(a, v, k)]);  // L_⋄(a)v = a⋄v
            }
    return {std::move(alg), std::move(rep)};
}

namespace {

AlgebraStructure zinbiel_as_algebra(const ZinbielData& z) {
    AlgebraStructure dot(z.dim);
    for (int i = 0; i < z.dim; ++i)
        for (int j = 0; j < z.dim; ++j)
            for (int k = 0; k < z.dim; ++k)
                dot.set_circ(i, j, k,
                             z.dot[(static_cast<std::size_t>(i) * z.dim + j) * z.dim + k]);
    return dot;
}

}  // namespace

AxiomReport check_zinbiel(const ZinbielData& z) {
    if (z.D.rows != z.dim || z.D.cols != z.dim)
        throw input_error("derivation matrix dimension mismatch");
    const AlgebraStructure dot = zinbiel_as_algebra(z);
    const int n = z.dim;
    const auto labels = default_labels(n);
    auto mul = [&](const Vec& a, const Vec& b) { return evaluate(dot, ProductKind::Circ, a, b); };
    AxiomReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Vec a = Vec::basis(n, i), b = Vec::basis(n, j), c = Vec::basis(n, k);
                // a·(b·c) = (b·a + a·b)·c
                const Vec d = mul(a, mul(b, c)) - mul(mul(b, a) + mul(a, b), c);
                if (!d.is_zero())
                    rep.add("zinbiel-identity", {i + 1, j + 1, k + 1}, render_vec(d, labels));
            }
            const Vec a = Vec::basis(n, i), b = Vec::basis(n, j);
            // D(a·b) = D(a)·b + a·D(b)
            const Vec d = z.D * mul(a, b) - mul(z.D * a, b) - mul(a, z.D * b);
            if (!d.is_zero())
                rep.add("derivation-property", {i + 1, j + 1}, render_vec(d, labels));
        }
    return rep;
}

PreGDStructure zinbiel_to_pregd(const ZinbielData& z) {
    const AxiomReport rep = check_zinbiel(z);
    if (!rep.passed)
        throw input_error("zinbiel axiom or derivation property violated: " +
                          rep.violations.front().axiom);
    const AlgebraStructure dot = zinbiel_as_algebra(z);
    const int n = z.dim;
    auto mul = [&](const Vec& a, const Vec& b) { return evaluate(dot, ProductKind::Circ, a, b); };

    PreGDStructure p(n);
    const MPoly xi{z.xi}, kp{z.kparam};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec a = Vec::basis(n, i), b = Vec::basis(n, j);
            // ⊲ and ⊳ are the one-sided products twisted by the shifted map
            // D + ξ·id; ⋄ must use the same shift, under which the ξ-terms
            // cancel — an extra ξ(a·b − b·a) summand violates the mixed
            // compatibility identity whenever ξ ≠ 0.
            const Vec lhd = mul(z.D * b, a) + xi * mul(b, a);
            const Vec rhd = mul(a, z.D * b) + xi * mul(a, b);
            const Vec dia = kp * (mul(a, z.D * b) - mul(z.D * a, b));
            for (int k = 0; k < n; ++k) {
                p.lhd[p.idx(i, j, k)] = lhd[k].constant_value();
                p.rhd[p.idx(i, j, k)] = rhd[k].constant_value();
                p.diamond[p.idx(i, j, k)] = dia[k].constant_value();
            }
        }
    return p;
}

PipelineResult pregd_pipeline(const PreGDStructure& p) {
    if (!check_pre_gd(p).passed) throw input_error("pregd_pipeline requires a pre-GD structure");
    auto [alg, rep] = pregd_to_gd(p);
    auto [dbl, r] = o_operator_to_r(alg, rep, Mat::identity(p.dim), alg.labels());
    const CoalgebraStructure co = coboundary_maps(dbl, r);
    PipelineResult res{std::move(dbl), std::move(r), BialgebraData(), GdybeReport{}, AxiomReport{}};
    res.bialg = BialgebraData(res.double_alg, co);
    res.gdybe = check_gdybe(res.double_alg, res.r);
    res.bialgebra_report = check_bialgebra(res.bialg, BialgebraLaw::Gd);
    return res;
}

}  // namespace gdlab
