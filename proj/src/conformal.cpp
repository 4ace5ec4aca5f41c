#include "gdlab/conformal.hpp"

namespace gdlab {

namespace {

const MPoly kLambda = MPoly::variable(Var::Lambda);
const MPoly kMu = MPoly::variable(Var::Mu);
const MPoly kD = MPoly::variable(Var::D);
const MPoly kD1 = MPoly::variable(Var::D1);
const MPoly kD2 = MPoly::variable(Var::D2);

Vec substitute_vec(const Vec& v, Var var, const MPoly& repl) {
    Vec r(v.dim);
    for (int i = 0; i < v.dim; ++i) r[i] = v[i].substitute(var, repl);
    return r;
}

Vec rename_vec(const Vec& v, Var from, Var to) {
    Vec r(v.dim);
    for (int i = 0; i < v.dim; ++i) r[i] = v[i].rename(from, to);
    return r;
}

Tensor2 substitute_tensor(const Tensor2& t, Var var, const MPoly& repl) {
    Tensor2 r(t.n1, t.n2);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].substitute(var, repl);
    return r;
}

Tensor3 substitute_tensor(const Tensor3& t, Var var, const MPoly& repl) {
    Tensor3 r(t.n1, t.n2, t.n3);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].substitute(var, repl);
    return r;
}

// Shared sesquilinear engine over an arbitrary λ-product table.
Vec table_bracket(const std::vector<Vec>& table, int n, const Vec& x, const Vec& y, Var nu) {
    if (x.dim != n || y.dim != n) throw input_error("dimension mismatch in λ-bracket");
    const MPoly nu_var = MPoly::variable(nu);
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        const MPoly px = x[i].substitute(Var::D, -nu_var);
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const MPoly scale = px * y[j].substitute(Var::D, nu_var + kD);
            const Vec& entry = table[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < n; ++k) {
                if (entry[k].is_zero()) continue;
                MPoly t = entry[k];
                if (nu != Var::Lambda) t = t.rename(Var::Lambda, nu);
                out[k] += scale * t;
            }
        }
    }
    return out;
}

// Skew-symmetry and Jacobi for an arbitrary table; axiom ids supplied by the
// caller so the left-symmetric check can reuse the plumbing.
void check_jacobi_family(const std::vector<Vec>& table, int n,
                         const std::vector<std::string>& labels, AxiomReport& rep) {
    auto entry = [&](int i, int j) -> const Vec& {
        return table[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec rhs(n);
            for (int k = 0; k < n; ++k)
                rhs[k] = entry(j, i)[k].rename(Var::Lambda, Var::Mu).substitute(
                    Var::Mu, -kLambda - kD);
            const Vec defect = entry(i, j) + rhs;
            if (!defect.is_zero())
                rep.add("conformal-skew", {i + 1, j + 1}, render_vec(defect, labels));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // [a_λ [b_μ c]]
                const Vec inner = rename_vec(entry(j, k), Var::Lambda, Var::Mu);
                const Vec lhs = table_bracket(table, n, Vec::basis(n, i), inner, Var::Lambda);
                // [[a_λ b]_{λ+μ} c]
                Vec r1 = table_bracket(table, n, entry(i, j), Vec::basis(n, k), Var::Mu);
                r1 = substitute_vec(r1, Var::Mu, kLambda + kMu);
                // [b_μ [a_λ c]]
                const Vec r2 =
                    table_bracket(table, n, Vec::basis(n, j), entry(i, k), Var::Mu);
                const Vec defect = lhs - r1 - r2;
                if (!defect.is_zero())
                    rep.add("conformal-jacobi", {i + 1, j + 1, k + 1},
                            render_vec(defect, labels));
            }
}

}  // namespace

ConformalStructure::ConformalStructure(int dim)
    : dim_(dim),
      bracket_(static_cast<std::size_t>(dim) * dim, Vec(dim)),
      labels_(default_labels(dim)) {
    if (dim <= 0) throw input_error("conformal rank must be positive");
}

void ConformalStructure::set_bracket_entry(int i, int j, Vec v) {
    if (v.dim != dim_) throw input_error("bracket entry dimension mismatch");
    bracket_[idx(i, j)] = std::move(v);
}

const std::vector<Tensor2>& ConformalStructure::cobracket() const {
    if (!cobracket_) throw input_error("conformal structure has no cobracket");
    return *cobracket_;
}

void ConformalStructure::set_cobracket(std::vector<Tensor2> tables) {
    if (static_cast<int>(tables.size()) != dim_)
        throw input_error("cobracket table count mismatch");
    for (const auto& t : tables)
        if (t.n1 != dim_ || t.n2 != dim_) throw input_error("cobracket entry dimension mismatch");
    cobracket_ = std::move(tables);
}

void ConformalStructure::set_labels(std::vector<std::string> l) {
    if (static_cast<int>(l.size()) != dim_) throw input_error("label count mismatch");
    labels_ = std::move(l);
}

ConformalStructure affinize(const AlgebraStructure& alg) {
    const int n = alg.dim();
    ConformalStructure cs(n);
    cs.set_labels(alg.labels());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v(n);
            const Vec ji = alg.basis_product(ProductKind::Circ, j, i);
            const Vec star = alg.basis_product(ProductKind::Star, i, j);
            const Vec br = alg.basis_product(ProductKind::Bracket, i, j);
            for (int k = 0; k < n; ++k) v[k] = kD * ji[k] + kLambda * star[k] + br[k];
            cs.set_bracket_entry(i, j, std::move(v));
        }
    return cs;
}

Vec conformal_bracket(const ConformalStructure& cs, const Vec& x, const Vec& y, Var nu) {
    std::vector<Vec> table;
    table.reserve(static_cast<std::size_t>(cs.dim()) * cs.dim());
    for (int i = 0; i < cs.dim(); ++i)
        for (int j = 0; j < cs.dim(); ++j) table.push_back(cs.bracket_entry(i, j));
    return table_bracket(table, cs.dim(), x, y, nu);
}

Vec lambda_bracket(const ConformalStructure& cs, const Vec& x, const Vec& y) {
    return conformal_bracket(cs, x, y, Var::Lambda);
}

AxiomReport check_conformal_algebra(const ConformalStructure& cs) {
    std::vector<Vec> table;
    for (int i = 0; i < cs.dim(); ++i)
        for (int j = 0; j < cs.dim(); ++j) table.push_back(cs.bracket_entry(i, j));
    AxiomReport rep;
    check_jacobi_family(table, cs.dim(), cs.labels(), rep);
    return rep;
}

namespace {

using DeltaFn = std::function<Tensor2(int)>;

// (id⊗δ) with the k[∂]-module shift: the second slot's ∂ becomes ∂2+∂3 and
// the expanded factor lands in slots 2,3.
Tensor3 conformal_expand_right(const Tensor2& t, const DeltaFn& delta) {
    const int n = t.n1;
    Tensor3 out(n, n, n);
    std::array<Var, kNumVars> shift;
    for (int v = 0; v < kNumVars; ++v) shift[v] = static_cast<Var>(v);
    shift[static_cast<int>(Var::D1)] = Var::D2;
    shift[static_cast<int>(Var::D2)] = Var::D3;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MPoly& c = t.at(i, j);
            if (c.is_zero()) continue;
            const MPoly shifted = c.substitute(Var::D2, kD2 + MPoly::variable(Var::D3));
            const Tensor2 dj = delta(j);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (dj.at(p, q).is_zero()) continue;
                    out.at(i, p, q) += shifted * dj.at(p, q).rename(shift);
                }
        }
    return out;
}

// (δ⊗id): the first slot's ∂ becomes ∂1+∂2, the old second slot moves to ∂3.
Tensor3 conformal_expand_left(const Tensor2& t, const DeltaFn& delta) {
    const int n = t.n1;
    Tensor3 out(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MPoly& c = t.at(i, j);
            if (c.is_zero()) continue;
            const MPoly shifted =
                c.rename(Var::D2, Var::D3).substitute(Var::D1, kD1 + kD2);
            const Tensor2 di = delta(i);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (di.at(p, q).is_zero()) continue;
                    out.at(p, q, j) += shifted * di.at(p, q);
                }
        }
    return out;
}

// a_ν (x⊗y) = [a_ν x]⊗y + x⊗[a_ν y] with the slot's ∂-variable carried
// through the sesquilinear rule.
Tensor2 lambda_action_on_tensor(const ConformalStructure& cs, int a, const Tensor2& t, Var nu) {
    const int n = cs.dim();
    Tensor2 out(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const MPoly& c = t.at(p, q);
            if (c.is_zero()) continue;
            const MPoly nu_var = MPoly::variable(nu);
            // slot 1
            const MPoly c1 = c.substitute(Var::D1, nu_var + kD1);
            const Vec& bap = cs.bracket_entry(a, p);
            for (int s = 0; s < n; ++s) {
                if (bap[s].is_zero()) continue;
                MPoly val = bap[s].rename(Var::D, Var::D1);
                if (nu != Var::Lambda) val = val.rename(Var::Lambda, nu);
                out.at(s, q) += c1 * val;
            }
            // slot 2
            const MPoly c2 = c.substitute(Var::D2, nu_var + kD2);
            const Vec& baq = cs.bracket_entry(a, q);
            for (int s = 0; s < n; ++s) {
                if (baq[s].is_zero()) continue;
                MPoly val = baq[s].rename(Var::D, Var::D2);
                if (nu != Var::Lambda) val = val.rename(Var::Lambda, nu);
                out.at(p, s) += c2 * val;
            }
        }
    return out;
}

}  // namespace

CobracketResult build_cobracket(const ConformalStructure& cs, const CoalgebraStructure& co) {
    if (co.dim() != cs.dim()) throw input_error("dimension mismatch in build_cobracket");
    const int n = cs.dim();
    std::vector<Tensor2> tables;
    tables.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Tensor2 dpart(n, n);
        const Tensor2 Delta = co.co_of_basis(CoMap::Delta, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!Delta.at(i, j).is_zero()) dpart.at(i, j) = kD1 * Delta.at(i, j);
        tables.push_back(co.co_of_basis(CoMap::Delta0, k) + dpart - tensor_flip(dpart, true));
    }

    CobracketResult res{cs, AxiomReport{}};
    res.cs.set_cobracket(tables);

    const DeltaFn delta = [&](int j) { return tables[static_cast<std::size_t>(j)]; };
    for (int k = 0; k < n; ++k) {
        const Tensor2& dk = tables[static_cast<std::size_t>(k)];
        const Tensor2 anti = dk + tensor_flip(dk, true);
        if (!anti.is_zero())
            res.report.add("conformal-co-antisymmetry", {k + 1},
                           render_tensor2(anti, cs.labels()));
        const Tensor3 idd = conformal_expand_right(dk, delta);
        const Tensor3 defect =
            idd - tensor_permute(idd, {1, 0, 2}, true) - conformal_expand_left(dk, delta);
        if (!defect.is_zero())
            res.report.add("conformal-co-jacobi", {k + 1}, render_tensor3(defect, cs.labels()));
    }
    return res;
}

AxiomReport check_conformal_bialgebra(const ConformalStructure& cs) {
    if (!cs.has_cobracket()) throw input_error("check_conformal_bialgebra requires a cobracket");
    const int n = cs.dim();
    AxiomReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Tensor2 lhs_a = lambda_action_on_tensor(cs, i, cs.cobracket_entry(j),
                                                          Var::Lambda);
            Tensor2 lhs_b = lambda_action_on_tensor(cs, j, cs.cobracket_entry(i), Var::Mu);
            lhs_b = substitute_tensor(lhs_b, Var::Mu, -kLambda - kD1 - kD2);
            Tensor2 rhs(n, n);
            const Vec& br = cs.bracket_entry(i, j);
            for (int s = 0; s < n; ++s) {
                if (br[s].is_zero()) continue;
                const MPoly h = br[s].substitute(Var::D, kD1 + kD2);
                rhs += h * cs.cobracket_entry(s);
            }
            const Tensor2 defect = lhs_a - lhs_b - rhs;
            if (!defect.is_zero())
                rep.add("conformal-cocycle", {i + 1, j + 1}, render_tensor2(defect, cs.labels()));
        }
    return rep;
}

Tensor3 ccybe_defect(const ConformalStructure& cs, const RMatrix& r) {
    if (r.dim != cs.dim()) throw input_error("dimension mismatch in ccybe_defect");
    const int n = cs.dim();
    Tensor3 out(n, n, n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1) {
            const MPoly& c1 = r.t.at(i1, j1);
            if (c1.is_zero()) continue;
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    const MPoly& c2 = r.t.at(i2, j2);
                    if (c2.is_zero()) continue;
                    const MPoly c = c1 * c2;
                    // [x_α μ x_β] ⊗ y_α ⊗ y_β with ∂→∂1, μ→∂2
                    const Vec& t1 = cs.bracket_entry(i1, i2);
                    for (int s = 0; s < n; ++s)
                        if (!t1[s].is_zero())
                            out.at(s, j1, j2) +=
                                c * t1[s].rename(Var::D, Var::D1).rename(Var::Lambda, Var::D2);
                    // −x_α ⊗ [x_β μ y_α] ⊗ y_β with ∂→∂2, μ→∂3
                    const Vec& t2 = cs.bracket_entry(i2, j1);
                    for (int s = 0; s < n; ++s)
                        if (!t2[s].is_zero())
                            out.at(i1, s, j2) -=
                                c * t2[s].rename(Var::D, Var::D2).rename(Var::Lambda, Var::D3);
                    // −x_α ⊗ x_β ⊗ [y_β μ y_α] with ∂→∂3, μ→∂2
                    const Vec& t3 = cs.bracket_entry(j2, j1);
                    for (int s = 0; s < n; ++s)
                        if (!t3[s].is_zero())
                            out.at(i1, i2, s) -=
                                c * t3[s].rename(Var::D, Var::D3).rename(Var::Lambda, Var::D2);
                }
        }
    return substitute_tensor(out, Var::D3, -kD1 - kD2);
}

std::vector<Tensor2> coboundary_conformal(const ConformalStructure& cs, const RMatrix& r) {
    if (r.dim != cs.dim()) throw input_error("dimension mismatch in coboundary_conformal");
    if (!r.is_skew()) throw input_error("coboundary_conformal requires skew-symmetric r");
    const int n = cs.dim();
    std::vector<Tensor2> tables;
    for (int a = 0; a < n; ++a) {
        Tensor2 t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const MPoly& c = r.t.at(i, j);
                if (c.is_zero()) continue;
                const Vec& bi = cs.bracket_entry(a, i);
                for (int s = 0; s < n; ++s)
                    if (!bi[s].is_zero()) t.at(s, j) += c * bi[s].rename(Var::D, Var::D1);
                const Vec& bj = cs.bracket_entry(a, j);
                for (int s = 0; s < n; ++s)
                    if (!bj[s].is_zero()) t.at(i, s) += c * bj[s].rename(Var::D, Var::D2);
            }
        tables.push_back(substitute_tensor(t, Var::Lambda, -kD1 - kD2));
    }
    return tables;
}

ConformalRepResult conformal_rep(const AlgebraStructure& alg, const Representation& rep) {
    if (rep.alg_dim != alg.dim()) throw input_error("dimension mismatch in conformal_rep");
    ConformalRepResult res;
    res.rep.alg_dim = rep.alg_dim;
    res.rep.rep_dim = rep.rep_dim;
    for (int a = 0; a < rep.alg_dim; ++a) {
        Mat m(rep.rep_dim, rep.rep_dim);
        for (int p = 0; p < rep.rep_dim; ++p)
            for (int q = 0; q < rep.rep_dim; ++q)
                m.at(p, q) = kD * rep.r[a].at(p, q) +
                             kLambda * (rep.l[a].at(p, q) + rep.r[a].at(p, q)) +
                             rep.rho[a].at(p, q);
        res.rep.action.push_back(std::move(m));
    }
    res.report = check_conformal_algebra(affinize(semidirect(alg, rep)));
    return res;
}

AxiomReport check_conformal_o_operator(const ConformalStructure& cs, const ConformalRep& crep,
                                       const Mat& T) {
    if (crep.alg_dim != cs.dim() || T.rows != cs.dim() || T.cols != crep.rep_dim)
        throw input_error("dimension mismatch in check_conformal_o_operator");
    for (const auto& c : T.e)
        if (!c.is_constant()) throw input_error("conformal O-operator lift requires constant T");
    const int m = crep.rep_dim;
    auto column = [&](int j) {
        Vec v(T.rows);
        for (int i = 0; i < T.rows; ++i) v[i] = T.at(i, j);
        return v;
    };
    AxiomReport rep;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const Vec Tu = column(p), Tv = column(q);
            const Vec lhs = conformal_bracket(cs, Tu, Tv, Var::Lambda);
            const Vec w1 = rep_map(crep.action, Tu) * Vec::basis(m, q);
            Vec w2 = rename_vec(rep_map(crep.action, Tv) * Vec::basis(m, p), Var::Lambda,
                                Var::Mu);
            w2 = substitute_vec(w2, Var::Mu, -kLambda - kD);
            const Vec defect = lhs - T * (w1 - w2);
            if (!defect.is_zero())
                rep.add("conformal-o-operator", {p + 1, q + 1}, render_vec(defect, cs.labels()));
        }
    return rep;
}

LeftSymmetricConformal left_symmetric_conformal(const PreGDStructure& p) {
    const int n = p.dim;
    const auto labels = default_labels(n);
    LeftSymmetricConformal res;
    res.table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v(n);
            const Vec ji_lhd = p.product(p.lhd, j, i);  // b⊲a
            const Vec ij_rhd = p.product(p.rhd, i, j);  // a⊳b
            const Vec ij_dia = p.product(p.diamond, i, j);
            for (int k = 0; k < n; ++k)
                v[k] = kD * ji_lhd[k] + kLambda * (ij_rhd[k] + ji_lhd[k]) + ij_dia[k];
            res.table.push_back(std::move(v));
        }

    auto entry = [&](int i, int j) -> const Vec& {
        return res.table[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // (a_λ b)_{λ+μ} c − a_λ (b_μ c) = (b_μ a)_{λ+μ} c − b_μ (a_λ c)
                Vec A = table_bracket(res.table, n, entry(i, j), Vec::basis(n, k), Var::Mu);
                A = substitute_vec(A, Var::Mu, kLambda + kMu);
                const Vec B = table_bracket(res.table, n, Vec::basis(n, i),
                                            rename_vec(entry(j, k), Var::Lambda, Var::Mu),
                                            Var::Lambda);
                Vec C = table_bracket(res.table, n,
                                      rename_vec(entry(j, i), Var::Lambda, Var::Mu),
                                      Vec::basis(n, k), Var::Lambda);
                C = substitute_vec(C, Var::Lambda, kLambda + kMu);
                const Vec D = table_bracket(res.table, n, Vec::basis(n, j), entry(i, k),
                                            Var::Mu);
                const Vec defect = A - B - C + D;
                if (!defect.is_zero())
                    res.report.add("left-symmetric-identity", {i + 1, j + 1, k + 1},
                                   render_vec(defect, labels));
            }

    // Sub-adjacent bracket must agree with the affinized associated algebra.
    const ConformalStructure aff = affinize(pregd_to_gd(p).alg);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec sub(n);
            for (int k = 0; k < n; ++k)
                sub[k] = entry(i, j)[k] - entry(j, i)[k]
                                              .rename(Var::Lambda, Var::Mu)
                                              .substitute(Var::Mu, -kLambda - kD);
            const Vec defect = sub - aff.bracket_entry(i, j);
            if (!defect.is_zero())
                res.report.add("sub-adjacent-mismatch", {i + 1, j + 1},
                               render_vec(defect, labels));
        }
    return res;
}

AxiomReport check_conformal_bilinear(const ConformalStructure& cs, const BilinearForm& form) {
    if (form.dim != cs.dim()) throw input_error("dimension mismatch in check_conformal_bilinear");
    const int n = cs.dim();
    AxiomReport rep;
    if (form.gram != form.gram.transpose())
        rep.add("conformal-form-symmetry", {}, "gram matrix not symmetric");
    if (determinant(form.gram) == 0)
        rep.add("conformal-form-nondegeneracy", {}, "determinant is zero");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // ⟨[a_μ b], c⟩_λ : ∂ in the first argument evaluates to −λ
                MPoly lhs;
                const Vec& vij = cs.bracket_entry(i, j);
                for (int s = 0; s < n; ++s) {
                    if (vij[s].is_zero() || form.gram.at(s, k).is_zero()) continue;
                    lhs += vij[s].rename(Var::Lambda, Var::Mu).substitute(Var::D, -kLambda) *
                           form.gram.at(s, k);
                }
                // ⟨a, [b_{λ−∂} c]⟩_μ : ∂ in the second argument evaluates to μ
                MPoly rhs;
                const Vec& vjk = cs.bracket_entry(j, k);
                for (int s = 0; s < n; ++s) {
                    if (vjk[s].is_zero() || form.gram.at(i, s).is_zero()) continue;
                    rhs += vjk[s].substitute(Var::Lambda, kLambda - kD).substitute(Var::D, kMu) *
                           form.gram.at(i, s);
                }
                const MPoly defect = lhs - rhs;
                if (!defect.is_zero())
                    rep.add("conformal-invariance", {i + 1, j + 1, k + 1}, render_poly(defect));
            }
    return rep;
}

std::string render_lambda_table(const ConformalStructure& cs) {
    std::string out;
    bool any = false;
    for (int i = 0; i < cs.dim(); ++i)
        for (int j = 0; j < cs.dim(); ++j) {
            const Vec& v = cs.bracket_entry(i, j);
            if (v.is_zero()) continue;
            any = true;
            out += render_lambda_line(cs.labels()[static_cast<std::size_t>(i)],
                                      cs.labels()[static_cast<std::size_t>(j)], v, cs.labels()) +
                   "\n";
        }
    if (!any) out = "all λ-brackets vanish\n";
    return out;
}

std::string render_cobracket_table(const ConformalStructure& cs) {
    std::string out;
    bool any = false;
    for (int k = 0; k < cs.dim(); ++k) {
        const Tensor2& t = cs.cobracket_entry(k);
        if (t.is_zero()) continue;
        any = true;
        out += "δ(" + cs.labels()[static_cast<std::size_t>(k)] +
               ") = " + render_antisym_tensor2(t, cs.labels()) + "\n";
    }
    if (!any) out = "δ = 0\n";
    return out;
}

std::string render_gd_coalgebra_tables(const CoalgebraStructure& co) {
    std::string out;
    bool anyD = false, anyd = false;
    for (int k = 0; k < co.dim(); ++k) {
        const Tensor2 t = co.co_of_basis(CoMap::Delta, k);
        if (t.is_zero()) continue;
        anyD = true;
        out += "Δ(" + co.labels()[static_cast<std::size_t>(k)] +
               ") = " + render_tensor2(t, co.labels()) + "\n";
    }
    if (!anyD) out += "Δ = 0\n";
    for (int k = 0; k < co.dim(); ++k) {
        const Tensor2 t = co.co_of_basis(CoMap::Delta0, k);
        if (t.is_zero()) continue;
        anyd = true;
        out += "δ0(" + co.labels()[static_cast<std::size_t>(k)] +
               ") = " + render_antisym_tensor2(t, co.labels()) + "\n";
    }
    if (!anyd) out += "δ0 = 0\n";
    return out;
}

std::string render_gd_product_tables(const AlgebraStructure& alg) {
    std::string out;
    bool any_circ = false, any_br = false;
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            const Vec v = alg.basis_product(ProductKind::Circ, i, j);
            if (v.is_zero()) continue;
            any_circ = true;
            out += alg.labels()[static_cast<std::size_t>(i)] + "∘" +
                   alg.labels()[static_cast<std::size_t>(j)] + " = " +
                   render_vec(v, alg.labels()) + "\n";
        }
    if (!any_circ) out += "∘ = 0\n";
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            const Vec v = alg.basis_product(ProductKind::Bracket, i, j);
            if (v.is_zero()) continue;
            any_br = true;
            out += "[" + alg.labels()[static_cast<std::size_t>(i)] + "," +
                   alg.labels()[static_cast<std::size_t>(j)] + "] = " +
                   render_vec(v, alg.labels()) + "\n";
        }
    if (!any_br) out += "[·,·] = 0\n";
    return out;
}

}  // namespace gdlab
