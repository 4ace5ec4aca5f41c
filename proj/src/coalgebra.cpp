#include "gdlab/coalgebra.hpp"

#include <algorithm>
#include <functional>

namespace gdlab {

CoalgebraStructure::CoalgebraStructure(int dim)
    : dim_(dim),
      Delta_(static_cast<std::size_t>(dim) * dim * dim),
      delta0_(static_cast<std::size_t>(dim) * dim * dim),
      labels_(default_labels(dim)) {
    if (dim <= 0) throw input_error("coalgebra dimension must be positive");
}

void CoalgebraStructure::set_labels(std::vector<std::string> l) {
    if (static_cast<int>(l.size()) != dim_) throw input_error("label count mismatch");
    labels_ = std::move(l);
}

bool CoalgebraStructure::table_is_zero(CoMap which) const {
    const auto& t = which == CoMap::Delta ? Delta_ : delta0_;
    return std::all_of(t.begin(), t.end(), [](const Rat& c) { return c == 0; });
}

Tensor2 CoalgebraStructure::co_of_basis(CoMap which, int k) const {
    Tensor2 t(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const Rat& c = which == CoMap::Delta ? Delta(k, i, j) : delta0(k, i, j);
            if (c != 0) t.at(i, j) = MPoly(c);
        }
    return t;
}

Tensor2 comultiply(const CoalgebraStructure& co, CoMap which, const Vec& a) {
    if (a.dim != co.dim()) throw input_error("dimension mismatch in comultiply");
    Tensor2 t(co.dim(), co.dim());
    for (int k = 0; k < co.dim(); ++k) {
        if (a[k].is_zero()) continue;
        Tensor2 base = co.co_of_basis(which, k);
        t += a[k] * std::move(base);
    }
    return t;
}

namespace {

using CoFn = std::function<Tensor2(int)>;

// (co ⊗ id): expands the first tensor factor into slots 1,2.
Tensor3 expand_left(const Tensor2& t, const CoFn& co) {
    const int n = t.n1;
    Tensor3 r(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MPoly& c = t.at(i, j);
            if (c.is_zero()) continue;
            const Tensor2 ci = co(i);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (!ci.at(p, q).is_zero()) r.at(p, q, j) += c * ci.at(p, q);
        }
    return r;
}

// (id ⊗ co): expands the second tensor factor into slots 2,3.
Tensor3 expand_right(const Tensor2& t, const CoFn& co) {
    const int n = t.n1;
    Tensor3 r(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MPoly& c = t.at(i, j);
            if (c.is_zero()) continue;
            const Tensor2 cj = co(j);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (!cj.at(p, q).is_zero()) r.at(i, p, q) += c * cj.at(p, q);
        }
    return r;
}

Tensor3 swap12(const Tensor3& t) { return tensor_permute(t, {1, 0, 2}, false); }

void check_novikov_co(const CoalgebraStructure& co, AxiomReport& rep) {
    const int n = co.dim();
    const CoFn D = [&](int k) { return co.co_of_basis(CoMap::Delta, k); };
    for (int a = 0; a < n; ++a) {
        const Tensor2 Da = co.co_of_basis(CoMap::Delta, a);
        const Tensor3 idD = expand_right(Da, D);
        const Tensor3 Did = expand_left(Da, D);
        // (id⊗Δ)Δ − (τ⊗id)(id⊗Δ)Δ = (Δ⊗id)Δ − (τ⊗id)(Δ⊗id)Δ
        const Tensor3 lhs = idD - swap12(idD) - Did + swap12(Did);
        if (!lhs.is_zero())
            rep.add("co-left-symmetry", {a + 1}, render_tensor3(lhs, co.labels()));
        // (τ⊗id)(id⊗Δ)τΔ = (Δ⊗id)Δ
        const Tensor3 rc = swap12(expand_right(tensor_flip(Da, false), D)) - Did;
        if (!rc.is_zero())
            rep.add("co-right-commutativity", {a + 1}, render_tensor3(rc, co.labels()));
    }
}

void check_lie_co(const CoalgebraStructure& co, AxiomReport& rep) {
    const int n = co.dim();
    const CoFn d = [&](int k) { return co.co_of_basis(CoMap::Delta0, k); };
    for (int a = 0; a < n; ++a) {
        const Tensor2 da = co.co_of_basis(CoMap::Delta0, a);
        const Tensor2 anti = da + tensor_flip(da, false);
        if (!anti.is_zero())
            rep.add("co-antisymmetry", {a + 1}, render_tensor2(anti, co.labels()));
        const Tensor3 idd = expand_right(da, d);
        // (id⊗δ)δ − (τ⊗id)(id⊗δ)δ = (δ⊗id)δ
        const Tensor3 jac = idd - swap12(idd) - expand_left(da, d);
        if (!jac.is_zero()) rep.add("co-jacobi", {a + 1}, render_tensor3(jac, co.labels()));
    }
}

void check_gd_co_compat(const CoalgebraStructure& co, AxiomReport& rep) {
    const int n = co.dim();
    const CoFn D = [&](int k) { return co.co_of_basis(CoMap::Delta, k); };
    const CoFn d = [&](int k) { return co.co_of_basis(CoMap::Delta0, k); };
    for (int a = 0; a < n; ++a) {
        const Tensor2 Da = co.co_of_basis(CoMap::Delta, a);
        const Tensor2 da = co.co_of_basis(CoMap::Delta0, a);
        // (id⊗δ)Δ − (τ⊗id)(id⊗Δ)δ + (τ⊗id)(id⊗δ)τΔ = (Δ⊗id)δ + (δ⊗id)Δ
        const Tensor3 lhs = expand_right(Da, d) - swap12(expand_right(da, D)) +
                            swap12(expand_right(tensor_flip(Da, false), d));
        const Tensor3 rhs = expand_left(da, D) + expand_left(Da, d);
        const Tensor3 defect = lhs - rhs;
        if (!defect.is_zero())
            rep.add("co-gd-compatibility", {a + 1}, render_tensor3(defect, co.labels()));
    }
}

}  // namespace

AxiomReport check_coalgebra(const CoalgebraStructure& co, CoalgebraLaw law) {
    AxiomReport rep;
    switch (law) {
        case CoalgebraLaw::Novikov: check_novikov_co(co, rep); break;
        case CoalgebraLaw::Lie: check_lie_co(co, rep); break;
        case CoalgebraLaw::Gd:
            check_novikov_co(co, rep);
            check_lie_co(co, rep);
            check_gd_co_compat(co, rep);
            break;
    }
    return rep;
}

namespace {

// Labels move to the dual space: a star is toggled so that the double dual
// restores the original names.
std::vector<std::string> dual_labels(const std::vector<std::string>& in) {
    std::vector<std::string> out;
    out.reserve(in.size());
    for (const auto& l : in) {
        if (!l.empty() && l.back() == '*')
            out.push_back(l.substr(0, l.size() - 1));
        else
            out.push_back(l + "*");
    }
    return out;
}

}  // namespace

AlgebraStructure dualize_coalgebra(const CoalgebraStructure& co) {
    AlgebraStructure alg(co.dim());
    for (int i = 0; i < co.dim(); ++i)
        for (int j = 0; j < co.dim(); ++j)
            for (int k = 0; k < co.dim(); ++k) {
                alg.set_circ(i, j, k, co.Delta(k, i, j));
                alg.set_bracket(i, j, k, co.delta0(k, i, j));
            }
    alg.set_labels(dual_labels(co.labels()));
    return alg;
}

CoalgebraStructure dualize_algebra(const AlgebraStructure& alg) {
    CoalgebraStructure co(alg.dim());
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (int k = 0; k < alg.dim(); ++k) {
                co.set_Delta(k, i, j, alg.circ(i, j, k));
                co.set_delta0(k, i, j, alg.bracket(i, j, k));
            }
    co.set_labels(dual_labels(alg.labels()));
    return co;
}

}  // namespace gdlab
