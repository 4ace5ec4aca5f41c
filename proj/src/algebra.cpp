#include "gdlab/algebra.hpp"

#include <algorithm>

namespace gdlab {

AlgebraStructure::AlgebraStructure(int dim)
    : dim_(dim),
      circ_(static_cast<std::size_t>(dim) * dim * dim),
      bracket_(static_cast<std::size_t>(dim) * dim * dim),
      labels_(default_labels(dim)) {
    if (dim <= 0) throw input_error("algebra dimension must be positive");
}

void AlgebraStructure::set_labels(std::vector<std::string> l) {
    if (static_cast<int>(l.size()) != dim_) throw input_error("label count mismatch");
    labels_ = std::move(l);
}

bool AlgebraStructure::table_is_zero(ProductKind which) const {
    const auto& t = which == ProductKind::Circ ? circ_ : bracket_;
    if (which == ProductKind::Star) throw input_error("star is not a stored table");
    return std::all_of(t.begin(), t.end(), [](const Rat& c) { return c == 0; });
}

Vec AlgebraStructure::basis_product(ProductKind kind, int i, int j) const {
    Vec v(dim_);
    for (int k = 0; k < dim_; ++k) {
        Rat c;
        switch (kind) {
            case ProductKind::Circ: c = circ(i, j, k); break;
            case ProductKind::Bracket: c = bracket(i, j, k); break;
            case ProductKind::Star: c = circ(i, j, k) + circ(j, i, k); break;
        }
        if (c != 0) v[k] = MPoly(c);
    }
    return v;
}

Vec evaluate(const AlgebraStructure& alg, ProductKind kind, const Vec& a, const Vec& b) {
    if (a.dim != alg.dim() || b.dim != alg.dim())
        throw input_error("dimension mismatch in product evaluation");
    Vec r(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (b[j].is_zero()) continue;
            const MPoly c = a[i] * b[j];
            const Vec prod = alg.basis_product(kind, i, j);
            for (int k = 0; k < alg.dim(); ++k)
                if (!prod[k].is_zero()) r[k] += c * prod[k];
        }
    }
    return r;
}

Mat operator_matrix(const AlgebraStructure& alg, OperatorKind kind, const Vec& a) {
    if (a.dim != alg.dim()) throw input_error("dimension mismatch in operator_matrix");
    Mat m(alg.dim(), alg.dim());
    for (int j = 0; j < alg.dim(); ++j) {
        const Vec ej = Vec::basis(alg.dim(), j);
        Vec col;
        switch (kind) {
            case OperatorKind::LeftCirc: col = evaluate(alg, ProductKind::Circ, a, ej); break;
            case OperatorKind::RightCirc: col = evaluate(alg, ProductKind::Circ, ej, a); break;
            case OperatorKind::LeftStar: col = evaluate(alg, ProductKind::Star, a, ej); break;
            case OperatorKind::Ad: col = evaluate(alg, ProductKind::Bracket, a, ej); break;
        }
        for (int i = 0; i < alg.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Mat operator_matrix(const AlgebraStructure& alg, OperatorKind kind, int basis_index) {
    return operator_matrix(alg, kind, Vec::basis(alg.dim(), basis_index));
}

namespace {

using Prod = ProductKind;

// All identities below are checked on basis triples (e_i, e_j, e_k).
void check_novikov(const AlgebraStructure& alg, AxiomReport& rep) {
    const int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec ei = Vec::basis(n, i), ej = Vec::basis(n, j), ek = Vec::basis(n, k);
                auto circ = [&](const Vec& x, const Vec& y) {
                    return evaluate(alg, Prod::Circ, x, y);
                };
                // (a∘b)∘c − a∘(b∘c) = (b∘a)∘c − b∘(a∘c)
                const Vec lef = circ(circ(ei, ej), ek) - circ(ei, circ(ej, ek)) -
                                circ(circ(ej, ei), ek) + circ(ej, circ(ei, ek));
                if (!lef.is_zero())
                    rep.add("left-symmetry", {i + 1, j + 1, k + 1},
                            render_vec(lef, alg.labels()));
                // (a∘b)∘c = (a∘c)∘b
                const Vec rc = circ(circ(ei, ej), ek) - circ(circ(ei, ek), ej);
                if (!rc.is_zero())
                    rep.add("right-commutativity", {i + 1, j + 1, k + 1},
                            render_vec(rc, alg.labels()));
            }
}

void check_lie(const AlgebraStructure& alg, AxiomReport& rep) {
    const int n = alg.dim();
    auto br = [&](const Vec& x, const Vec& y) { return evaluate(alg, Prod::Bracket, x, y); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec anti = br(Vec::basis(n, i), Vec::basis(n, j)) +
                             br(Vec::basis(n, j), Vec::basis(n, i));
            if (!anti.is_zero())
                rep.add("antisymmetry", {i + 1, j + 1}, render_vec(anti, alg.labels()));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec ei = Vec::basis(n, i), ej = Vec::basis(n, j), ek = Vec::basis(n, k);
                const Vec jac = br(br(ei, ej), ek) + br(br(ej, ek), ei) + br(br(ek, ei), ej);
                if (!jac.is_zero())
                    rep.add("jacobi", {i + 1, j + 1, k + 1}, render_vec(jac, alg.labels()));
            }
}

void check_gd_compat(const AlgebraStructure& alg, AxiomReport& rep) {
    const int n = alg.dim();
    auto circ = [&](const Vec& x, const Vec& y) { return evaluate(alg, Prod::Circ, x, y); };
    auto br = [&](const Vec& x, const Vec& y) { return evaluate(alg, Prod::Bracket, x, y); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec a = Vec::basis(n, i), b = Vec::basis(n, j), c = Vec::basis(n, k);
                // [a∘b, c] − [a∘c, b] + [a,b]∘c − [a,c]∘b − a∘[b,c]
                const Vec d = br(circ(a, b), c) - br(circ(a, c), b) + circ(br(a, b), c) -
                              circ(br(a, c), b) - circ(a, br(b, c));
                if (!d.is_zero())
                    rep.add("gd-compatibility", {i + 1, j + 1, k + 1},
                            render_vec(d, alg.labels()));
            }
}

}  // namespace

AxiomReport check_algebra(const AlgebraStructure& alg, AlgebraLaw law) {
    AxiomReport rep;
    switch (law) {
        case AlgebraLaw::Novikov: check_novikov(alg, rep); break;
        case AlgebraLaw::Lie: check_lie(alg, rep); break;
        case AlgebraLaw::GdCompat: check_gd_compat(alg, rep); break;
        case AlgebraLaw::Gd:
            check_novikov(alg, rep);
            check_lie(alg, rep);
            check_gd_compat(alg, rep);
            break;
    }
    return rep;
}

AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b) {
    AlgebraStructure s(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                s.set_circ(i, j, k, a.circ(i, j, k));
                s.set_bracket(i, j, k, a.bracket(i, j, k));
            }
    const int n = a.dim();
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k) {
                s.set_circ(n + i, n + j, n + k, b.circ(i, j, k));
                s.set_bracket(n + i, n + j, n + k, b.bracket(i, j, k));
            }
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    s.set_labels(std::move(labels));
    return s;
}

}  // namespace gdlab
