#pragma once

#include "gdlab/operators.hpp"

namespace gdlab {

// Two algebras with mutual actions; lA[i] etc. are the matrices of the maps
// on basis elements (A acting on B and vice versa).
struct MatchedPairData {
    AlgebraStructure A, B;
    std::vector<Mat> lA, rA, rhoA;  // indexed by A-basis, each dim(B)×dim(B)
    std::vector<Mat> lB, rB, rhoB;  // indexed by B-basis, each dim(A)×dim(A)
};

// The prescribed product and bracket on A ⊕ B (A-basis first).
AlgebraStructure build_double(const MatchedPairData& mp);

// Primary verdict: the double passes the GD check. The displayed component
// conditions are evaluated as named diagnostics alongside.
AxiomReport check_matched_pair(const MatchedPairData& mp);

struct BilinearForm {
    int dim = 0;
    Mat gram;

    BilinearForm() = default;
    explicit BilinearForm(int n) : dim(n), gram(n, n) {}
    static BilinearForm identity(int n);
    // (a+f, b+g) = ⟨f,b⟩ + ⟨g,a⟩ on a 2n-dimensional double.
    static BilinearForm standard_hyperbolic(int n);

    MPoly apply(const Vec& u, const Vec& v) const;
};

// Symmetry, nondegeneracy (exact determinant), and invariance for both
// products: (a∘b,c) = −(b, a⋆c) and ([a,b],c) = (a,[b,c]).
AxiomReport check_quadratic_gd(const AlgebraStructure& alg, const BilinearForm& form);

// The matched pair (A, A*, L⋆*, −R∘*, ad*, …) induced by a bialgebra's
// coalgebra tables, with the signed-transpose dual convention.
MatchedPairData standard_dual_matched_pair(const BialgebraData& d);

struct ManinTripleResult {
    AlgebraStructure double_alg;
    BilinearForm form;
    MatchedPairData pair;
    AxiomReport report;
};

ManinTripleResult build_standard_manin(const BialgebraData& d);

}  // namespace gdlab
