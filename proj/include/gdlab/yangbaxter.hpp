#pragma once

#include "gdlab/bialgebra.hpp"

namespace gdlab {

// r = Σ_α x_α⊗y_α ∈ A⊗A with constant rational entries. t.at(i,j) is the
// coefficient of e_i⊗e_j.
struct RMatrix {
    int dim = 0;
    Tensor2 t;

    RMatrix() = default;
    explicit RMatrix(int n) : dim(n), t(n, n) {}

    // Rejects tensors with non-constant entries (polynomial-coefficient r is
    // out of scope throughout).
    static RMatrix from_tensor(const Tensor2& t);

    void set(int i, int j, const Rat& c) { t.at(i, j) = MPoly(c); }
    Rat get(int i, int j) const { return t.at(i, j).constant_value(); }
    bool is_skew() const;
    RMatrix flipped() const;

    bool operator==(const RMatrix&) const = default;
};

// Placement product: s sitting in slots sp of A⊗A⊗A times t in slots tp,
// with the chosen product applied in the single overlapping slot, s-component
// first. This is the building block for every displayed r-identity.
Tensor3 placed_product(const AlgebraStructure& alg, const Tensor2& s, std::array<int, 2> sp,
                       const Tensor2& t, std::array<int, 2> tp, ProductKind kind);

// N(r) = r13∘r23 + r12⋆r23 + r13∘r12
Tensor3 nybe_defect(const AlgebraStructure& alg, const RMatrix& r);
// C(r) = [r12,r13] + [r12,r23] + [r13,r23]
Tensor3 cybe_defect(const AlgebraStructure& alg, const RMatrix& r);

struct GdybeReport {
    bool skew = false;
    bool nybe_zero = false;
    bool cybe_zero = false;
    bool solution() const { return nybe_zero && cybe_zero; }
    bool skew_solution() const { return skew && solution(); }
};

// Requires alg to pass the GD check; throws input_error otherwise.
GdybeReport check_gdybe(const AlgebraStructure& alg, const RMatrix& r);

// Δ_r(a) = −(L∘(a)⊗id + id⊗L⋆(a))r and δ_r(a) = (ad(a)⊗id + id⊗ad(a))r,
// read off on basis elements into coalgebra tables.
CoalgebraStructure coboundary_maps(const AlgebraStructure& alg, const RMatrix& r);

// The per-condition diagnostics for when (Δ_r, δ_r) gives a GD bialgebra.
// The primary verdict is the constructive one: the induced maps are checked
// as a bialgebra, and the displayed condition list is evaluated alongside;
// any disagreement between the two routes is itself reported.
AxiomReport check_coboundary_conditions(const AlgebraStructure& alg, const RMatrix& r);

struct OperatorFormResult {
    Mat T;  // matrix of T^r : A* → A in dual bases
    AxiomReport report;
};

// Operator form of the GDYBE for skew r; non-skew input is rejected.
OperatorFormResult r_to_operator(const AlgebraStructure& alg, const RMatrix& r);

}  // namespace gdlab
