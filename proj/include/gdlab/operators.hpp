#pragma once

#include "gdlab/yangbaxter.hpp"

namespace gdlab {

enum class RepLaw { Novikov, Lie, Gd };

// Triple of matrix-valued maps (l, r, ρ) from basis elements of A to
// endomorphisms of an m-dimensional module V.
struct Representation {
    int alg_dim = 0, rep_dim = 0;
    std::vector<Mat> l, r, rho;  // indexed by the A-basis, each m×m

    Representation() = default;
    Representation(int n, int m);
};

Representation adjoint_representation(const AlgebraStructure& alg);

// Extends the maps linearly to a coefficient vector over A.
Mat rep_map(const std::vector<Mat>& maps, const Vec& a);

// Identities evaluated on basis pairs (a,b) acting on basis vectors of V.
AxiomReport check_representation(const AlgebraStructure& alg, const Representation& rep,
                                 RepLaw law);

// A ⋉ V with (a+u)•(b+v) = a∘b + l(a)v + r(b)u and
// [a+u,b+v] = [a,b] + ρ(a)v − ρ(b)u; basis of A first, then V.
AlgebraStructure semidirect(const AlgebraStructure& alg, const Representation& rep,
                            const std::vector<std::string>& v_labels = {});

// (V*, l*+r*, −r*, ρ*) with the signed transpose φ* = −φᵀ.
Representation dual_representation(const Representation& rep);

// T : V → A as an n×m matrix.
AxiomReport check_o_operator(const AlgebraStructure& alg, const Representation& rep,
                             const Mat& T);

struct OOperatorDouble {
    AlgebraStructure double_alg;  // A ⋉ V* via the dual representation
    RMatrix r;                    // r_T − τ r_T
};

OOperatorDouble o_operator_to_r(const AlgebraStructure& alg, const Representation& rep,
                                const Mat& T, const std::vector<std::string>& v_labels = {});

// Three products ⊲, ⊳, ⋄ with the same index convention as AlgebraStructure.
struct PreGDStructure {
    int dim = 0;
    std::vector<Rat> lhd, rhd, diamond;

    PreGDStructure() = default;
    explicit PreGDStructure(int n);

    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim + j) * dim + k;
    }
    Vec product(const std::vector<Rat>& table, int i, int j) const;
};

AxiomReport check_pre_gd(const PreGDStructure& p);

struct GdWithRep {
    AlgebraStructure alg;  // a∘b = a⊲b + a⊳b, [a,b] = a⋄b − b⋄a
    Representation rep;    // (L_⊳, R_⊲, L_⋄) on A itself
};

GdWithRep pregd_to_gd(const PreGDStructure& p);

struct ZinbielData {
    int dim = 0;
    std::vector<Rat> dot;  // structure constants of the Zinbiel product
    Mat D;                 // derivation candidate
    Rat xi, kparam;
};

// The Zinbiel identity a·(b·c) = (b·a + a·b)·c on basis triples, and the
// derivation property of D on basis pairs.
AxiomReport check_zinbiel(const ZinbielData& z);

// Requires check_zinbiel to pass, then assembles
// a⊲b = D(b)·a + ξ b·a, a⊳b = a·D(b) + ξ a·b,
// a⋄b = k(a·D(b) − D(a)·b + ξ(a·b − b·a)).
PreGDStructure zinbiel_to_pregd(const ZinbielData& z);

struct PipelineResult {
    AlgebraStructure double_alg;
    RMatrix r;  // Σ (e_α⊗e_α* − e_α*⊗e_α)
    BialgebraData bialg;
    GdybeReport gdybe;
    AxiomReport bialgebra_report;
};

// Chain: associated GD algebra → dual representation → semidirect double →
// canonical r → coboundary maps. Requires check_pre_gd to pass.
PipelineResult pregd_pipeline(const PreGDStructure& p);

}  // namespace gdlab
