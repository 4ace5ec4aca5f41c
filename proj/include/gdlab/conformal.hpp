#pragma once

#include <optional>

#include "gdlab/manin.hpp"

namespace gdlab {

// Free k[∂]-module on a finite basis with a λ-bracket table (entries are
// coefficient vectors over k[λ,∂]) and optionally a cobracket table (per
// basis element a 2-tensor over k[∂1,∂2], ∂ acting on R⊗R as ∂1+∂2).
class ConformalStructure {
  public:
    ConformalStructure() = default;
    explicit ConformalStructure(int dim);

    int dim() const { return dim_; }

    const Vec& bracket_entry(int i, int j) const { return bracket_[idx(i, j)]; }
    void set_bracket_entry(int i, int j, Vec v);

    bool has_cobracket() const { return cobracket_.has_value(); }
    const std::vector<Tensor2>& cobracket() const;
    const Tensor2& cobracket_entry(int k) const { return cobracket()[k]; }
    void set_cobracket(std::vector<Tensor2> tables);

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l);

  private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }
    int dim_ = 0;
    std::vector<Vec> bracket_;
    std::optional<std::vector<Tensor2>> cobracket_;
    std::vector<std::string> labels_;
};

// [a_λ b] = ∂(b∘a) + λ(a⋆b) + [a,b] on generators, extended sesquilinearly.
ConformalStructure affinize(const AlgebraStructure& alg);

// Sesquilinear evaluation for x, y with k[∂]-coefficients (coefficients may
// carry other variables; only ∂ is transformed):
// [p(∂)e_i ν q(∂)e_j] = p(−ν) q(ν+∂) [e_i ν e_j].
Vec conformal_bracket(const ConformalStructure& cs, const Vec& x, const Vec& y, Var nu);
Vec lambda_bracket(const ConformalStructure& cs, const Vec& x, const Vec& y);

// Skew-symmetry and the Jacobi identity as exact polynomial identities in
// k[λ,μ,∂], checked on generator pairs/triples.
AxiomReport check_conformal_algebra(const ConformalStructure& cs);

struct CobracketResult {
    ConformalStructure cs;  // input λ-structure with the cobracket attached
    AxiomReport report;     // anti-cocommutativity + conformal co-Jacobi
};

// δ(a) = δ0(a) + (∂⊗id)Δ(a) − τ(∂⊗id)Δ(a) on generators.
CobracketResult build_cobracket(const ConformalStructure& cs, const CoalgebraStructure& co);

// a_λ δ(b) − b_{−λ−∂} δ(a) = δ([a_λ b]) in k[λ,∂1,∂2]⊗A⊗A per generator pair.
AxiomReport check_conformal_bialgebra(const ConformalStructure& cs);

// Defect of the conformal classical Yang-Baxter equation for constant r,
// reduced mod ∂^{⊗3} by the canonical substitution ∂3 ↦ −∂1−∂2.
Tensor3 ccybe_defect(const ConformalStructure& cs, const RMatrix& r);

// δ(a) = a_λ r |_{λ = −∂^{⊗2}} for skew constant r; one table per generator.
std::vector<Tensor2> coboundary_conformal(const ConformalStructure& cs, const RMatrix& r);

struct ConformalRep {
    int alg_dim = 0, rep_dim = 0;
    std::vector<Mat> action;  // per A-basis index, m×m over k[λ,∂]
};

struct ConformalRepResult {
    ConformalRep rep;
    AxiomReport report;
};

// ρ(a)_λ v = ∂(r(a)v) + λ(l(a)v + r(a)v) + ρ(a)v; validity is checked via the
// associated semidirect product being a Lie conformal algebra.
ConformalRepResult conformal_rep(const AlgebraStructure& alg, const Representation& rep);

// [T(u)_λ T(v)] = T(ρ(T(u))_λ v − ρ(T(v))_{−λ−∂} u) for constant T.
AxiomReport check_conformal_o_operator(const ConformalStructure& cs, const ConformalRep& crep,
                                       const Mat& T);

struct LeftSymmetricConformal {
    std::vector<Vec> table;  // a_λ b per generator pair, row-major
    AxiomReport report;
};

// a_λ b = ∂(b⊲a) + λ(a⊳b + b⊲a) + a⋄b; the report checks the left-symmetric
// identity and that the sub-adjacent bracket matches the affinized
// associated GD algebra.
LeftSymmetricConformal left_symmetric_conformal(const PreGDStructure& p);

// ⟨a,b⟩_λ = (a,b) on generators: symmetry, nondegeneracy and
// ⟨[a_μ b], c⟩_λ = ⟨a, [b_{λ−∂} c]⟩_μ as identities in k[λ,μ].
AxiomReport check_conformal_bilinear(const ConformalStructure& cs, const BilinearForm& form);

std::string render_lambda_table(const ConformalStructure& cs);
std::string render_cobracket_table(const ConformalStructure& cs);
std::string render_gd_coalgebra_tables(const CoalgebraStructure& co);
std::string render_gd_product_tables(const AlgebraStructure& alg);

}  // namespace gdlab
