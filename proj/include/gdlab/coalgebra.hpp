#pragma once

#include "gdlab/algebra.hpp"

namespace gdlab {

// Δ is the Novikov-side comultiplication, Delta0 is the Lie-side cobracket δ
// (written δ0 at the algebra level to keep it apart from the conformal δ).
enum class CoMap { Delta, Delta0 };
enum class CoalgebraLaw { Novikov, Lie, Gd };

// Two linear maps A → A⊗A by structure constants:
// Δ(e_k) = Σ_{ij} delta(k,i,j) e_i⊗e_j, and likewise for δ0.
class CoalgebraStructure {
  public:
    CoalgebraStructure() = default;
    explicit CoalgebraStructure(int dim);

    int dim() const { return dim_; }

    const Rat& Delta(int k, int i, int j) const { return Delta_[idx(k, i, j)]; }
    const Rat& delta0(int k, int i, int j) const { return delta0_[idx(k, i, j)]; }
    void set_Delta(int k, int i, int j, const Rat& c) { Delta_[idx(k, i, j)] = c; }
    void set_delta0(int k, int i, int j, const Rat& c) { delta0_[idx(k, i, j)] = c; }

    bool table_is_zero(CoMap which) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l);

    Tensor2 co_of_basis(CoMap which, int k) const;

    bool operator==(const CoalgebraStructure&) const = default;

  private:
    std::size_t idx(int k, int i, int j) const {
        return (static_cast<std::size_t>(k) * dim_ + i) * dim_ + j;
    }
    int dim_ = 0;
    std::vector<Rat> Delta_, delta0_;
    std::vector<std::string> labels_;
};

Tensor2 comultiply(const CoalgebraStructure& co, CoMap which, const Vec& a);

// Coassociativity-type identities evaluated in A⊗A⊗A on every basis element.
// Gd additionally requires the mixed compatibility identity.
AxiomReport check_coalgebra(const CoalgebraStructure& co, CoalgebraLaw law);

// Transpose dictionary between coalgebras on A and algebras on A*:
// a*_{ij}^k = c_{ij}^k and b*_{ij}^k = d_{ij}^k, and back. Mutually inverse.
AlgebraStructure dualize_coalgebra(const CoalgebraStructure& co);
CoalgebraStructure dualize_algebra(const AlgebraStructure& alg);

}  // namespace gdlab
