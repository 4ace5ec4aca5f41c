#pragma once

#include <string>
#include <vector>

#include "gdlab/render.hpp"
#include "gdlab/report.hpp"
#include "gdlab/tensor.hpp"

namespace gdlab {

enum class ProductKind { Circ, Bracket, Star };
enum class OperatorKind { LeftCirc, RightCirc, LeftStar, Ad };
enum class AlgebraLaw { Novikov, Lie, GdCompat, Gd };

// Finite-dimensional vector space with two bilinear products ∘ and [·,·],
// given by rational structure constants: e_i ∘ e_j = Σ_k circ(i,j,k) e_k.
// Nothing is assumed about the tables; all laws are checked properties.
class AlgebraStructure {
  public:
    AlgebraStructure() = default;
    explicit AlgebraStructure(int dim);

    int dim() const { return dim_; }

    const Rat& circ(int i, int j, int k) const { return circ_[idx(i, j, k)]; }
    const Rat& bracket(int i, int j, int k) const { return bracket_[idx(i, j, k)]; }
    void set_circ(int i, int j, int k, const Rat& c) { circ_[idx(i, j, k)] = c; }
    void set_bracket(int i, int j, int k, const Rat& c) { bracket_[idx(i, j, k)] = c; }

    bool table_is_zero(ProductKind which) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l);

    // e_i ∘ e_j (resp. [e_i,e_j], e_i ⋆ e_j) as a coefficient vector.
    Vec basis_product(ProductKind kind, int i, int j) const;

    bool operator==(const AlgebraStructure&) const = default;

  private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<Rat> circ_, bracket_;
    std::vector<std::string> labels_;
};

// Bilinear extension of the chosen product to coefficient vectors.
Vec evaluate(const AlgebraStructure& alg, ProductKind kind, const Vec& a, const Vec& b);

// Matrix of L_∘(a), R_∘(a), L_⋆(a) or ad(a) in the basis.
Mat operator_matrix(const AlgebraStructure& alg, OperatorKind kind, const Vec& a);
Mat operator_matrix(const AlgebraStructure& alg, OperatorKind kind, int basis_index);

// Checks the multilinear identities on all basis triples, which suffices.
// Gd means Novikov ∧ Lie ∧ the five-term compatibility identity.
AxiomReport check_algebra(const AlgebraStructure& alg, AlgebraLaw law);

// Direct sum with all cross products zero; basis of a first, then b.
AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b);

}  // namespace gdlab
