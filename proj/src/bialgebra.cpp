#include "gdlab/bialgebra.hpp"

namespace gdlab {

const char* special_type_name(SpecialType t) {
    switch (t) {
        case SpecialType::NovikovType: return "novikov_type";
        case SpecialType::LieType: return "lie_type";
        case SpecialType::NovikovBialgebraOnly: return "novikov_bialgebra_only";
        case SpecialType::LieBialgebraOnly: return "lie_bialgebra_only";
        case SpecialType::General: return "general";
    }
    return "general";
}

BialgebraData::BialgebraData(AlgebraStructure a, CoalgebraStructure c)
    : alg(std::move(a)), co(std::move(c)) {
    if (alg.dim() != co.dim()) throw input_error("bialgebra algebra/coalgebra dim mismatch");
}

namespace {

// a.(x⊗y) = [a,x]⊗y + x⊗[a,y]
Tensor2 dot_action(const AlgebraStructure& alg, int a, const Tensor2& t) {
    const Mat ad = operator_matrix(alg, OperatorKind::Ad, a);
    return apply_to_factor(t, 0, ad) + apply_to_factor(t, 1, ad);
}

void check_novikov_compat(const BialgebraData& d, AxiomReport& rep) {
    const auto& alg = d.alg;
    const auto& co = d.co;
    const int n = d.dim();
    for (int a = 0; a < n; ++a) {
        const Mat Lstar_a = operator_matrix(alg, OperatorKind::LeftStar, a);
        const Mat Rcirc_a = operator_matrix(alg, OperatorKind::RightCirc, a);
        const Tensor2 Da = co.co_of_basis(CoMap::Delta, a);
        const Tensor2 Da_sym = Da + tensor_flip(Da, false);
        for (int b = 0; b < n; ++b) {
            const Mat Lstar_b = operator_matrix(alg, OperatorKind::LeftStar, b);
            const Mat Rcirc_b = operator_matrix(alg, OperatorKind::RightCirc, b);
            const Tensor2 Db = co.co_of_basis(CoMap::Delta, b);
            const Tensor2 Db_sym = Db + tensor_flip(Db, false);

            // Δ(a∘b) = (R∘(b)⊗id)Δ(a) + (id⊗L⋆(a))(Δ(b)+τΔ(b))
            const Tensor2 lhs5 =
                comultiply(co, CoMap::Delta,
                           evaluate(alg, ProductKind::Circ, Vec::basis(n, a), Vec::basis(n, b)));
            const Tensor2 rhs5 =
                apply_to_factor(Da, 0, Rcirc_b) + apply_to_factor(Db_sym, 1, Lstar_a);
            if (Tensor2 def = lhs5 - rhs5; !def.is_zero())
                rep.add("product-coproduct", {a + 1, b + 1}, render_tensor2(def, co.labels()));

            // (L⋆(a)⊗id)Δ(b) − (id⊗L⋆(a))τΔ(b) symmetric in a,b
            const Tensor2 lhs6 = apply_to_factor(Db, 0, Lstar_a) -
                                 apply_to_factor(tensor_flip(Db, false), 1, Lstar_a);
            const Tensor2 rhs6 = apply_to_factor(Da, 0, Lstar_b) -
                                 apply_to_factor(tensor_flip(Da, false), 1, Lstar_b);
            if (Tensor2 def = lhs6 - rhs6; !def.is_zero())
                rep.add("star-balance", {a + 1, b + 1}, render_tensor2(def, co.labels()));

            // (id⊗R∘(a) − R∘(a)⊗id)(Δ(b)+τΔ(b)) symmetric in a,b
            const Tensor2 lhs7 =
                apply_to_factor(Db_sym, 1, Rcirc_a) - apply_to_factor(Db_sym, 0, Rcirc_a);
            const Tensor2 rhs7 =
                apply_to_factor(Da_sym, 1, Rcirc_b) - apply_to_factor(Da_sym, 0, Rcirc_b);
            if (Tensor2 def = lhs7 - rhs7; !def.is_zero())
                rep.add("symmetric-part-balance", {a + 1, b + 1},
                        render_tensor2(def, co.labels()));
        }
    }
}

void check_lie_compat(const BialgebraData& d, AxiomReport& rep) {
    const int n = d.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // δ([a,b]) = a.δ(b) − b.δ(a)
            const Tensor2 lhs = comultiply(
                d.co, CoMap::Delta0,
                evaluate(d.alg, ProductKind::Bracket, Vec::basis(n, a), Vec::basis(n, b)));
            const Tensor2 rhs = dot_action(d.alg, a, d.co.co_of_basis(CoMap::Delta0, b)) -
                                dot_action(d.alg, b, d.co.co_of_basis(CoMap::Delta0, a));
            if (Tensor2 def = lhs - rhs; !def.is_zero())
                rep.add("cocycle", {a + 1, b + 1}, render_tensor2(def, d.co.labels()));
        }
}

void check_gd_mixed_compat(const BialgebraData& d, AxiomReport& rep) {
    const auto& alg = d.alg;
    const auto& co = d.co;
    const int n = d.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b);
            // δ0(b∘a) + Δ([a,b]) = (R∘(a)⊗id)δ0(b) + (L∘(b)⊗id)δ0(a)
            //   + (id⊗L⋆(b))δ0(a) + a.Δ(b) − (id⊗ad(b))(Δ(a)+τΔ(a))
            const Tensor2 lhs =
                comultiply(co, CoMap::Delta0, evaluate(alg, ProductKind::Circ, eb, ea)) +
                comultiply(co, CoMap::Delta, evaluate(alg, ProductKind::Bracket, ea, eb));
            const Tensor2 db = co.co_of_basis(CoMap::Delta0, b);
            const Tensor2 da = co.co_of_basis(CoMap::Delta0, a);
            const Tensor2 Da = co.co_of_basis(CoMap::Delta, a);
            const Tensor2 Db = co.co_of_basis(CoMap::Delta, b);
            const Tensor2 rhs =
                apply_to_factor(db, 0, operator_matrix(alg, OperatorKind::RightCirc, a)) +
                apply_to_factor(da, 0, operator_matrix(alg, OperatorKind::LeftCirc, b)) +
                apply_to_factor(da, 1, operator_matrix(alg, OperatorKind::LeftStar, b)) +
                dot_action(alg, a, Db) -
                apply_to_factor(Da + tensor_flip(Da, false), 1,
                                operator_matrix(alg, OperatorKind::Ad, b));
            if (Tensor2 def = lhs - rhs; !def.is_zero())
                rep.add("mixed-compatibility", {a + 1, b + 1}, render_tensor2(def, co.labels()));
        }
}

}  // namespace

AxiomReport check_bialgebra(const BialgebraData& d, BialgebraLaw law) {
    AxiomReport rep;
    switch (law) {
        case BialgebraLaw::Novikov:
            rep.merge(check_algebra(d.alg, AlgebraLaw::Novikov), "algebra");
            rep.merge(check_coalgebra(d.co, CoalgebraLaw::Novikov), "coalgebra");
            check_novikov_compat(d, rep);
            break;
        case BialgebraLaw::Lie:
            rep.merge(check_algebra(d.alg, AlgebraLaw::Lie), "algebra");
            rep.merge(check_coalgebra(d.co, CoalgebraLaw::Lie), "coalgebra");
            check_lie_compat(d, rep);
            break;
        case BialgebraLaw::Gd:
            rep.merge(check_algebra(d.alg, AlgebraLaw::Gd), "algebra");
            rep.merge(check_coalgebra(d.co, CoalgebraLaw::Gd), "coalgebra");
            check_novikov_compat(d, rep);
            check_lie_compat(d, rep);
            check_gd_mixed_compat(d, rep);
            break;
    }
    return rep;
}

SpecialType classify_special(const BialgebraData& d) {
    if (!check_bialgebra(d, BialgebraLaw::Gd).passed)
        throw input_error("classify_special requires a GD bialgebra");
    const bool circ0 = d.alg.table_is_zero(ProductKind::Circ);
    const bool br0 = d.alg.table_is_zero(ProductKind::Bracket);
    const bool D0 = d.co.table_is_zero(CoMap::Delta);
    const bool d0 = d.co.table_is_zero(CoMap::Delta0);
    if (D0 && br0) return SpecialType::NovikovType;
    if (circ0 && d0) return SpecialType::LieType;
    if (br0 && d0) return SpecialType::NovikovBialgebraOnly;
    if (circ0 && D0) return SpecialType::LieBialgebraOnly;
    return SpecialType::General;
}

}  // namespace gdlab
