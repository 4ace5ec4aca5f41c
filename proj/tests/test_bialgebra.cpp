#include <doctest.h>

#include "support.hpp"

using namespace gdlab;
using gdlab::testing::Rng;

namespace {

BialgebraData random_bialgebra(Rng& rng, int dim) {
    return {gdlab::testing::random_algebra(rng, dim), gdlab::testing::random_coalgebra(rng, dim)};
}

}  // namespace

TEST_CASE("catalog bialgebras pass and classify as expected") {
    const BialgebraData nov = builtin::novikov_type_2d();
    CHECK(check_bialgebra(nov, BialgebraLaw::Gd).passed);
    CHECK(classify_special(nov) == SpecialType::NovikovType);

    const BialgebraData lie = builtin::lie_type_2d();
    CHECK(check_bialgebra(lie, BialgebraLaw::Gd).passed);
    CHECK(classify_special(lie) == SpecialType::LieType);

    // the pipeline double has all four tables nonzero
    const PipelineResult res =
        pregd_pipeline(zinbiel_to_pregd(builtin::zinbiel_3d(Rat(0), Rat(1))));
    CHECK(classify_special(res.bialg) == SpecialType::General);
}

TEST_CASE("a dropped cobracket term breaks the Lie fragment") {
    BialgebraData d = builtin::novikov_type_2d();
    d.co.set_delta0(1, 1, 0, Rat(0));  // δ0(e2) = e1⊗e2 is no longer antisymmetric
    CHECK_FALSE(check_bialgebra(d, BialgebraLaw::Lie).passed);
    CHECK_FALSE(check_bialgebra(d, BialgebraLaw::Gd).passed);
    CHECK_THROWS_AS(classify_special(d), input_error);
}

TEST_CASE("five single-entry mutants of each catalog structure fail") {
    for (const BialgebraData& base : {builtin::novikov_type_2d(), builtin::lie_type_2d()}) {
        int failing = 0;
        for (int m = 0; m < 5; ++m) {
            BialgebraData d = base;
            switch (m) {
                case 0: d.alg.set_circ(1, 1, 0, Rat(1)); break;
                case 1: d.alg.set_bracket(0, 0, 1, Rat(1)); break;
                case 2: d.co.set_Delta(0, 0, 0, Rat(1)); break;
                case 3: d.co.set_delta0(0, 0, 1, Rat(1)); break;
                case 4: d.co.set_delta0(1, 0, 1, Rat(2)); break;
            }
            if (!check_bialgebra(d, BialgebraLaw::Gd).passed) ++failing;
        }
        CHECK(failing == 5);
    }
}

TEST_CASE("matched pair: direct sum of two GD algebras with zero actions") {
    MatchedPairData mp;
    mp.A = builtin::novikov_type_2d().alg;
    mp.B = builtin::lie_type_2d().alg;
    mp.lA.assign(2, Mat(2, 2));
    mp.rA.assign(2, Mat(2, 2));
    mp.rhoA.assign(2, Mat(2, 2));
    mp.lB.assign(2, Mat(2, 2));
    mp.rB.assign(2, Mat(2, 2));
    mp.rhoB.assign(2, Mat(2, 2));
    const AxiomReport rep = check_matched_pair(mp);
    CHECK(rep.passed);
    const AlgebraStructure dbl = build_double(mp);
    CHECK(dbl.dim() == 4);
    CHECK(dbl == direct_sum(mp.A, mp.B));
}

TEST_CASE("the dual-structure matched pair of a catalog bialgebra passes") {
    for (const BialgebraData& d : {builtin::novikov_type_2d(), builtin::lie_type_2d()}) {
        const MatchedPairData mp = standard_dual_matched_pair(d);
        CHECK(check_matched_pair(mp).passed);
    }
}

TEST_CASE("perturbing one action entry breaks the matched pair with a diagnostic") {
    MatchedPairData mp = standard_dual_matched_pair(builtin::novikov_type_2d());
    mp.rhoB[1].at(0, 0) += MPoly(1);
    const AxiomReport rep = check_matched_pair(mp);
    CHECK_FALSE(rep.passed);
    bool diagnostic = false;
    for (const auto& v : rep.violations)
        if (v.axiom.rfind("double/", 0) != 0) diagnostic = true;
    CHECK(diagnostic);
    for (const auto& v : rep.violations) CHECK(v.axiom != "oracle-disagreement");
}

TEST_CASE("semidirect products are doubles with one trivial side") {
    const AlgebraStructure alg = builtin::novikov_type_2d().alg;
    const Representation adj = adjoint_representation(alg);
    MatchedPairData mp;
    mp.A = alg;
    mp.B = AlgebraStructure(2);  // abelian module side
    mp.lA = adj.l;
    mp.rA = adj.r;
    mp.rhoA = adj.rho;
    mp.lB.assign(2, Mat(2, 2));
    mp.rB.assign(2, Mat(2, 2));
    mp.rhoB.assign(2, Mat(2, 2));
    CHECK(build_double(mp) == semidirect(alg, adj, mp.B.labels()));
}

TEST_CASE("quadratic form checks on catalog data") {
    // identity form on the 2-dim product: (e1∘e2, e2) = 1 but −(e2, e1⋆e2) = −1
    const AlgebraStructure alg = builtin::novikov_type_2d().alg;
    const AxiomReport rep = check_quadratic_gd(alg, BilinearForm::identity(2));
    CHECK_FALSE(rep.passed);
    bool nov_inv = false;
    for (const auto& v : rep.violations)
        if (v.axiom == "novikov-invariance") nov_inv = true;
    CHECK(nov_inv);

    // the zero algebra with the identity form passes
    CHECK(check_quadratic_gd(AlgebraStructure(3), BilinearForm::identity(3)).passed);

    // degenerate forms are flagged
    BilinearForm degenerate(2);
    CHECK_FALSE(check_quadratic_gd(AlgebraStructure(2), degenerate).passed);
}

TEST_CASE("standard double carries the invariant hyperbolic form") {
    for (const BialgebraData& d : {builtin::novikov_type_2d(), builtin::lie_type_2d()}) {
        const ManinTripleResult res = build_standard_manin(d);
        CHECK(res.report.passed);
        CHECK(res.double_alg.dim() == 2 * d.dim());
        CHECK(check_quadratic_gd(res.double_alg, res.form).passed);
        // restriction to the first block is the original algebra
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    CHECK(res.double_alg.circ(i, j, k) == d.alg.circ(i, j, k));
                    CHECK(res.double_alg.bracket(i, j, k) == d.alg.bracket(i, j, k));
                }
    }
    // mutation: an added comultiplication entry must break the double
    BialgebraData bad = builtin::novikov_type_2d();
    bad.co.set_Delta(0, 0, 0, Rat(1));
    CHECK_FALSE(build_standard_manin(bad).report.passed);
    // zero bialgebra: abelian double with the hyperbolic form passes
    CHECK(build_standard_manin({AlgebraStructure(2), CoalgebraStructure(2)}).report.passed);
}

TEST_CASE("equivalence suite: bialgebra, matched pair and quadratic double agree") {
    // catalog instances plus seeded random dim-2/3 tables; the three verdicts
    // must coincide on every sample.
    std::vector<BialgebraData> samples = {builtin::novikov_type_2d(), builtin::lie_type_2d(),
                                          builtin::novikov_bialgebra_2d()};
    Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) samples.push_back(random_bialgebra(rng, 2 + trial % 2));
    int passing = 0;
    for (const BialgebraData& d : samples) {
        const bool bialg = check_bialgebra(d, BialgebraLaw::Gd).passed;
        const bool matched = check_matched_pair(standard_dual_matched_pair(d)).passed;
        const ManinTripleResult manin = build_standard_manin(d);
        CHECK(bialg == matched);
        CHECK(bialg == manin.report.passed);
        if (bialg) ++passing;
    }
    CHECK(passing >= 2);
}
