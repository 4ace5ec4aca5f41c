#include <doctest.h>

#include "support.hpp"

using namespace gdlab;
using gdlab::testing::Rng;

TEST_CASE("products of the 2-dim structures evaluate as tabled") {
    const AlgebraStructure alg = builtin::novikov_type_2d().alg;
    const Vec e1 = Vec::basis(2, 0), e2 = Vec::basis(2, 1);
    CHECK(evaluate(alg, ProductKind::Circ, e1, e2) == e2);
    CHECK(evaluate(alg, ProductKind::Circ, e2, e1).is_zero());
    // star is the symmetrised product: e1⋆e2 = e1∘e2 + e2∘e1 = e2
    CHECK(evaluate(alg, ProductKind::Star, e1, e2) == e2);
    CHECK(evaluate(alg, ProductKind::Star, e2, e1) == e2);

    const AlgebraStructure zero(2);
    CHECK(evaluate(zero, ProductKind::Circ, e1, e2).is_zero());
    CHECK(evaluate(zero, ProductKind::Star, e1, e1).is_zero());
}

TEST_CASE("star evaluation equals circ plus flipped circ on random vectors") {
    Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const AlgebraStructure alg = gdlab::testing::random_algebra(rng, 3);
        Vec a(3), b(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = MPoly(rng.pm1());
            b[i] = MPoly(rng.pm1());
        }
        CHECK(evaluate(alg, ProductKind::Star, a, b) ==
              evaluate(alg, ProductKind::Circ, a, b) + evaluate(alg, ProductKind::Circ, b, a));
    }
}

TEST_CASE("operator matrices columnwise match the products") {
    const AlgebraStructure alg = builtin::novikov_type_2d().alg;
    // L∘(e1) maps e2 ↦ e2 and kills e1
    const Mat L = operator_matrix(alg, OperatorKind::LeftCirc, 0);
    CHECK(L * Vec::basis(2, 1) == Vec::basis(2, 1));
    CHECK((L * Vec::basis(2, 0)).is_zero());
    // nothing right-multiplies to anything nonzero by e1
    CHECK(operator_matrix(alg, OperatorKind::RightCirc, 0).is_zero());
    // ad vanishes for the trivial bracket
    CHECK(operator_matrix(alg, OperatorKind::Ad, 0).is_zero());
    CHECK(operator_matrix(alg, OperatorKind::Ad, 1).is_zero());
}

TEST_CASE("left-star operator is the sum of the one-sided operators") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const AlgebraStructure alg = gdlab::testing::random_algebra(rng, 3);
        for (int a = 0; a < 3; ++a)
            CHECK(operator_matrix(alg, OperatorKind::LeftStar, a) ==
                  operator_matrix(alg, OperatorKind::LeftCirc, a) +
                      operator_matrix(alg, OperatorKind::RightCirc, a));
    }
}

TEST_CASE("the 2-dim catalog structures pass their axioms") {
    const AlgebraStructure nov = builtin::novikov_type_2d().alg;
    CHECK(check_algebra(nov, AlgebraLaw::Novikov).passed);
    CHECK(check_algebra(nov, AlgebraLaw::Gd).passed);  // trivial bracket

    const AlgebraStructure lie = builtin::lie_type_2d().alg;
    CHECK(check_algebra(lie, AlgebraLaw::Lie).passed);
    CHECK(check_algebra(lie, AlgebraLaw::Gd).passed);  // trivial product

    CHECK(check_algebra(builtin::novikov_bialgebra_2d().alg, AlgebraLaw::Novikov).passed);
}

TEST_CASE("a broken product is rejected with a witness") {
    AlgebraStructure alg(2);
    alg.set_circ(0, 0, 0, Rat(1));  // e1∘e1 = e1
    alg.set_circ(0, 1, 0, Rat(1));  // e1∘e2 = e1
    const AxiomReport rep = check_algebra(alg, AlgebraLaw::Novikov);
    CHECK_FALSE(rep.passed);
    bool witnessed = false;
    for (const auto& v : rep.violations) {
        if (v.witness == std::vector<int>{1, 1, 2} || v.witness == std::vector<int>{1, 2, 1})
            witnessed = true;
    }
    CHECK(witnessed);
}

TEST_CASE("gd verdict is the conjunction of the three families") {
    Rng rng(8);
    int seen_pass = 0;
    for (int trial = 0; trial < 120; ++trial) {
        AlgebraStructure alg = gdlab::testing::random_algebra(rng, 2);
        // antisymmetrise the bracket half the time so some trials are Lie
        if (trial % 2 == 0)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        alg.set_bracket(j, i, k, -alg.bracket(i, j, k));
        if (trial % 10 == 0) alg = builtin::novikov_type_2d().alg;
        const bool gd = check_algebra(alg, AlgebraLaw::Gd).passed;
        const bool parts = check_algebra(alg, AlgebraLaw::Novikov).passed &&
                           check_algebra(alg, AlgebraLaw::Lie).passed &&
                           check_algebra(alg, AlgebraLaw::GdCompat).passed;
        CHECK(gd == parts);
        if (gd) ++seen_pass;
    }
    CHECK(seen_pass > 0);
}

TEST_CASE("a Novikov algebra is exactly a GD algebra with trivial bracket") {
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        AlgebraStructure alg = gdlab::testing::random_algebra(rng, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) alg.set_bracket(i, j, k, Rat(0));
        CHECK(check_algebra(alg, AlgebraLaw::Gd).passed ==
              check_algebra(alg, AlgebraLaw::Novikov).passed);
    }
}

TEST_CASE("verdicts are invariant under basis permutation") {
    Rng rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const AlgebraStructure alg = gdlab::testing::random_algebra(rng, 3);
        // relabel indices by the cycle 0→1→2→0
        auto p = [](int i) { return (i + 1) % 3; };
        AlgebraStructure perm(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    perm.set_circ(p(i), p(j), p(k), alg.circ(i, j, k));
                    perm.set_bracket(p(i), p(j), p(k), alg.bracket(i, j, k));
                }
        for (AlgebraLaw law : {AlgebraLaw::Novikov, AlgebraLaw::Lie, AlgebraLaw::Gd})
            CHECK(check_algebra(alg, law).passed == check_algebra(perm, law).passed);
    }
}
