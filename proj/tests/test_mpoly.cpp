#include <doctest.h>

#include "gdlab/render.hpp"
#include "support.hpp"

using namespace gdlab;
using gdlab::testing::Rng;

namespace {
const MPoly L = MPoly::variable(Var::Lambda);
const MPoly M = MPoly::variable(Var::Mu);
const MPoly D = MPoly::variable(Var::D);
const MPoly D1 = MPoly::variable(Var::D1);
const MPoly D2 = MPoly::variable(Var::D2);
}  // namespace

TEST_CASE("rational arithmetic satisfies field axioms on random triples") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat a = make_rat(rng.index(19) - 9, rng.index(9) + 1);
        const Rat b = make_rat(rng.index(19) - 9, rng.index(9) + 1);
        const Rat c = make_rat(rng.index(19) - 9, rng.index(9) + 1);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);
    }
}

TEST_CASE("substitution eliminates the variable") {
    // λ² with λ ↦ −∂1−∂2 gives ∂1² + 2∂1∂2 + ∂2²
    const MPoly p = L * L;
    const MPoly q = p.substitute(Var::Lambda, -D1 - D2);
    CHECK(q == D1 * D1 + Rat(2) * (D1 * D2) + D2 * D2);
    CHECK(q.degree(Var::Lambda) == 0);

    // constants are fixed by any substitution
    const MPoly c(make_rat(3, 2));
    CHECK(c.substitute(Var::Lambda, D) == c);

    // λ∂ + μ with μ ↦ −λ−∂ gives λ∂ − λ − ∂
    const MPoly r = (L * D + M).substitute(Var::Mu, -L - D);
    CHECK(r == L * D - L - D);
}

TEST_CASE("substituting an eliminated variable is vacuous") {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const MPoly p = gdlab::testing::random_poly(rng, 4);
        const MPoly once = p.substitute(Var::Lambda, D1 + D2);
        CHECK(once.substitute(Var::Lambda, gdlab::testing::random_poly(rng, 2)) == once);
    }
}

TEST_CASE("substitution whose replacement contains the variable itself") {
    // μ ↦ λ+μ is used when evaluating nested brackets; it must act on the
    // original occurrences only.
    const MPoly p = M * M + D * M;
    const MPoly q = p.substitute(Var::Mu, L + M);
    CHECK(q == (L + M) * (L + M) + D * (L + M));
}

TEST_CASE("rename swaps slot variables simultaneously") {
    const MPoly p = D1 * D1 + D1 * D2 + Rat(3) * D2;
    std::array<Var, kNumVars> image{};
    for (int i = 0; i < kNumVars; ++i) image[static_cast<std::size_t>(i)] = static_cast<Var>(i);
    image[static_cast<int>(Var::D1)] = Var::D2;
    image[static_cast<int>(Var::D2)] = Var::D1;
    CHECK(p.rename(image) == D2 * D2 + D1 * D2 + Rat(3) * D1);
}

TEST_CASE("content is the positive gcd of the coefficients") {
    const MPoly p = Rat(2) * D + Rat(4) * L;
    CHECK(p.content() == 2);
    CHECK((Rat(-2) * D - Rat(4) * L).content() == 2);
    CHECK(MPoly().content() == 0);
    CHECK((make_rat(1, 2) * D + make_rat(3, 4) * L).content() == make_rat(1, 4));
}

TEST_CASE("unknown variable names are rejected") {
    CHECK_THROWS_AS(var_from_name("zeta"), input_error);
    CHECK(var_from_name("lambda") == Var::Lambda);
    CHECK(var_from_name("∂") == Var::D);
}

TEST_CASE("coefficient rendering matches the canonical format") {
    CHECK(render_coefficient(L) == "λ");
    CHECK(render_coefficient(D + Rat(2) * L) == "(∂+2λ)");
    CHECK(render_coefficient(Rat(2) * D + Rat(4) * L) == "2(∂+2λ)");
    CHECK(render_coefficient(D + L) == "(∂+λ)");
    CHECK(render_coefficient(MPoly(1)) == "1");
    CHECK(render_coefficient(MPoly(-1)) == "−1");
    CHECK(render_poly(D - Rat(2) * L - MPoly(1)) == "∂−2λ−1");
}
