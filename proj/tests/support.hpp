#pragma once

#include <cstdlib>
#include <random>

#include "gdlab/registry.hpp"

namespace gdlab::testing {

// Seed for the randomized property suites; GDLAB_SEED overrides the fixed
// default so failures are reproducible.
inline std::uint64_t suite_seed() {
    if (const char* env = std::getenv("GDLAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t salt = 0) : gen(suite_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

    // {−1, 0, 1} with nonzero density 1/3, so random tables regularly land
    // on nontrivial structures that still pass the axioms.
    Rat pm1() {
        const auto roll = gen() % 6;
        if (roll == 0) return Rat(1);
        if (roll == 1) return Rat(-1);
        return Rat(0);
    }
    int index(int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }
};

inline AlgebraStructure random_algebra(Rng& rng, int dim) {
    AlgebraStructure alg(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                alg.set_circ(i, j, k, rng.pm1());
                alg.set_bracket(i, j, k, rng.pm1());
            }
    return alg;
}

inline CoalgebraStructure random_coalgebra(Rng& rng, int dim) {
    CoalgebraStructure co(dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                co.set_Delta(k, i, j, rng.pm1());
                co.set_delta0(k, i, j, rng.pm1());
            }
    return co;
}

inline PreGDStructure random_pregd(Rng& rng, int dim) {
    PreGDStructure p(dim);
    for (std::size_t t = 0; t < p.lhd.size(); ++t) {
        p.lhd[t] = rng.pm1();
        p.rhd[t] = rng.pm1();
        p.diamond[t] = rng.pm1();
    }
    return p;
}

inline RMatrix random_r(Rng& rng, int dim, bool skew) {
    RMatrix r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = skew ? i + 1 : 0; j < dim; ++j) {
            const Rat c = rng.pm1();
            r.set(i, j, c);
            if (skew) r.set(j, i, -c);
        }
    return r;
}

inline MPoly random_poly(Rng& rng, int terms) {
    MPoly p;
    for (int t = 0; t < terms; ++t) {
        Expo e{};
        e[rng.index(kNumVars)] = static_cast<std::uint8_t>(rng.index(3));
        p.add_term(e, rng.pm1());
    }
    return p;
}

}  // namespace gdlab::testing
