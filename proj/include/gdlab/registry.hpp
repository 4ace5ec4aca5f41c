#pragma once

#include "gdlab/conformal.hpp"
#include "gdlab/io.hpp"

namespace gdlab {
namespace builtin {

// The bundled finite-dimensional structures used by the example catalog and
// the test suites.

// 2-dim Novikov product e1∘e2 = e2 with the antisymmetric cobracket
// δ0(e2) = e1⊗e2 − e2⊗e1.
BialgebraData novikov_type_2d();

// 2-dim Lie bracket [e1,e2] = e2 with Δ(e2) = e1⊗e2.
BialgebraData lie_type_2d();

// 2-dim Novikov bialgebra e1∘e1 = e1, e2∘e1 = e2, Δ(e1) = e2⊗e2.
BialgebraData novikov_bialgebra_2d();

// 3-dim Zinbiel product e1·e1 = e2, e1·e2 = e3, e2·e1 = e3 with the diagonal
// derivation D(e_i) = i·e_i and parameters (ξ, k).
ZinbielData zinbiel_3d(const Rat& xi, const Rat& k);

}  // namespace builtin

// The full pipeline chain with its canonical text output; shared between the
// example catalog and the construct command.
struct PipelineRun {
    PipelineResult result;
    std::string text;
    bool ok = false;
};

PipelineRun run_pregd_pipeline_chain(const PreGDStructure& p);

struct RegistryEntry {
    std::string name;
    std::string description;
    bool parameterised = false;  // accepts --xi / --k
};

const std::vector<RegistryEntry>& registry_entries();

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 claim/golden failure, 2 unknown name
    std::string output;
    std::string message;  // failure summary, empty on success
};

// Produces the canonical output of an example's claim chain (used both for
// `examples show` and as the payload compared against the stored golden).
std::string example_output(const std::string& name, const Rat& xi, const Rat& k);

// Runs the chain and compares byte-for-byte against the stored golden.
// Parameterised examples are compared only at the default parameters; at
// other values the embedded claims are still verified.
RunResult run_example(const std::string& name, const Rat& xi, const Rat& k);

// Parameterised entries without explicit parameters sweep the default list
// (ξ, k) ∈ {(0,1), (1,1), (−1/2,2)}; other entries run once.
RunResult run_example_sweep(const std::string& name);

// nullptr when no golden is stored under that name.
const std::string* find_golden(const std::string& name);

}  // namespace gdlab
