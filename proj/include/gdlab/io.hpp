#pragma once

#include <nlohmann/json_fwd.hpp>

#include "gdlab/conformal.hpp"

namespace gdlab {

// Parsed form of the JSON structure file. Tables are 1-based 5-tuples
// [i, j, k, num, den] (coefficient num/den of e_k in the product of e_i and
// e_j); coproduct tuples read [k, i, j, num, den]. Absent tables mean zero;
// unknown keys are rejected.
struct StructureFile {
    int dim = 0;
    std::vector<std::string> basis;

    bool has_circ = false, has_bracket = false;
    bool has_Delta = false, has_delta0 = false;
    bool has_pre = false;  // any of lhd / rhd / diamond
    bool has_dot = false, has_D = false;
    bool has_rep = false, has_T = false, has_r = false, has_form = false;

    AlgebraStructure alg;    // circ + bracket
    CoalgebraStructure co;   // Delta + delta0
    PreGDStructure pre;      // lhd + rhd + diamond
    std::vector<Rat> dot;    // Zinbiel product table
    Mat D;                   // derivation candidate
    Representation rep;
    Mat T;
    RMatrix r;
    BilinearForm form;

    ZinbielData zinbiel(const Rat& xi, const Rat& k) const;
};

StructureFile parse_structure_file(const std::string& text);
StructureFile load_structure_file(const std::string& path);

// Serialization used by the construct commands: sorted tuples, integers
// where the denominator is 1, [num, den] pairs otherwise.
nlohmann::json algebra_to_json(const AlgebraStructure& alg);
void merge_coalgebra_json(nlohmann::json& j, const CoalgebraStructure& co);
void merge_r_json(nlohmann::json& j, const RMatrix& r);
void merge_form_json(nlohmann::json& j, const BilinearForm& form);
std::string dump_json(const nlohmann::json& j);

}  // namespace gdlab
