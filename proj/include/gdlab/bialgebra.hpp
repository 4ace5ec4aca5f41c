#pragma once

#include "gdlab/coalgebra.hpp"

namespace gdlab {

enum class BialgebraLaw { Novikov, Lie, Gd };

// Which tables of a GD bialgebra are trivial (Def-2.12-style naming).
enum class SpecialType { NovikovType, LieType, NovikovBialgebraOnly, LieBialgebraOnly, General };

const char* special_type_name(SpecialType t);

struct BialgebraData {
    AlgebraStructure alg;
    CoalgebraStructure co;

    BialgebraData() = default;
    BialgebraData(AlgebraStructure a, CoalgebraStructure c);
    int dim() const { return alg.dim(); }
};

// Novikov: algebra/coalgebra laws plus the three product-coproduct
// compatibilities; Lie: laws plus the cocycle condition; Gd: everything plus
// the mixed compatibility identity.
AxiomReport check_bialgebra(const BialgebraData& d, BialgebraLaw law);

// Requires d to pass check_bialgebra(Gd); throws input_error otherwise.
SpecialType classify_special(const BialgebraData& d);

}  // namespace gdlab
