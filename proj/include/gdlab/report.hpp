#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gdlab/rational.hpp"

namespace gdlab {

struct Violation {
    std::string axiom;          // identity that failed, e.g. "right-commutativity"
    std::vector<int> witness;   // 1-based basis indices instantiating the identity
    std::string defect;         // canonical rendering of the nonzero defect
};

struct AxiomReport {
    bool passed = true;
    std::vector<Violation> violations;

    void add(std::string axiom, std::vector<int> witness, std::string defect) {
        passed = false;
        violations.push_back({std::move(axiom), std::move(witness), std::move(defect)});
    }
    void merge(const AxiomReport& o) {
        passed = passed && o.passed;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
    // Merge with a prefix on the axiom ids, for reports built from sub-checks.
    void merge(const AxiomReport& o, const std::string& prefix) {
        passed = passed && o.passed;
        for (const auto& v : o.violations)
            violations.push_back({prefix + "/" + v.axiom, v.witness, v.defect});
    }
};

}  // namespace gdlab
