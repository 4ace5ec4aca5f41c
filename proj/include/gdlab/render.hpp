#pragma once

#include <string>
#include <vector>

#include "gdlab/tensor.hpp"

namespace gdlab {

// Canonical text renderings. Golden files and CLI output are compared
// byte-for-byte, so every choice here (term order, spacing, unicode signs)
// is part of the format: terms run in descending graded-lex order with
// variable significance ∂ > ∂1 > ∂2 > ∂3 > λ > μ, cells in ascending
// (row, column) order, and the minus sign is U+2212.

std::vector<std::string> default_labels(int dim);

// Polynomial with no-space joins, e.g. "∂+2λ", "∂−2λ−1".
std::string render_poly(const MPoly& p);

// Coefficient as it appears in front of a basis vector in a λ-bracket line:
// single monomials inline ("λ", "2λ", "∂"), longer polynomials in parentheses
// with their positive content factored out ("(∂+λ)", "2(∂+2λ)").
std::string render_coefficient(const MPoly& p);

// "λ e2", "2(∂+2λ) e2 + e3", "0".
std::string render_vec(const Vec& v, const std::vector<std::string>& labels);

// Flat tensor rendering: "∂e1⊗e2 − e2⊗∂e1", slot variables ∂1/∂2 printed as ∂
// attached to their factor.
std::string render_tensor2(const Tensor2& t, const std::vector<std::string>& labels);
std::string render_tensor2(const Tensor2& t, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels);
std::string render_tensor3(const Tensor3& t, const std::vector<std::string>& labels);

// Rendering for cobracket values: when the tensor is antisymmetric under the
// variable-swapping flip, terms are grouped into "c(m − τm)" pairs the way the
// formulas display them; otherwise falls back to the flat form.
std::string render_antisym_tensor2(const Tensor2& t, const std::vector<std::string>& labels);

std::string render_lambda_line(const std::string& left, const std::string& right,
                               const Vec& value, const std::vector<std::string>& labels);

}  // namespace gdlab
