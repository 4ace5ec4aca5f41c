#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "gdlab/rational.hpp"

namespace gdlab {

// The fixed variable alphabet. D is the module variable ∂; D1..D3 are the
// per-tensor-slot copies of ∂; Lambda and Mu are the bracket variables.
enum class Var : int { D = 0, D1 = 1, D2 = 2, D3 = 3, Lambda = 4, Mu = 5 };

inline constexpr int kNumVars = 6;

const std::string& var_name(Var v);

// Throws input_error for names outside the alphabet.
Var var_from_name(const std::string& name);

using Expo = std::array<std::uint8_t, kNumVars>;

// Graded lexicographic order; earlier alphabet position is more significant.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const noexcept;
};

// Multivariate polynomial over Q in the fixed alphabet. Terms are kept in
// canonical order with no zero coefficients, so operator== is structural.
class MPoly {
  public:
    using TermMap = std::map<Expo, Rat, GradedLexLess>;

    MPoly() = default;
    MPoly(int c) : MPoly(Rat(c)) {}
    explicit MPoly(const Rat& c);
    static MPoly variable(Var v, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 for the zero polynomial
    int degree(Var v) const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    // Eliminates v by substituting `replacement` for it; exact and total.
    MPoly substitute(Var v, const MPoly& replacement) const;

    // Simultaneous renaming of variables (used by tensor flips that swap the
    // per-slot ∂ variables).
    MPoly rename(const std::array<Var, kNumVars>& image) const;
    MPoly rename(Var from, Var to) const;

    // Positive gcd of all coefficients; 0 for the zero polynomial.
    Rat content() const;

    void add_term(const Expo& e, const Rat& c);

  private:
    TermMap terms_;
};

MPoly pow(const MPoly& base, int exponent);

}  // namespace gdlab
