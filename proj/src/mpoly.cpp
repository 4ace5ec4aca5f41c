#include "gdlab/mpoly.hpp"

#include <vector>

namespace gdlab {

namespace {
const std::array<std::string, kNumVars> kVarNames = {"∂",  "∂1", "∂2",
                                                     "∂3", "λ",  "μ"};
}  // namespace

const std::string& var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    // ASCII aliases so files and python callers do not need unicode input.
    static const std::array<std::string, kNumVars> ascii = {"d", "d1", "d2", "d3", "lambda", "mu"};
    for (int i = 0; i < kNumVars; ++i)
        if (ascii[i] == name) return static_cast<Var>(i);
    throw input_error("unknown variable name: " + name);
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const noexcept {
    int da = 0, db = 0;
    for (int i = 0; i < kNumVars; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Expo{}, c);
}

MPoly MPoly::variable(Var v, int exponent) {
    MPoly p;
    if (exponent < 0) throw input_error("negative exponent");
    Expo e{};
    e[static_cast<int>(v)] = static_cast<std::uint8_t>(exponent);
    p.terms_.emplace(e, Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Expo{};
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw input_error("polynomial is not constant");
    return terms_.begin()->second;
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
    return d;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e;
            for (int i = 0; i < kNumVars; ++i) {
                const int s = ea[i] + eb[i];
                if (s > 255) throw input_error("polynomial degree overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly pow(const MPoly& base, int exponent) {
    MPoly r(1);
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

MPoly MPoly::substitute(Var v, const MPoly& replacement) const {
    const int vi = static_cast<int>(v);
    MPoly result;
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) {
            result.add_term(e, c);
            continue;
        }
        Expo rest = e;
        rest[vi] = 0;
        MPoly mono;
        mono.terms_.emplace(rest, c);
        result += mono * pow(replacement, e[vi]);
    }
    return result;
}

MPoly MPoly::rename(const std::array<Var, kNumVars>& image) const {
    MPoly result;
    for (const auto& [e, c] : terms_) {
        Expo ne{};
        for (int i = 0; i < kNumVars; ++i) {
            const int target = static_cast<int>(image[i]);
            const int s = ne[target] + e[i];
            if (s > 255) throw input_error("polynomial degree overflow");
            ne[target] = static_cast<std::uint8_t>(s);
        }
        result.add_term(ne, c);
    }
    return result;
}

MPoly MPoly::rename(Var from, Var to) const {
    std::array<Var, kNumVars> image;
    for (int i = 0; i < kNumVars; ++i) image[i] = static_cast<Var>(i);
    image[static_cast<int>(from)] = to;
    return rename(image);
}

Rat MPoly::content() const {
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    return g;
}

}  // namespace gdlab
