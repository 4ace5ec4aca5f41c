#include "gdlab/render.hpp"

#include <algorithm>
#include <optional>

namespace gdlab {

namespace {

const char* kMinus = "−";
const char* kOtimes = "⊗";
const char* kPartial = "∂";

std::string exponent_suffix(int k) { return k >= 2 ? "^" + std::to_string(k) : ""; }

// The scalar-variable part of a monomial (everything except the slot
// variables ∂1..∂3, which attach to tensor factors instead).
std::string scalar_var_part(const Expo& e) {
    std::string s;
    static const Var scalar_vars[] = {Var::D, Var::Lambda, Var::Mu};
    for (Var v : scalar_vars) {
        const int k = e[static_cast<int>(v)];
        if (k > 0) s += var_name(v) + exponent_suffix(k);
    }
    return s;
}

// "2λ", "−∂", "3/2", "λ" — one monomial, sign included.
std::string render_monomial(const Expo& e, const Rat& c) {
    const std::string vars = scalar_var_part(e);
    if (vars.empty()) {
        std::string s = to_string(c);
        if (!s.empty() && s[0] == '-') s = std::string(kMinus) + s.substr(1);
        return s;
    }
    if (c == 1) return vars;
    if (c == -1) return kMinus + vars;
    std::string s = to_string(c);
    if (!s.empty() && s[0] == '-') s = std::string(kMinus) + s.substr(1);
    return s + vars;
}

// Joins already-signed pieces with " + " / " − ", pulling the sign of each
// piece into the connector.
void join_piece(std::string& out, const std::string& piece) {
    const std::string minus(kMinus);
    const bool neg = piece.rfind(minus, 0) == 0;
    if (out.empty()) {
        out = piece;
        return;
    }
    if (neg)
        out += " " + minus + " " + piece.substr(minus.size());
    else
        out += " + " + piece;
}

std::string factor_with_partial(int exp, const std::string& label) {
    if (exp == 0) return label;
    return std::string(kPartial) + exponent_suffix(exp) + label;
}

struct FlatTerm {
    int i, j, k;      // cell (k = -1 for 2-tensors)
    Expo e;
    Rat c;
};

std::string render_flat_term2(const FlatTerm& t, const std::vector<std::string>& rows,
                              const std::vector<std::string>& cols) {
    const std::string body = factor_with_partial(t.e[static_cast<int>(Var::D1)], rows[t.i]) +
                             kOtimes +
                             factor_with_partial(t.e[static_cast<int>(Var::D2)], cols[t.j]);
    const std::string scal = scalar_var_part(t.e);
    std::string coeff;
    if (t.c == 1)
        coeff = "";
    else if (t.c == -1)
        coeff = kMinus;
    else {
        coeff = to_string(t.c);
        if (coeff[0] == '-') coeff = std::string(kMinus) + coeff.substr(1);
        coeff += scal.empty() ? " " : "";
    }
    return coeff + scal + (scal.empty() ? "" : " ") + body;
}

}  // namespace

std::vector<std::string> default_labels(int dim) {
    std::vector<std::string> l(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) l[static_cast<std::size_t>(i)] = "e" + std::to_string(i + 1);
    return l;
}

std::string render_poly(const MPoly& p) {
    if (p.is_zero()) return "0";
    const std::string minus(kMinus);
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string piece = render_monomial(it->first, it->second);
        if (out.empty()) {
            out = piece;
        } else if (piece.rfind(minus, 0) == 0) {
            out += minus + piece.substr(minus.size());
        } else {
            out += "+" + piece;
        }
    }
    return out;
}

std::string render_coefficient(const MPoly& p) {
    if (p.is_zero()) return "0";
    if (p.term_count() == 1) {
        const auto& [e, c] = *p.terms().begin();
        return render_monomial(e, c);
    }
    const Rat g = p.content();
    if (g == 1) return "(" + render_poly(p) + ")";
    MPoly primitive = p;
    primitive *= Rat(1) / g;
    return to_string(g) + "(" + render_poly(primitive) + ")";
}

std::string render_vec(const Vec& v, const std::vector<std::string>& labels) {
    if (v.is_zero()) return "0";
    std::string out;
    for (int k = 0; k < v.dim; ++k) {
        const MPoly& p = v[k];
        if (p.is_zero()) continue;
        std::string coeff = render_coefficient(p);
        std::string piece;
        if (coeff == "1")
            piece = labels[static_cast<std::size_t>(k)];
        else if (coeff == kMinus + std::string("1"))
            piece = kMinus + labels[static_cast<std::size_t>(k)];
        else
            piece = coeff + " " + labels[static_cast<std::size_t>(k)];
        join_piece(out, piece);
    }
    return out;
}

std::string render_tensor2(const Tensor2& t, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols) {
    if (t.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j) {
            const MPoly& p = t.at(i, j);
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                join_piece(out, render_flat_term2({i, j, -1, it->first, it->second}, rows, cols));
        }
    return out;
}

std::string render_tensor2(const Tensor2& t, const std::vector<std::string>& labels) {
    return render_tensor2(t, labels, labels);
}

std::string render_tensor3(const Tensor3& t, const std::vector<std::string>& labels) {
    if (t.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j)
            for (int k = 0; k < t.n3; ++k) {
                const MPoly& p = t.at(i, j, k);
                for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                    const Expo& e = it->first;
                    const std::string body =
                        factor_with_partial(e[static_cast<int>(Var::D1)], labels[i]) + kOtimes +
                        factor_with_partial(e[static_cast<int>(Var::D2)], labels[j]) + kOtimes +
                        factor_with_partial(e[static_cast<int>(Var::D3)], labels[k]);
                    const std::string scal = scalar_var_part(e);
                    std::string coeff;
                    const Rat& c = it->second;
                    if (c == 1)
                        coeff = "";
                    else if (c == -1)
                        coeff = kMinus;
                    else {
                        coeff = to_string(c);
                        if (coeff[0] == '-') coeff = std::string(kMinus) + coeff.substr(1);
                        coeff += scal.empty() ? " " : "";
                    }
                    join_piece(out, coeff + scal + (scal.empty() ? "" : " ") + body);
                }
            }
    return out;
}

std::string render_antisym_tensor2(const Tensor2& t, const std::vector<std::string>& labels) {
    if (t.is_zero()) return "0";
    if (t.n1 != t.n2 || tensor_flip(t, true) != -t) return render_tensor2(t, labels);

    struct Group {
        FlatTerm rep;  // the positive-coefficient member of the pair
    };
    std::vector<FlatTerm> terms;
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j)
            for (const auto& [e, c] : t.at(i, j).terms()) terms.push_back({i, j, -1, e, c});

    auto swapped = [](Expo e) {
        std::swap(e[static_cast<int>(Var::D1)], e[static_cast<int>(Var::D2)]);
        return e;
    };
    std::vector<Group> groups;
    std::vector<bool> used(terms.size(), false);
    for (std::size_t a = 0; a < terms.size(); ++a) {
        if (used[a] || terms[a].c < 0) continue;
        const Expo mate = swapped(terms[a].e);
        for (std::size_t b = 0; b < terms.size(); ++b) {
            if (used[b] || b == a) continue;
            if (terms[b].i == terms[a].j && terms[b].j == terms[a].i && terms[b].e == mate &&
                terms[b].c == -terms[a].c) {
                used[a] = used[b] = true;
                groups.push_back({terms[a]});
                break;
            }
        }
    }
    std::sort(groups.begin(), groups.end(), [](const Group& x, const Group& y) {
        if (x.rep.i != y.rep.i) return x.rep.i < y.rep.i;
        if (x.rep.j != y.rep.j) return x.rep.j < y.rep.j;
        return GradedLexLess{}(y.rep.e, x.rep.e);
    });

    std::string out;
    for (const auto& g : groups) {
        const Expo mate = swapped(g.rep.e);
        const std::string m1 = render_flat_term2({g.rep.i, g.rep.j, -1, g.rep.e, Rat(1)},
                                                 labels, labels);
        const std::string m2 =
            render_flat_term2({g.rep.j, g.rep.i, -1, mate, Rat(1)}, labels, labels);
        const std::string body = m1 + " " + kMinus + " " + m2;
        std::string piece;
        if (g.rep.c == 1)
            piece = groups.size() == 1 ? body : "(" + body + ")";
        else
            piece = to_string(g.rep.c) + "(" + body + ")";
        join_piece(out, piece);
    }
    return out;
}

std::string render_lambda_line(const std::string& left, const std::string& right,
                               const Vec& value, const std::vector<std::string>& labels) {
    return "[" + left + " _λ " + right + "] = " + render_vec(value, labels);
}

}  // namespace gdlab
