#include "gdlab/io.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace gdlab {

using nlohmann::json;

namespace {

Rat parse_entry(const json& v, const char* what) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
        const long long den = v[1].get<long long>();
        if (den <= 0) throw input_error(std::string(what) + ": denominator must be positive");
        return make_rat(v[0].get<long long>(), den);
    }
    throw input_error(std::string(what) + ": entries must be integers or [num, den] pairs");
}

int parse_index(const json& v, int dim, const char* what) {
    if (!v.is_number_integer()) throw input_error(std::string(what) + ": index must be an integer");
    const long long i = v.get<long long>();
    if (i < 1 || i > dim) throw input_error(std::string(what) + ": index out of range");
    return static_cast<int>(i - 1);
}

// [i, j, k, num, den] rows; `setter` receives 0-based indices and the value.
template <typename F>
void parse_tuples(const json& arr, int dim, const char* what, F&& setter) {
    if (!arr.is_array()) throw input_error(std::string(what) + ": expected an array of tuples");
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 5)
            throw input_error(std::string(what) + ": each tuple must be [i, j, k, num, den]");
        const int a = parse_index(row[0], dim, what);
        const int b = parse_index(row[1], dim, what);
        const int c = parse_index(row[2], dim, what);
        if (!row[3].is_number_integer() || !row[4].is_number_integer())
            throw input_error(std::string(what) + ": coefficients must be integers");
        const long long den = row[4].get<long long>();
        if (den <= 0) throw input_error(std::string(what) + ": denominator must be positive");
        setter(a, b, c, make_rat(row[3].get<long long>(), den));
    }
}

Mat parse_matrix(const json& v, const char* what) {
    if (!v.is_array() || v.empty()) throw input_error(std::string(what) + ": expected a matrix");
    const int rows = static_cast<int>(v.size());
    const int cols = v[0].is_array() ? static_cast<int>(v[0].size()) : -1;
    if (cols <= 0) throw input_error(std::string(what) + ": expected a matrix of rows");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols)
            throw input_error(std::string(what) + ": ragged matrix");
        for (int j = 0; j < cols; ++j) m.at(i, j) = MPoly(parse_entry(v[i][j], what));
    }
    return m;
}

json rat_to_json(const Rat& c) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(c) == 1) return json(numerator(c).convert_to<long long>());
    return json::array(
        {numerator(c).convert_to<long long>(), denominator(c).convert_to<long long>()});
}

}  // namespace

ZinbielData StructureFile::zinbiel(const Rat& xi, const Rat& k) const {
    if (!has_dot || !has_D) throw input_error("zinbiel input needs 'dot' and 'D' tables");
    ZinbielData z;
    z.dim = dim;
    z.dot = dot;
    z.D = D;
    z.xi = xi;
    z.kparam = k;
    return z;
}

StructureFile parse_structure_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("structure file must be a JSON object");

    static const std::set<std::string> known = {"dim", "basis",   "circ", "bracket", "Delta",
                                                "delta0", "lhd",  "rhd",  "diamond", "dot",
                                                "D",      "rep",  "T",    "r",       "form"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw input_error("unknown key in structure file: " + key);

    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw input_error("structure file needs an integer 'dim'");
    StructureFile f;
    f.dim = j["dim"].get<int>();
    if (f.dim <= 0) throw input_error("'dim' must be positive");
    const int n = f.dim;

    f.basis = default_labels(n);
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != n)
            throw input_error("'basis' must list one label per dimension");
        for (int i = 0; i < n; ++i) {
            if (!j["basis"][i].is_string()) throw input_error("'basis' labels must be strings");
            f.basis[static_cast<std::size_t>(i)] = j["basis"][i].get<std::string>();
        }
    }

    f.alg = AlgebraStructure(n);
    f.alg.set_labels(f.basis);
    f.co = CoalgebraStructure(n);
    f.co.set_labels(f.basis);
    f.pre = PreGDStructure(n);
    f.dot.assign(static_cast<std::size_t>(n) * n * n, Rat(0));

    if (j.contains("circ")) {
        f.has_circ = true;
        parse_tuples(j["circ"], n, "circ",
                     [&](int a, int b, int c, const Rat& v) { f.alg.set_circ(a, b, c, v); });
    }
    if (j.contains("bracket")) {
        f.has_bracket = true;
        parse_tuples(j["bracket"], n, "bracket",
                     [&](int a, int b, int c, const Rat& v) { f.alg.set_bracket(a, b, c, v); });
    }
    if (j.contains("Delta")) {
        f.has_Delta = true;
        parse_tuples(j["Delta"], n, "Delta",
                     [&](int k, int a, int b, const Rat& v) { f.co.set_Delta(k, a, b, v); });
    }
    if (j.contains("delta0")) {
        f.has_delta0 = true;
        parse_tuples(j["delta0"], n, "delta0",
                     [&](int k, int a, int b, const Rat& v) { f.co.set_delta0(k, a, b, v); });
    }
    if (j.contains("lhd")) {
        f.has_pre = true;
        parse_tuples(j["lhd"], n, "lhd", [&](int a, int b, int c, const Rat& v) {
            f.pre.lhd[f.pre.idx(a, b, c)] = v;
        });
    }
    if (j.contains("rhd")) {
        f.has_pre = true;
        parse_tuples(j["rhd"], n, "rhd", [&](int a, int b, int c, const Rat& v) {
            f.pre.rhd[f.pre.idx(a, b, c)] = v;
        });
    }
    if (j.contains("diamond")) {
        f.has_pre = true;
        parse_tuples(j["diamond"], n, "diamond", [&](int a, int b, int c, const Rat& v) {
            f.pre.diamond[f.pre.idx(a, b, c)] = v;
        });
    }
    if (j.contains("dot")) {
        f.has_dot = true;
        parse_tuples(j["dot"], n, "dot", [&](int a, int b, int c, const Rat& v) {
            f.dot[(static_cast<std::size_t>(a) * n + b) * n + c] = v;
        });
    }
    if (j.contains("D")) {
        f.has_D = true;
        f.D = parse_matrix(j["D"], "D");
        if (f.D.rows != n || f.D.cols != n) throw input_error("'D' must be dim×dim");
    }
    if (j.contains("rep")) {
        f.has_rep = true;
        const json& r = j["rep"];
        if (!r.is_object()) throw input_error("'rep' must be an object with l, r, rho");
        for (const auto& [key, _] : r.items())
            if (key != "l" && key != "r" && key != "rho")
                throw input_error("unknown key in rep: " + key);
        int m = -1;
        auto parse_maps = [&](const char* key) -> std::vector<Mat> {
            if (!r.contains(key)) return {};
            const json& arr = r[key];
            if (!arr.is_array() || static_cast<int>(arr.size()) != n)
                throw input_error(std::string("rep.") + key + " must hold one matrix per basis element");
            std::vector<Mat> maps;
            for (const auto& mj : arr) {
                Mat M = parse_matrix(mj, key);
                if (M.rows != M.cols) throw input_error("rep matrices must be square");
                if (m < 0) m = M.rows;
                if (M.rows != m) throw input_error("rep matrices must share one size");
                maps.push_back(std::move(M));
            }
            return maps;
        };
        auto l = parse_maps("l"), rr = parse_maps("r"), rho = parse_maps("rho");
        if (m < 0) throw input_error("'rep' needs at least one of l, r, rho");
        f.rep = Representation(n, m);
        if (!l.empty()) f.rep.l = std::move(l);
        if (!rr.empty()) f.rep.r = std::move(rr);
        if (!rho.empty()) f.rep.rho = std::move(rho);
    }
    if (j.contains("T")) {
        f.has_T = true;
        f.T = parse_matrix(j["T"], "T");
        if (f.T.rows != n) throw input_error("'T' must have dim rows");
    }
    if (j.contains("r")) {
        f.has_r = true;
        if (!j["r"].is_array()) throw input_error("'r' must be an array of [i, j, num, den]");
        f.r = RMatrix(n);
        for (const auto& row : j["r"]) {
            if (!row.is_array() || row.size() != 4)
                throw input_error("'r' rows must be [i, j, num, den]");
            const int a = parse_index(row[0], n, "r");
            const int b = parse_index(row[1], n, "r");
            if (!row[2].is_number_integer() || !row[3].is_number_integer())
                throw input_error("'r' coefficients must be integers");
            const long long den = row[3].get<long long>();
            if (den <= 0) throw input_error("'r': denominator must be positive");
            f.r.set(a, b, f.r.get(a, b) + make_rat(row[2].get<long long>(), den));
        }
    }
    if (j.contains("form")) {
        f.has_form = true;
        f.form = BilinearForm(n);
        f.form.gram = parse_matrix(j["form"], "form");
        if (f.form.gram.rows != n || f.form.gram.cols != n)
            throw input_error("'form' must be dim×dim");
    }
    return f;
}

StructureFile load_structure_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_structure_file(text);
}

json algebra_to_json(const AlgebraStructure& alg) {
    json j;
    j["dim"] = alg.dim();
    j["basis"] = alg.labels();
    json circ = json::array(), bracket = json::array();
    for (int i = 0; i < alg.dim(); ++i)
        for (int jj = 0; jj < alg.dim(); ++jj)
            for (int k = 0; k < alg.dim(); ++k) {
                const Rat& c = alg.circ(i, jj, k);
                if (c != 0)
                    circ.push_back(json::array(
                        {i + 1, jj + 1, k + 1,
                         boost::multiprecision::numerator(c).convert_to<long long>(),
                         boost::multiprecision::denominator(c).convert_to<long long>()}));
                const Rat& b = alg.bracket(i, jj, k);
                if (b != 0)
                    bracket.push_back(json::array(
                        {i + 1, jj + 1, k + 1,
                         boost::multiprecision::numerator(b).convert_to<long long>(),
                         boost::multiprecision::denominator(b).convert_to<long long>()}));
            }
    if (!circ.empty()) j["circ"] = circ;
    if (!bracket.empty()) j["bracket"] = bracket;
    return j;
}

void merge_coalgebra_json(json& j, const CoalgebraStructure& co) {
    json Delta = json::array(), delta0 = json::array();
    for (int k = 0; k < co.dim(); ++k)
        for (int a = 0; a < co.dim(); ++a)
            for (int b = 0; b < co.dim(); ++b) {
                const Rat& D = co.Delta(k, a, b);
                if (D != 0)
                    Delta.push_back(json::array(
                        {k + 1, a + 1, b + 1,
                         boost::multiprecision::numerator(D).convert_to<long long>(),
                         boost::multiprecision::denominator(D).convert_to<long long>()}));
                const Rat& d = co.delta0(k, a, b);
                if (d != 0)
                    delta0.push_back(json::array(
                        {k + 1, a + 1, b + 1,
                         boost::multiprecision::numerator(d).convert_to<long long>(),
                         boost::multiprecision::denominator(d).convert_to<long long>()}));
            }
    if (!Delta.empty()) j["Delta"] = Delta;
    if (!delta0.empty()) j["delta0"] = delta0;
}

void merge_r_json(json& j, const RMatrix& r) {
    json arr = json::array();
    for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) {
            const Rat c = r.get(a, b);
            if (c != 0)
                arr.push_back(
                    json::array({a + 1, b + 1,
                                 boost::multiprecision::numerator(c).convert_to<long long>(),
                                 boost::multiprecision::denominator(c).convert_to<long long>()}));
        }
    j["r"] = arr;
}

void merge_form_json(json& j, const BilinearForm& form) {
    json m = json::array();
    for (int i = 0; i < form.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < form.dim; ++k) row.push_back(rat_to_json(form.gram.at(i, k).constant_value()));
        m.push_back(row);
    }
    j["form"] = m;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gdlab
