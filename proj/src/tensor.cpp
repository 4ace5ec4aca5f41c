#include "gdlab/tensor.hpp"

#include <algorithm>

namespace gdlab {

namespace {
template <typename T>
bool all_zero(const std::vector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](const T& x) { return x.is_zero(); });
}

void check_same_shape(int a, int b, const char* what) {
    if (a != b) throw input_error(std::string("dimension mismatch in ") + what);
}
}  // namespace

Vec Vec::basis(int n, int i) {
    Vec v(n);
    v[i] = MPoly(1);
    return v;
}

bool Vec::is_zero() const { return all_zero(e); }

Vec& Vec::operator+=(const Vec& o) {
    check_same_shape(dim, o.dim, "vector sum");
    for (int i = 0; i < dim; ++i) e[i] += o.e[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    check_same_shape(dim, o.dim, "vector difference");
    for (int i = 0; i < dim; ++i) e[i] -= o.e[i];
    return *this;
}

Vec Vec::operator-() const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = -e[i];
    return r;
}

Vec operator*(const MPoly& c, Vec a) {
    for (auto& x : a.e) x *= c;
    return a;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MPoly(1);
    return m;
}

bool Mat::is_zero() const { return all_zero(e); }

Mat& Mat::operator+=(const Mat& o) {
    check_same_shape(rows, o.rows, "matrix sum");
    check_same_shape(cols, o.cols, "matrix sum");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_same_shape(rows, o.rows, "matrix difference");
    check_same_shape(cols, o.cols, "matrix difference");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
}

Mat Mat::operator-() const {
    Mat r(rows, cols);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    check_same_shape(a.cols, b.rows, "matrix product");
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

Vec operator*(const Mat& m, const Vec& v) {
    check_same_shape(m.cols, v.dim, "matrix-vector product");
    Vec r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += m.at(i, j) * v[j];
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat determinant(const Mat& m) {
    check_same_shape(m.rows, m.cols, "determinant");
    const int n = m.rows;
    std::vector<Rat> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!m.at(i, j).is_constant())
                throw input_error("determinant requires constant entries");
            a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).constant_value();
        }
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[static_cast<std::size_t>(row) * n + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                          a[static_cast<std::size_t>(col) * n + j]);
            det = -det;
        }
        const Rat p = a[static_cast<std::size_t>(col) * n + col];
        det *= p;
        for (int row = col + 1; row < n; ++row) {
            const Rat f = a[static_cast<std::size_t>(row) * n + col] / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(row) * n + j] -=
                    f * a[static_cast<std::size_t>(col) * n + j];
        }
    }
    return det;
}

bool Tensor2::is_zero() const { return all_zero(e); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    check_same_shape(n1, o.n1, "tensor sum");
    check_same_shape(n2, o.n2, "tensor sum");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    check_same_shape(n1, o.n1, "tensor difference");
    check_same_shape(n2, o.n2, "tensor difference");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 r(n1, n2);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
    return r;
}

Tensor2 operator*(const MPoly& c, Tensor2 a) {
    for (auto& x : a.e) x *= c;
    return a;
}

bool Tensor3::is_zero() const { return all_zero(e); }

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    check_same_shape(n1, o.n1, "tensor sum");
    check_same_shape(n2, o.n2, "tensor sum");
    check_same_shape(n3, o.n3, "tensor sum");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    check_same_shape(n1, o.n1, "tensor difference");
    check_same_shape(n2, o.n2, "tensor difference");
    check_same_shape(n3, o.n3, "tensor difference");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 r(n1, n2, n3);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
    return r;
}

Tensor2 outer(const Vec& a, const Vec& b) {
    Tensor2 r(a.dim, b.dim);
    for (int i = 0; i < a.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < b.dim; ++j) {
            if (b[j].is_zero()) continue;
            r.at(i, j) = a[i] * b[j];
        }
    }
    return r;
}

Tensor3 outer(const Vec& a, const Vec& b, const Vec& c) {
    Tensor3 r(a.dim, b.dim, c.dim);
    for (int i = 0; i < a.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < b.dim; ++j) {
            if (b[j].is_zero()) continue;
            for (int k = 0; k < c.dim; ++k) {
                if (c[k].is_zero()) continue;
                r.at(i, j, k) = a[i] * b[j] * c[k];
            }
        }
    }
    return r;
}

namespace {
const std::array<Var, 3> kSlotVar = {Var::D1, Var::D2, Var::D3};
}

Tensor2 tensor_flip(const Tensor2& t, bool var_swap) {
    Tensor2 r(t.n2, t.n1);
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j) {
            MPoly c = t.at(i, j);
            if (c.is_zero()) continue;
            if (var_swap) {
                std::array<Var, kNumVars> image;
                for (int v = 0; v < kNumVars; ++v) image[v] = static_cast<Var>(v);
                image[static_cast<int>(Var::D1)] = Var::D2;
                image[static_cast<int>(Var::D2)] = Var::D1;
                c = c.rename(image);
            }
            r.at(j, i) = std::move(c);
        }
    return r;
}

Tensor3 tensor_permute(const Tensor3& t, const std::array<int, 3>& perm, bool var_swap) {
    const std::array<int, 3> dims = {t.n1, t.n2, t.n3};
    std::array<int, 3> ndims{};
    for (int s = 0; s < 3; ++s) ndims[perm[s]] = dims[s];
    Tensor3 r(ndims[0], ndims[1], ndims[2]);
    std::array<Var, kNumVars> image;
    for (int v = 0; v < kNumVars; ++v) image[v] = static_cast<Var>(v);
    for (int s = 0; s < 3; ++s) image[static_cast<int>(kSlotVar[s])] = kSlotVar[perm[s]];
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j)
            for (int k = 0; k < t.n3; ++k) {
                MPoly c = t.at(i, j, k);
                if (c.is_zero()) continue;
                if (var_swap) c = c.rename(image);
                const std::array<int, 3> old = {i, j, k};
                std::array<int, 3> ni{};
                for (int s = 0; s < 3; ++s) ni[perm[s]] = old[s];
                r.at(ni[0], ni[1], ni[2]) = std::move(c);
            }
    return r;
}

Tensor2 apply_to_factor(const Tensor2& t, int factor, const Mat& m) {
    if (factor < 0 || factor > 1) throw input_error("tensor factor out of range");
    const int fdim = factor == 0 ? t.n1 : t.n2;
    if (m.cols != fdim) throw input_error("dimension mismatch in apply_to_factor");
    Tensor2 r(factor == 0 ? m.rows : t.n1, factor == 1 ? m.rows : t.n2);
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j) {
            const MPoly& c = t.at(i, j);
            if (c.is_zero()) continue;
            const int src = factor == 0 ? i : j;
            for (int out = 0; out < m.rows; ++out) {
                const MPoly& w = m.at(out, src);
                if (w.is_zero()) continue;
                if (factor == 0)
                    r.at(out, j) += w * c;
                else
                    r.at(i, out) += w * c;
            }
        }
    return r;
}

Tensor3 apply_to_factor(const Tensor3& t, int factor, const Mat& m) {
    if (factor < 0 || factor > 2) throw input_error("tensor factor out of range");
    const std::array<int, 3> dims = {t.n1, t.n2, t.n3};
    if (m.cols != dims[factor]) throw input_error("dimension mismatch in apply_to_factor");
    std::array<int, 3> nd = dims;
    nd[factor] = m.rows;
    Tensor3 r(nd[0], nd[1], nd[2]);
    for (int i = 0; i < t.n1; ++i)
        for (int j = 0; j < t.n2; ++j)
            for (int k = 0; k < t.n3; ++k) {
                const MPoly& c = t.at(i, j, k);
                if (c.is_zero()) continue;
                const std::array<int, 3> idx = {i, j, k};
                for (int out = 0; out < m.rows; ++out) {
                    const MPoly& w = m.at(out, idx[factor]);
                    if (w.is_zero()) continue;
                    std::array<int, 3> ni = idx;
                    ni[factor] = out;
                    r.at(ni[0], ni[1], ni[2]) += w * c;
                }
            }
    return r;
}

}  // namespace gdlab
