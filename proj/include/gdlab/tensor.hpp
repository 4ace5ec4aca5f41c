#pragma once

#include <array>
#include <vector>

#include "gdlab/mpoly.hpp"

namespace gdlab {

// Coefficient vector over the polynomial ring; elements of A or of k[∂]A are
// both represented this way (the latter with ∂-dependent entries).
struct Vec {
    int dim = 0;
    std::vector<MPoly> e;

    Vec() = default;
    explicit Vec(int n) : dim(n), e(static_cast<std::size_t>(n)) {}
    static Vec basis(int n, int i);

    MPoly& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    const MPoly& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec operator-() const;
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const MPoly& c, Vec a);
    bool operator==(const Vec&) const = default;
};

struct Mat {
    int rows = 0, cols = 0;
    std::vector<MPoly> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
    static Mat identity(int n);

    MPoly& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const MPoly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat operator-() const;
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& m, const Vec& v);
    Mat transpose() const;
    bool operator==(const Mat&) const = default;
};

// Exact determinant; entries must be constant polynomials.
Rat determinant(const Mat& m);

struct Tensor2 {
    int n1 = 0, n2 = 0;
    std::vector<MPoly> e;

    Tensor2() = default;
    Tensor2(int a, int b) : n1(a), n2(b), e(static_cast<std::size_t>(a) * b) {}

    MPoly& at(int i, int j) { return e[static_cast<std::size_t>(i) * n2 + j]; }
    const MPoly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n2 + j]; }

    bool is_zero() const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2 operator-() const;
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const MPoly& c, Tensor2 a);
    bool operator==(const Tensor2&) const = default;
};

struct Tensor3 {
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<MPoly> e;

    Tensor3() = default;
    Tensor3(int a, int b, int c)
        : n1(a), n2(b), n3(c), e(static_cast<std::size_t>(a) * b * c) {}

    MPoly& at(int i, int j, int k) {
        return e[(static_cast<std::size_t>(i) * n2 + j) * n3 + k];
    }
    const MPoly& at(int i, int j, int k) const {
        return e[(static_cast<std::size_t>(i) * n2 + j) * n3 + k];
    }

    bool is_zero() const;
    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    Tensor3 operator-() const;
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    bool operator==(const Tensor3&) const = default;
};

Tensor2 outer(const Vec& a, const Vec& b);
Tensor3 outer(const Vec& a, const Vec& b, const Vec& c);

// Flip operator τ. When var_swap is set the per-slot ∂ variables are renamed
// along with the slots, which is the flip on R⊗R rather than on A⊗A.
Tensor2 tensor_flip(const Tensor2& t, bool var_swap);

// perm maps old slot positions to new ones: result slot perm[s] holds what
// slot s held. Variable renaming follows the slots when var_swap is set.
Tensor3 tensor_permute(const Tensor3& t, const std::array<int, 3>& perm, bool var_swap);

Tensor2 apply_to_factor(const Tensor2& t, int factor, const Mat& m);
Tensor3 apply_to_factor(const Tensor3& t, int factor, const Mat& m);

}  // namespace gdlab
