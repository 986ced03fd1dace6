#pragma once
// Exact integer / rational matrices on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rs) {
        rows = rs.size();
        cols = rows ? rs.begin()->size() : 0;
        for (auto& r : rs)
            for (long v : r) a.emplace_back(v);
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rs, std::size_t ncols = 0) {
        Matrix m(rs.size(), rs.empty() ? ncols : rs[0].size());
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Matrix transpose() const {
        Matrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }
    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix m(rows, idx.size());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }
    bool is_zero() const {
        for (auto& x : a)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& x, const std::vector<T>& v) {
    std::vector<T> z(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) z[i] += x(i, k) * v[k];
    return z;
}

RatMatrix to_rat(const IntMatrix& m);
std::string to_string(const IntMatrix& m);
std::string to_string(const Rat& q);  // "p/q" or "p"
Rat parse_rational(const std::string& s);

// U*A*V = D
struct SnfDecomposition {
    IntMatrix U, D, V;
    std::vector<Int> diagonal() const;  // nonzero prefix of diag(D)
};

// A*U = H, H lower echelon in columns, positive pivots, entries before a pivot reduced mod it
struct HnfDecomposition {
    IntMatrix H, U;
    std::vector<std::size_t> pivot_rows;  // pivot row of column j, for j < rank
};

SnfDecomposition smith_normal_form(const IntMatrix& A);
HnfDecomposition hermite_normal_form(const IntMatrix& A);
Int lattice_index(const IntMatrix& A);
bool is_unimodular(const IntMatrix& A);
std::vector<RatVec> solve_congruence(const IntMatrix& A, const RatVec& b);

Int determinant(const IntMatrix& A);
std::size_t rank(const IntMatrix& A);
std::size_t rank(const RatMatrix& A);
// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& A);
// Some x with A x = b, or nothing.
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);
// Basis (as columns) of the rational kernel.
RatMatrix kernel(const RatMatrix& A);
// Integer basis (as columns) of {x in Z^n : A x = 0}; saturated.
IntMatrix integer_kernel(const IntMatrix& A);
// Rows form a basis of the saturation (Q-span ∩ Z^n) of the row lattice of A, in row-HNF.
IntMatrix saturate_rows(const IntMatrix& A);
// Canonical row basis (row-style HNF, zero rows dropped) of the row lattice.
IntMatrix row_hnf(const IntMatrix& A);
IntMatrix inverse_unimodular(const IntMatrix& A);
std::optional<RatMatrix> inverse(const RatMatrix& A);

// reduce q into [0,1)
Rat frac(const Rat& q);
Int floor_div(const Int& a, const Int& b);
Int gcd_all(const std::vector<Int>& v);

}  // namespace toric
