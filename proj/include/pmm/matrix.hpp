#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace pmm {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * c_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && data_ == o.data_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<FieldValue>;
using PolyMatrix = Matrix<Poly>;

inline ScalarMatrix zero_matrix(const FieldId& id, std::size_t n) { return ScalarMatrix(n, n, FieldValue::zero(id)); }

inline ScalarMatrix identity_matrix(const FieldId& id, std::size_t n) {
    ScalarMatrix m = zero_matrix(id, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldValue::one(id);
    return m;
}

inline FieldId matrix_field(const ScalarMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return FieldId::rationals();
    return a(0, 0).field();
}

// keep the rows and columns whose bits are set
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.empty() || cols.empty()) return Matrix<T>(rows.size(), cols.size(), T());
    Matrix<T> m(rows.size(), cols.size(), a(rows[0], cols[0]));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i], cols[j]);
    return m;
}

inline std::vector<std::size_t> index_range_without(std::size_t n, std::uint64_t removed) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
        if (!(removed >> k & 1U)) idx.push_back(k);
    return idx;
}

inline std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1U) idx.push_back(k);
    return idx;
}

// delete the rows in row_mask and the columns in col_mask
template <class T>
Matrix<T> delete_rows_cols(const Matrix<T>& a, std::uint64_t row_mask, std::uint64_t col_mask) {
    return submatrix(a, index_range_without(a.rows(), row_mask), index_range_without(a.cols(), col_mask));
}

template <class T>
Matrix<T> principal_submatrix(const Matrix<T>& a, std::uint64_t mask) {
    auto idx = mask_indices(mask, a.rows());
    return submatrix(a, idx, idx);
}

inline FieldValue det(ScalarMatrix m, const FieldId& id) {
    if (!m.square()) throw DomainError("det of non-square matrix");
    std::size_t n = m.rows();
    FieldValue result = FieldValue::one(id);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return FieldValue::zero(id);
        if (piv != k) {
            m.swap_rows(piv, k);
            result = -result;
        }
        result *= m(k, k);
        FieldValue inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            FieldValue factor = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return result;
}

inline FieldValue det(const ScalarMatrix& m) { return det(m, matrix_field(m)); }

inline std::size_t rank(ScalarMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        FieldValue inv = m(r, col).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            FieldValue factor = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

// fraction-free Bareiss elimination; exact division at each step
inline Poly det_bareiss(PolyMatrix m, const FieldId& id, int nvars) {
    if (!m.square()) throw DomainError("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly::constant(id, nvars, 1);
    int sign = 1;
    Poly prev = Poly::constant(id, nvars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return Poly(id, nvars);
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = divide_or_throw(t, prev, "Bareiss step");
            }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Laplace expansion along rows, memoized over column subsets; division-free
inline Poly det(const PolyMatrix& m, const FieldId& id, int nvars) {
    if (!m.square()) throw DomainError("det of non-square matrix");
    std::size_t n = m.rows();
    if (n > 16) return det_bareiss(m, id, nvars);
    std::vector<Poly> D(std::size_t{1} << n, Poly(id, nvars));
    D[0] = Poly::constant(id, nvars, 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int k = __builtin_popcountll(mask);
        std::size_t row = static_cast<std::size_t>(k - 1);
        Poly acc(id, nvars);
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1U)) continue;
            const Poly& rest = D[mask ^ (std::uint64_t{1} << j)];
            if (!m(row, j).is_zero() && !rest.is_zero()) {
                Poly t = m(row, j) * rest;
                if ((k - 1 + pos) % 2) acc -= t;
                else acc += t;
            }
            ++pos;
        }
        D[mask] = std::move(acc);
    }
    return D.back();
}

inline Poly det(const PolyMatrix& m) {
    if (m.rows() == 0) return Poly::constant(FieldId::rationals(), 0, 1);
    return det(m, m(0, 0).field(), m(0, 0).nvars());
}

// (i,j) entry is (-1)^{i+j} det of m with row j and column i removed
inline PolyMatrix adjugate(const PolyMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return m;
    const FieldId id = m(0, 0).field();
    int nv = m(0, 0).nvars();
    PolyMatrix adj(n, n, Poly(id, nv));
    if (n == 1) {
        adj(0, 0) = Poly::constant(id, nv, 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly c = det(delete_rows_cols(m, std::uint64_t{1} << j, std::uint64_t{1} << i), id, nv);
            adj(i, j) = (i + j) % 2 ? -c : c;
        }
    return adj;
}

// diag(x_1,…,x_n) + A over n variables
inline PolyMatrix diag_plus(const ScalarMatrix& a) {
    std::size_t n = a.rows();
    const FieldId id = matrix_field(a);
    int nv = static_cast<int>(n);
    PolyMatrix m(n, n, Poly(id, nv));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Poly::constant(a(i, j), nv);
            if (i == j) m(i, j) += Poly::variable(id, nv, static_cast<int>(i));
        }
    return m;
}

inline ScalarMatrix conj_transpose(const ScalarMatrix& a) {
    ScalarMatrix t(a.cols(), a.rows(), FieldValue::zero(matrix_field(a)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
    return t;
}

inline bool is_hermitian(const ScalarMatrix& a) { return a.square() && conj_transpose(a) == a; }

inline ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product size mismatch");
    const FieldId id = matrix_field(a);
    ScalarMatrix c(a.rows(), b.cols(), FieldValue::zero(id));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline ScalarMatrix change_field(const ScalarMatrix& a, const FieldId& target) {
    ScalarMatrix b(a.rows(), a.cols(), FieldValue::zero(target));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = embed(a(i, j), target);
    return b;
}

inline ScalarMatrix random_matrix(const FieldId& id, std::size_t n, std::mt19937_64& rng, long num_bound = 5, long den_bound = 1) {
    ScalarMatrix a = zero_matrix(id, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_value(id, rng, num_bound, den_bound);
    return a;
}

// conj(A) = Aᵀ: fixed-field diagonal, mirrored off-diagonal
inline ScalarMatrix random_hermitian(const FieldId& id, std::size_t n, std::mt19937_64& rng, long num_bound = 3, long den_bound = 1) {
    ScalarMatrix a = zero_matrix(id, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = random_fixed_value(id, rng, num_bound, den_bound);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = random_value(id, rng, num_bound, den_bound);
            a(j, i) = a(i, j).conj();
        }
    }
    return a;
}

inline std::string matrix_to_string(const ScalarMatrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j) s += (j ? "," : "") + a(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

}  // namespace pmm
