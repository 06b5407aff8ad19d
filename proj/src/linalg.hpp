#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace vircat {

// Dense matrix over an exact field (Rational or GaussianRational).
template <class K>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    K& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = K(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows)
            throw DomainError("matrix dimension mismatch in product");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const K& v = x.at(i, k);
                if (v == K(0))
                    continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw DomainError("matrix dimension mismatch in sum");
        Mat r = x;
        for (std::size_t k = 0; k < r.a.size(); ++k)
            r.a[k] += y.a[k];
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) { return x + y.scaled(K(-1)); }

    Mat scaled(const K& s) const {
        Mat r = *this;
        for (auto& v : r.a)
            v *= s;
        return r;
    }

    Mat transposed() const {
        Mat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (!(v == K(0)))
                return false;
        return true;
    }
};

// Row-reduce in place; returns pivot column per pivot row.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (!(m.at(i, col) == K(0))) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(row, j));
        K inv = K(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j)
            m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row)
                continue;
            K f = m.at(i, col);
            if (f == K(0))
                continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<K> v(m.cols, K(0));
        v[free] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = K(0) - m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
K determinant(Mat<K> m) {
    if (m.rows != m.cols)
        throw DomainError("determinant of non-square matrix");
    K det(1);
    for (int col = 0; col < m.cols; ++col) {
        int pr = -1;
        for (int i = col; i < m.rows; ++i)
            if (!(m.at(i, col) == K(0))) {
                pr = i;
                break;
            }
        if (pr < 0)
            return K(0);
        if (pr != col) {
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(col, j));
            det *= K(-1);
        }
        det *= m.at(col, col);
        K inv = K(1) / m.at(col, col);
        for (int i = col + 1; i < m.rows; ++i) {
            K f = m.at(i, col) * inv;
            if (f == K(0))
                continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
    if (m.rows != m.cols)
        throw DomainError("inverse of non-square matrix");
    int n = m.rows;
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Mat<K> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace vircat
