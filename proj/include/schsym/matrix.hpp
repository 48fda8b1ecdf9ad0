#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schsym/rational.hpp"
#include "schsym/upoly.hpp"

namespace schsym {

using Vec = std::vector<GaussianRational>;

/// Dense matrix over the Gaussian rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    GaussianRational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Vec row(size_t i) const {
        Vec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    GaussianRational trace() const {
        GaussianRational s;
        for (size_t i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const GaussianRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const GaussianRational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator*(const GaussianRational& s, Matrix a) {
        for (auto& v : a.data_) v *= s;
        return a;
    }
    friend Vec operator*(const Matrix& a, const Vec& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in apply");
        Vec r(a.rows_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j)
                if (!a.at(i, j).is_zero() && !v[j].is_zero()) r[i] += a.at(i, j) * v[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// In-place Gauss-Jordan to reduced row echelon form; returns the pivot
/// columns in ascending order. Pivots are chosen as the first nonzero
/// entry top-down, so the result is deterministic.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        GaussianRational inv = m.at(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GaussianRational f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Matrix m) { return rref(m).size(); }

/// Basis of {v : m v = 0}, one vector per free column, free columns taken
/// in ascending order. Each basis vector has a 1 in its free column.
inline std::vector<Vec> nullspace(Matrix m) {
    size_t nc = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc);
        v[f] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial det(sI - M), monic, by the Faddeev-LeVerrier
/// recurrence (division-free apart from exact scalar divisions).
inline UPoly char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix required");
    size_t d = m.rows();
    std::vector<GaussianRational> cs(d + 1);
    cs[d] = GaussianRational(1);  // coefficient of s^d
    Matrix mk = m;
    for (size_t k = 1; k <= d; ++k) {
        GaussianRational ck = -mk.trace() / GaussianRational(static_cast<int>(k));
        cs[d - k] = ck;
        if (k < d) mk = m * (mk + ck * Matrix::identity(d));
    }
    return UPoly(std::move(cs));
}

}  // namespace schsym
