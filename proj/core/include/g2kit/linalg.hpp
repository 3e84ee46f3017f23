#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

/// Dense matrix over an exact field (Rational or GaussianRational).
/// Sized for the small representation-theoretic systems that arise here
/// (at most a few dozen rows), so plain fraction-arithmetic Gauss-Jordan
/// elimination is entirely adequate.
template <typename F>
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return data_[i * cols_ + j]; }
    const F& at(int i, int j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix out = a;
        for (auto& v : out.data_) v = s * v;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix: apply size");
        std::vector<F> y(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: size mismatch");
    }

    int rows_, cols_;
    std::vector<F> data_;
};

/// Reduced row echelon form; returns the pivot column of each pivot row.
template <typename F>
std::vector<int> rref_in_place(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        F inv = F(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            F factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename F>
int rank(Matrix<F> m) {
    return static_cast<int>(rref_in_place(m).size());
}

/// Basis of the kernel {x : Mx = 0}.
template <typename F>
std::vector<std::vector<F>> nullspace_basis(Matrix<F> m) {
    const int n = m.cols();
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<F> v(n, F(0));
        v[freec] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves Ax = b when a solution exists (nullopt otherwise). With several
/// solutions, free variables are set to zero.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

/// Signature (#positive, #negative) of a symmetric rational matrix, computed
/// by exact symmetric Gaussian reduction (congruence transformations only).
inline std::pair<int, int> symmetric_signature(Matrix<Rational> s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("symmetric_signature: not square");
    const int n = s.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.at(i, j) != s.at(j, i))
                throw std::invalid_argument("symmetric_signature: not symmetric");
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (s.at(k, k).is_zero()) {
            // Fold an off-diagonal entry onto the diagonal by the congruence
            // row_k +-= row_j / col_k +-= col_j. At least one sign choice gives
            // a nonzero diagonal: 2*s_kj + s_jj and -2*s_kj + s_jj cannot both
            // vanish while s_kj != 0.
            int j = -1;
            for (int cand = k + 1; cand < n && j < 0; ++cand)
                if (!s.at(k, cand).is_zero()) j = cand;
            if (j < 0) continue;  // zero row: contributes to the radical
            Rational two_skj = Rational(2) * s.at(k, j);
            Rational sign = (two_skj + s.at(j, j)).is_zero() ? Rational(-1) : Rational(1);
            for (int c = 0; c < n; ++c) s.at(k, c) += sign * s.at(j, c);
            for (int r = 0; r < n; ++r) s.at(r, k) += sign * s.at(r, j);
        }
        Rational d = s.at(k, k);
        if (d.sign() > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (s.at(i, k).is_zero()) continue;
            Rational f = s.at(i, k) / d;
            for (int c = 0; c < n; ++c) s.at(i, c) -= f * s.at(k, c);
            for (int r = 0; r < n; ++r) s.at(r, i) -= f * s.at(r, k);
        }
    }
    return {pos, neg};
}

}  // namespace g2kit
