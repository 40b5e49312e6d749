#include "qorb/matrix.hpp"

#include <utility>

namespace qorb {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = QScalar(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<QScalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero()) t(j, i) = (*this)(i, j).conj();
    return t;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix m(r_, 1);
    for (std::size_t i = 0; i < r_; ++i) m(i, 0) = (*this)(i, j);
    return m;
}

std::vector<QScalar> Matrix::column(std::size_t j) const {
    std::vector<QScalar> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const std::vector<QScalar>& v) {
    if (v.size() != r_) throw std::invalid_argument("Matrix::set_column: size mismatch");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch in +");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch in -");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(const QScalar& c) {
    if (c.is_one()) return *this;
    for (auto& x : a_)
        if (!x.is_zero()) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i) {
        for (std::size_t k = 0; k < a.c_; ++k) {
            const QScalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const QScalar& y = b(k, j);
                if (y.is_zero()) continue;
                m(i, j) += x * y;
            }
        }
    }
    return m;
}

std::vector<QScalar> Matrix::apply(const std::vector<QScalar>& v) const {
    if (v.size() != c_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<QScalar> out(r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < r_; ++i) {
            const QScalar& x = (*this)(i, j);
            if (!x.is_zero()) out[i] += x * v[j];
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const QScalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks.front().cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
        off += b.rows();
    }
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        QScalar inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            QScalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

Matrix nullspace(const Matrix& m) {
    Matrix w = m;
    std::vector<std::size_t> piv = rref(w);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Matrix n(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = QScalar(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (!w(r, free[k]).is_zero()) n(piv[r], k) = -w(r, free[k]);
    }
    return n;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug = hstack({a, b});
    std::vector<std::size_t> piv = rref(aug);
    if (piv.size() < a.cols() || piv[a.cols() - 1] != a.cols() - 1)
        throw std::domain_error("solve: singular matrix");
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& m) { return solve(m, Matrix::identity(m.rows())); }

QScalar inner(const std::vector<QScalar>& u, const std::vector<QScalar>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: size mismatch");
    QScalar acc;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) acc += u[i].conj() * v[i];
    return acc;
}

}  // namespace qorb
