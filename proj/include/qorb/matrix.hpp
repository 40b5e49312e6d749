#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qorb/qscalar.hpp"

namespace qorb {

// Dense row-major matrix over QScalar. Products skip zero entries, which
// keeps the sparse generator matrices cheap.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<QScalar>& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    QScalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const QScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const;
    Matrix transpose() const;
    // Conjugate transpose.
    Matrix adjoint() const;
    Matrix col(std::size_t j) const;
    std::vector<QScalar> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<QScalar>& v);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const QScalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const QScalar& c) { return a *= c; }
    friend Matrix operator*(const QScalar& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    std::vector<QScalar> apply(const std::vector<QScalar>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<QScalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
// Horizontal and vertical concatenation.
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

// Exact Gaussian elimination; pivots on the first nonzero entry.
std::size_t rank(const Matrix& m);
// Basis of the right nullspace, as columns. Free variables are set to one in
// turn, so each basis vector has a unit entry at its free index.
Matrix nullspace(const Matrix& m);
Matrix inverse(const Matrix& m);
// Solve a X = b for square invertible a.
Matrix solve(const Matrix& a, const Matrix& b);

// Standard inner product <u, v> = sum conj(u_i) v_i.
QScalar inner(const std::vector<QScalar>& u, const std::vector<QScalar>& v);

}  // namespace qorb
