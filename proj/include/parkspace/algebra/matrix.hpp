#pragma once

#include "parkspace/algebra/poly.hpp"

#include <vector>

namespace parkspace::algebra {

using Vector = std::vector<Cyclo>;

/// Dense exact matrix over Q(zeta), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Cyclo& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Cyclo& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Cyclo& s) const;
    Vector operator*(const Vector& v) const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    Matrix transpose() const;
    Vector row(std::size_t i) const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Cyclo> a_;
};

/// Reduced row echelon form of the span of `rows`; zero rows dropped.
/// This is the canonical basis used to compare subspaces.
std::vector<Vector> echelon_basis(std::vector<Vector> rows);
std::vector<Vector> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
Cyclo determinant(Matrix m);
/// Solve m x = b for square invertible m.
Vector solve(Matrix m, Vector b);
Matrix inverse(const Matrix& m);

/// dim ker(M - zeta I)
std::size_t eigen_multiplicity(const Matrix& m, const Cyclo& zeta);
/// det(A + x B) as a polynomial in x.
CPoly det_pencil(const Matrix& a, const Matrix& b);
CPoly det_one_minus_qM(const Matrix& m);

Cyclo dot(const Vector& a, const Vector& b);
/// a^T G b
Cyclo bilinear(const Vector& a, const Matrix& g, const Vector& b);
std::string vector_key(const Vector& v);

}  // namespace parkspace::algebra
