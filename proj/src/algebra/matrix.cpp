#include "parkspace/algebra/matrix.hpp"

#include "parkspace/error.hpp"

namespace parkspace::algebra {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclo(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw UsageError("matrix shape mismatch");
    Matrix r(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Cyclo& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Cyclo& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    Vector r(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

namespace {

// In-place RREF on a list of rows; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Cyclo inv = rows[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Cyclo f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace

std::vector<Vector> echelon_basis(std::vector<Vector> rows) {
    if (rows.empty()) return rows;
    rref(rows, rows[0].size());
    return rows;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    auto rows = rows_of(m);
    auto piv = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Cyclo(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return echelon_basis(std::move(basis));
}

std::size_t rank(const Matrix& m) {
    auto rows = rows_of(m);
    return rref(rows, m.cols()).size();
}

Cyclo determinant(Matrix m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw UsageError("determinant of a non-square matrix");
    Cyclo det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Cyclo(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Cyclo inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Cyclo f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Vector solve(Matrix m, Vector b) {
    std::size_t n = m.rows();
    if (n == 0) return {};
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = m.row(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    auto piv = rref(rows, n + 1);
    if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular linear system");
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

Matrix inverse(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Matrix();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = m.row(i);
        r.resize(2 * n);
        r[n + i] = Cyclo(1);
        rows.push_back(std::move(r));
    }
    auto piv = rref(rows, 2 * n);
    if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
    return inv;
}

std::size_t eigen_multiplicity(const Matrix& m, const Cyclo& zeta) {
    Matrix a = m;
    for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) -= zeta;
    return m.cols() - rank(a);
}

CPoly det_pencil(const Matrix& a, const Matrix& b) {
    // Interpolate through x = 0..n.
    std::size_t n = a.rows();
    std::vector<Cyclo> ys;
    for (std::size_t k = 0; k <= n; ++k) ys.push_back(determinant(a + b * Cyclo(static_cast<long>(k))));
    CPoly result;
    for (std::size_t k = 0; k <= n; ++k) {
        CPoly basis(1);
        Rational denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis *= CPoly(std::vector<Cyclo>{Cyclo(-static_cast<long>(j)), Cyclo(1)});
            denom *= Rational(static_cast<long>(k) - static_cast<long>(j));
        }
        result += basis * (ys[k] * Cyclo(Rational(1) / denom));
    }
    return result;
}

CPoly det_one_minus_qM(const Matrix& m) {
    return det_pencil(Matrix::identity(m.rows()), m * Cyclo(-1));
}

Cyclo dot(const Vector& a, const Vector& b) {
    Cyclo s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Cyclo bilinear(const Vector& a, const Matrix& g, const Vector& b) { return dot(a, g * b); }

std::string vector_key(const Vector& v) {
    std::string s;
    for (const auto& x : v) {
        s += x.to_string();
        s += ';';
    }
    return s;
}

}  // namespace parkspace::algebra
