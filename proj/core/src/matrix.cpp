#include "rhzeta/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "rhzeta/errors.hpp"

namespace rhz {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw DimensionMismatch("matrix product: inner dimensions differ");
    }
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const double l = lhs(i, k);
            if (l == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
        }
    }
    return out;
}

double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        throw DimensionMismatch("max_abs_diff: shapes differ");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) m = std::max(m, std::abs(lhs(i, j) - rhs(i, j)));
    return m;
}

double max_abs(const Matrix& m) {
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (double v : m.row(i)) r = std::max(r, std::abs(v));
    return r;
}

double orthogonality_defect(const Matrix& q) {
    const Matrix g = q.transpose() * q;
    return max_abs_diff(g, Matrix::identity(q.cols()));
}

}  // namespace rhz
