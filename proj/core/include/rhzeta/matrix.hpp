// matrix.hpp - small dense row-major matrix used by the synthesis pipeline
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rhz {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    std::vector<double> column(std::size_t j) const;

    Matrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);

/// max_ij |A_ij - B_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const Matrix& lhs, const Matrix& rhs);

/// max_ij |A_ij|
double max_abs(const Matrix& m);

/// max_ij |(Q^T Q - I)_ij|
double orthogonality_defect(const Matrix& q);

}  // namespace rhz
