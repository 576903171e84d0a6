// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hfret {

// Dense column-major matrix of doubles. Columns are contiguous, which is
// what the kernels want: descriptors, centroids, histograms and
// coefficient vectors all live in columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    double* col(std::size_t c) { return data_.data() + c * rows_; }
    const double* col(std::size_t c) const { return data_.data() + c * rows_; }
    std::span<const double> col_span(std::size_t c) const { return {col(c), rows_}; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// a * b
Matrix multiply(const Matrix& a, const Matrix& b);
// aT * b
Matrix multiply_at_b(const Matrix& a, const Matrix& b);
// a * bT
Matrix multiply_a_bt(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
// Squared Frobenius norm of (a - b).
double frobenius_sq_diff(const Matrix& a, const Matrix& b);

// K x N matrix whose columns are the given vectors (all the same length).
Matrix stack_columns(const std::vector<std::vector<double>>& columns);

} // namespace hfret
