// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/matrix.hpp"

#include "hfret/errors.hpp"
#include "hfret/kernels.hpp"

namespace hfret {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply: inner dimensions disagree");
    Matrix c(a.rows(), b.cols());
    // c(:,j) = sum_k b(k,j) * a(:,k), one axpy per term over contiguous columns
    for (std::size_t j = 0; j < b.cols(); ++j) {
        double* out = c.col(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double w = b(k, j);
            if (w != 0.0)
                kernels::axpy(w, a.col(k), out, a.rows());
        }
    }
    return c;
}

Matrix multiply_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("multiply_at_b: row counts disagree");
    Matrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            c(i, j) = kernels::dot(a.col(i), b.col(j), a.rows());
    return c;
}

Matrix multiply_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("multiply_a_bt: column counts disagree");
    Matrix c(a.rows(), b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) {
        double* out = c.col(k);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double w = b(k, j);
            if (w != 0.0)
                kernels::axpy(w, a.col(j), out, a.rows());
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            t(c, r) = a(r, c);
    return t;
}

double frobenius_sq_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("frobenius_sq_diff: shapes disagree");
    return kernels::l2sqr(a.data(), b.data(), a.size());
}

Matrix stack_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty())
        return {};
    const std::size_t rows = columns.front().size();
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw DimensionMismatch("stack_columns: ragged column lengths");
        double* out = m.col(j);
        for (std::size_t i = 0; i < rows; ++i)
            out[i] = columns[j][i];
    }
    return m;
}

} // namespace hfret
