// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/kernels.hpp"

namespace hfret::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

double l2sqr(const double* x, const double* y, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void mul_ratio(double* x, const double* num, const double* den, double eps,
               std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= num[i] / (den[i] + eps);
}

} // namespace hfret::kernels::scalar
