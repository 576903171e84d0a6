// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfret/matrix.hpp"

namespace hfret {

struct NmfResult {
    Matrix basis;        // W, K x R
    Matrix coefficients; // H, R x N
    // ||V - W H||_F^2 at initialization and after every update sweep;
    // non-increasing within floating-point jitter.
    std::vector<double> objective;
};

// Frobenius NMF by alternating multiplicative updates
//   H <- H .* (W'V) ./ (W'W H + eps)
//   W <- W .* (V H') ./ (W H H' + eps)
// with eps = 1e-12. W and H start uniform in (0,1] from `seed`. Stops
// when the relative objective decrease drops below tol or after
// max_iters sweeps. Throws RankTooLarge and NonFiniteObjective.
NmfResult nmf_factorize(const Matrix& v, std::size_t rank, std::size_t max_iters,
                        double tol, std::uint64_t seed);

struct NmfProjection {
    std::vector<double> coefficients; // length R
    std::vector<double> objective;    // ||h - W c||^2 trace
};

// Fits coefficients for one histogram against a frozen basis:
//   c <- c .* (W'h) ./ (W'W c + eps).
NmfProjection nmf_project(std::span<const double> histogram, const Matrix& basis,
                          std::size_t max_iters, double tol, std::uint64_t seed);

// ||V - W H||_F^2.
double reconstruction_error(const Matrix& v, const Matrix& w, const Matrix& h);

} // namespace hfret
