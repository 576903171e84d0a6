// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfret/matrix.hpp"

namespace hfret {

struct Codebook {
    Matrix centroids; // D x K, one centroid per column

    std::size_t k() const noexcept { return centroids.cols(); }
    std::size_t dim() const noexcept { return centroids.rows(); }
};

struct KmeansResult {
    Codebook codebook;
    // Within-cluster sum of squared distances after each assignment pass;
    // non-increasing, enforced during training.
    std::vector<double> objective;
    std::size_t iterations = 0;
};

// Lloyd's k-means with k-means++ seeding driven by `seed`. Descriptors
// are columns of `descriptors`. Stops when no assignment changes, the
// max centroid movement falls below 1e-6, or after max_iters passes.
// An emptied cluster is re-seeded with the descriptor farthest from its
// assigned centroid. Throws TooFewDescriptors when k exceeds the number
// of distinct descriptors.
KmeansResult train_codebook(const Matrix& descriptors, std::size_t k,
                            std::uint64_t seed, std::size_t max_iters);

// Index of the nearest centroid (Euclidean); ties go to the lowest index.
std::size_t assign(std::span<const double> descriptor, const Codebook& codebook);

// L1-normalized histogram of centroid assignments over columns
// [first_col, first_col + n_cols) of `descriptors`.
std::vector<double> quantize_image(const Matrix& descriptors, const Codebook& codebook,
                                   std::size_t first_col, std::size_t n_cols);
std::vector<double> quantize_image(const Matrix& descriptors, const Codebook& codebook);

} // namespace hfret
