// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "hfret/errors.hpp"
#include "hfret/kernels.hpp"
#include "hfret/rng.hpp"

namespace hfret {

namespace {

constexpr double kMovementTol = 1e-6;

// k-means++: first center uniform, then D^2-weighted sampling. Runs out
// of mass exactly when fewer than k distinct descriptors exist.
Matrix seed_centroids(const Matrix& x, std::size_t k, Rng& rng) {
    const std::size_t n = x.cols();
    const std::size_t dim = x.rows();
    Matrix centroids(dim, k);

    std::vector<double> dist2(n, std::numeric_limits<double>::infinity());
    std::size_t first = rng.below(n);
    std::memcpy(centroids.col(0), x.col(first), dim * sizeof(double));

    for (std::size_t c = 1; c < k; ++c) {
        const double* prev = centroids.col(c - 1);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dist2[i] = std::min(dist2[i], kernels::l2sqr(x.col(i), prev, dim));
            total += dist2[i];
        }
        if (total <= 0.0)
            throw TooFewDescriptors("k-means: fewer than k distinct descriptors");
        const double r = rng.uniform01() * total;
        double running = 0.0;
        std::size_t pick = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            running += dist2[i];
            if (running > r) {
                pick = i;
                break;
            }
        }
        std::memcpy(centroids.col(c), x.col(pick), dim * sizeof(double));
    }
    return centroids;
}

struct AssignPass {
    std::size_t changes = 0;
    double sse = 0.0;
};

AssignPass assign_all(const Matrix& x, const Matrix& centroids,
                      std::vector<std::size_t>& labels, std::vector<double>& nearest2) {
    const std::size_t n = x.cols();
    const std::size_t k = centroids.cols();
    const std::size_t dim = x.rows();
    AssignPass pass;
    for (std::size_t i = 0; i < n; ++i) {
        const double* xi = x.col(i);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_k = 0;
        for (std::size_t c = 0; c < k; ++c) {
            double d = kernels::l2sqr(xi, centroids.col(c), dim);
            if (d < best) {
                best = d;
                best_k = c;
            }
        }
        if (labels[i] != best_k) {
            labels[i] = best_k;
            ++pass.changes;
        }
        nearest2[i] = best;
        pass.sse += best;
    }
    return pass;
}

// Re-seed empty clusters (ascending index) with the descriptor farthest
// from its assigned centroid; each stolen descriptor is reassigned so it
// cannot be picked twice in one repair round. Returns the repair count.
std::size_t repair_empty(const Matrix& x, Matrix& centroids, std::vector<std::size_t>& labels,
                         std::vector<double>& nearest2, const std::vector<std::size_t>& counts) {
    const std::size_t dim = x.rows();
    std::size_t repaired = 0;
    for (std::size_t c = 0; c < centroids.cols(); ++c) {
        if (counts[c] != 0)
            continue;
        double far = -1.0;
        std::size_t pick = 0;
        for (std::size_t i = 0; i < x.cols(); ++i) {
            if (nearest2[i] > far) {
                far = nearest2[i];
                pick = i;
            }
        }
        std::memcpy(centroids.col(c), x.col(pick), dim * sizeof(double));
        labels[pick] = c;
        nearest2[pick] = 0.0;
        ++repaired;
    }
    return repaired;
}

bool has_duplicate_centroids(const Matrix& centroids) {
    for (std::size_t a = 0; a < centroids.cols(); ++a)
        for (std::size_t b = a + 1; b < centroids.cols(); ++b)
            if (kernels::l2sqr(centroids.col(a), centroids.col(b), centroids.rows()) == 0.0)
                return true;
    return false;
}

} // namespace

KmeansResult train_codebook(const Matrix& descriptors, std::size_t k,
                            std::uint64_t seed, std::size_t max_iters) {
    const std::size_t n = descriptors.cols();
    if (n == 0 || descriptors.rows() == 0)
        throw EmptyPatchSet("k-means: no descriptors");
    if (k == 0 || max_iters == 0)
        throw std::invalid_argument("k-means: k and max_iters must be positive");
    if (k > n)
        throw TooFewDescriptors("k-means: k exceeds descriptor count");

    const std::size_t dim = descriptors.rows();
    Rng rng(seed);
    Matrix centroids = seed_centroids(descriptors, k, rng);

    std::vector<std::size_t> labels(n, std::numeric_limits<std::size_t>::max());
    std::vector<double> nearest2(n, 0.0);
    std::vector<std::size_t> counts(k, 0);
    Matrix sums(dim, k);

    KmeansResult result;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        AssignPass pass = assign_all(descriptors, centroids, labels, nearest2);
        if (!std::isfinite(pass.sse))
            throw NonFiniteObjective("k-means: objective is not finite");
        if (!result.objective.empty()) {
            const double prev = result.objective.back();
            if (pass.sse > prev + 1e-10 * std::max(1.0, prev))
                throw NumericError("k-means: objective increased");
        }
        result.objective.push_back(pass.sse);
        result.iterations = iter + 1;
        if (pass.changes == 0)
            break;

        std::fill(counts.begin(), counts.end(), 0);
        std::fill(sums.data(), sums.data() + sums.size(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            kernels::axpy(1.0, descriptors.col(i), sums.col(labels[i]), dim);
            ++counts[labels[i]];
        }
        double movement2 = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0)
                continue;
            double* target = centroids.col(c);
            const double inv = 1.0 / static_cast<double>(counts[c]);
            double m2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double updated = sums(d, c) * inv;
                const double delta = updated - target[d];
                m2 += delta * delta;
                target[d] = updated;
            }
            movement2 = std::max(movement2, m2);
        }
        const std::size_t repaired = repair_empty(descriptors, centroids, labels, nearest2, counts);
        if (repaired == 0 && movement2 < kMovementTol * kMovementTol)
            break;
    }

    // Duplicate centroids leave the higher-index cluster empty under the
    // lowest-index tie break; a repair pass resolves it.
    for (int attempt = 0; attempt < 4 && has_duplicate_centroids(centroids); ++attempt) {
        assign_all(descriptors, centroids, labels, nearest2);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            ++counts[labels[i]];
        repair_empty(descriptors, centroids, labels, nearest2, counts);
    }

    result.codebook.centroids = std::move(centroids);
    return result;
}

std::size_t assign(std::span<const double> descriptor, const Codebook& codebook) {
    if (descriptor.size() != codebook.dim())
        throw DimensionMismatch("assign: descriptor dimension " +
                                std::to_string(descriptor.size()) + " != codebook dimension " +
                                std::to_string(codebook.dim()));
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t c = 0; c < codebook.k(); ++c) {
        double d = kernels::l2sqr(descriptor.data(), codebook.centroids.col(c), codebook.dim());
        if (d < best) {
            best = d;
            best_k = c;
        }
    }
    return best_k;
}

std::vector<double> quantize_image(const Matrix& descriptors, const Codebook& codebook,
                                   std::size_t first_col, std::size_t n_cols) {
    if (n_cols == 0)
        throw EmptyPatchSet("quantize_image: empty patch set");
    if (descriptors.rows() != codebook.dim())
        throw DimensionMismatch("quantize_image: descriptor dimension mismatch");
    std::vector<double> bins(codebook.k(), 0.0);
    for (std::size_t i = 0; i < n_cols; ++i)
        bins[assign(descriptors.col_span(first_col + i), codebook)] += 1.0;
    const double inv = 1.0 / static_cast<double>(n_cols);
    for (double& b : bins)
        b *= inv;
    return bins;
}

std::vector<double> quantize_image(const Matrix& descriptors, const Codebook& codebook) {
    return quantize_image(descriptors, codebook, 0, descriptors.cols());
}

} // namespace hfret
