// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfret/matrix.hpp"

namespace hfret {

struct SigmaMode {
    bool is_auto = true;
    double value = 0.0; // used only when !is_auto

    static SigmaMode automatic() { return {true, 0.0}; }
    static SigmaMode fixed(double sigma) { return {false, sigma}; }
    bool operator==(const SigmaMode&) const = default;
};

// Row-stochastic kNN transition matrix, CSR rows. Node 0 is the query,
// nodes 1..N the database.
struct TransitionMatrix {
    std::size_t node_count = 0;
    std::vector<std::size_t> row_ptr;     // node_count + 1
    std::vector<std::uint32_t> col_index; // sorted within each row
    std::vector<double> value;

    // Validates row sums (1 +/- 1e-9) and entry range; for tests and
    // hand-built graphs.
    static TransitionMatrix from_dense(const std::vector<std::vector<double>>& rows);
};

// Directed kNN graph over the node columns with Gaussian weights
// exp(-d^2 / sigma^2), row-normalized; a row that sums to zero is
// repaired to a self-transition. In auto mode sigma is the mean k-th
// neighbor distance (1 if that mean is 0).
TransitionMatrix build_graph(const Matrix& nodes, std::size_t k, SigmaMode sigma);

// Iterates f <- P f with the query score clamped to 1, starting from
// f = (1, 0, ..., 0); entries stay in [0, 1]. Returns f after
// `iterations` steps.
std::vector<double> transduce(const TransitionMatrix& p, std::size_t iterations);

// Database node indices (1..N) sorted by score descending, ties by
// ascending index; the query node 0 is excluded.
std::vector<std::size_t> rank_by_score(std::span<const double> scores);

// Pairwise cosine baseline mapped to [0,1] via (c+1)/2; zero-norm
// vectors score 0.5. Returns a score vector with f[0] = 1.
std::vector<double> baseline_cosine_scores(std::span<const double> query,
                                           const Matrix& database);

} // namespace hfret
