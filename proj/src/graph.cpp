// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hfret/errors.hpp"
#include "hfret/kernels.hpp"

namespace hfret {

TransitionMatrix TransitionMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
    TransitionMatrix p;
    p.node_count = rows.size();
    p.row_ptr.push_back(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DimensionMismatch("TransitionMatrix: not square");
        double sum = 0.0;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const double w = rows[i][j];
            if (!(w >= 0.0 && w <= 1.0))
                throw std::invalid_argument("TransitionMatrix: entries must lie in [0,1]");
            if (w > 0.0) {
                p.col_index.push_back(static_cast<std::uint32_t>(j));
                p.value.push_back(w);
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("TransitionMatrix: row " + std::to_string(i) +
                                        " sums to " + std::to_string(sum));
        p.row_ptr.push_back(p.col_index.size());
    }
    return p;
}

TransitionMatrix build_graph(const Matrix& nodes, std::size_t k, SigmaMode sigma) {
    const std::size_t n = nodes.cols();
    const std::size_t dim = nodes.rows();
    if (n < 2)
        throw std::invalid_argument("build_graph: need at least 2 nodes");
    if (dim == 0)
        throw DimensionMismatch("build_graph: zero-dimensional nodes");
    if (k == 0 || k > n - 1)
        throw KTooLarge("build_graph: k must satisfy 1 <= k <= N");
    if (!sigma.is_auto && !(sigma.value > 0.0))
        throw std::invalid_argument("build_graph: fixed sigma must be positive");

    std::vector<double> dist2(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = kernels::l2sqr(nodes.col(i), nodes.col(j), dim);
            dist2[i * n + j] = d;
            dist2[j * n + i] = d;
        }

    // k nearest others per node, ties to the lower index
    std::vector<std::vector<std::uint32_t>> neighbors(n);
    std::vector<std::uint32_t> order(n);
    double kth_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        order.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                order.push_back(static_cast<std::uint32_t>(j));
        const double* row = dist2.data() + i * n;
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                          order.end(), [row](std::uint32_t a, std::uint32_t b) {
                              if (row[a] != row[b])
                                  return row[a] < row[b];
                              return a < b;
                          });
        kth_sum += std::sqrt(row[order[k - 1]]);
        neighbors[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(neighbors[i].begin(), neighbors[i].end());
    }

    double sig = sigma.is_auto ? kth_sum / static_cast<double>(n) : sigma.value;
    if (sigma.is_auto && sig == 0.0)
        sig = 1.0;
    const double inv_sig2 = 1.0 / (sig * sig);

    TransitionMatrix p;
    p.node_count = n;
    p.row_ptr.push_back(0);
    std::vector<double> weights(k);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t m = 0; m < k; ++m) {
            weights[m] = std::exp(-dist2[i * n + neighbors[i][m]] * inv_sig2);
            sum += weights[m];
        }
        if (sum > 0.0) {
            for (std::size_t m = 0; m < k; ++m) {
                p.col_index.push_back(neighbors[i][m]);
                p.value.push_back(weights[m] / sum);
            }
        } else {
            // all weights underflowed: repair to a self-transition
            p.col_index.push_back(static_cast<std::uint32_t>(i));
            p.value.push_back(1.0);
        }
        p.row_ptr.push_back(p.col_index.size());
    }
    return p;
}

std::vector<double> transduce(const TransitionMatrix& p, std::size_t iterations) {
    if (p.node_count == 0 || p.row_ptr.size() != p.node_count + 1)
        throw std::invalid_argument("transduce: malformed transition matrix");
    if (iterations == 0)
        throw std::invalid_argument("transduce: need at least one iteration");

    std::vector<double> f(p.node_count, 0.0), next(p.node_count, 0.0);
    f[0] = 1.0;
    for (std::size_t t = 0; t < iterations; ++t) {
        for (std::size_t i = 1; i < p.node_count; ++i) {
            double acc = 0.0;
            for (std::size_t e = p.row_ptr[i]; e < p.row_ptr[i + 1]; ++e)
                acc += p.value[e] * f[p.col_index[e]];
            next[i] = std::clamp(acc, 0.0, 1.0);
        }
        next[0] = 1.0;
        f.swap(next);
    }
    return f;
}

std::vector<std::size_t> rank_by_score(std::span<const double> scores) {
    if (scores.size() < 2)
        return {};
    std::vector<std::size_t> idx(scores.size() - 1);
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b])
            return scores[a] > scores[b];
        return a < b;
    });
    return idx;
}

std::vector<double> baseline_cosine_scores(std::span<const double> query,
                                           const Matrix& database) {
    if (query.size() != database.rows())
        throw DimensionMismatch("baseline_cosine_scores: dimension mismatch");
    const std::size_t n = database.cols();
    std::vector<double> f(n + 1, 0.0);
    f[0] = 1.0;
    const double qnorm = std::sqrt(kernels::dot(query.data(), query.data(), query.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const double* x = database.col(i);
        const double xnorm = std::sqrt(kernels::dot(x, x, database.rows()));
        if (qnorm == 0.0 || xnorm == 0.0) {
            f[i + 1] = 0.5;
            continue;
        }
        const double c = kernels::dot(query.data(), x, database.rows()) / (qnorm * xnorm);
        f[i + 1] = std::clamp((c + 1.0) / 2.0, 0.0, 1.0);
    }
    return f;
}

} // namespace hfret
